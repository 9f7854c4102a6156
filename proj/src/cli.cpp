#include "baire/cli.hpp"

#include <omp.h>

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "baire/io.hpp"

namespace baire {

namespace {

const char* kGrammar = R"G(Expression grammar:
  expr  := atom | f1 "(" expr ")" | f2 "(" expr "," expr ")"
  atom  := open | closed | analytic | coanalytic | borel
  f1    := compl | Uc | Ic | preimg | proj
  f2    := union | inter
Uc/Ic are countable union/intersection, preimg is a continuous preimage,
proj a projection along Baire space. Whitespace is ignored.)G";

struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

VerdictKind witness_kind(const Witness& w) {
  return std::holds_alternative<DiscontinuityWitness>(w) ? VerdictKind::Discontinuous : VerdictKind::Continuous;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

struct Session {
  std::vector<std::string> args;
  bool timing = false;
  bool summary = false;
  int threads = 0;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  Json report(const std::string& digest_of, Json result) const {
    Json r = {{"command", args}, {"digest", digest(digest_of)}, {"version", kVersion}, {"result", std::move(result)}};
    if (timing) {
      auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
      r["wall_time_us"] = std::to_string(us.count());
    }
    return r;
  }
};

// Checks every point of an instance, in parallel across points.
Json check_points(const Instance& inst, const Session& s, std::ostream& err, bool& inconclusive) {
  const auto& built = inst.built;
  auto verdicts = continuity_points(built.map, inst.points, inst.mode, inst.cfg, built.probes);
  Json rows = Json::array();
  for (std::size_t i = 0; i < verdicts.size(); ++i) {
    Json row = verdict_to_json(built.map, verdicts[i]);
    row["point"] = format_point(built.map.domain, inst.points[i]);
    if (verdicts[i].kind == VerdictKind::Inconclusive) inconclusive = true;
    if (s.summary) err << row["point"].get<std::string>() << ": " << verdict_name(verdicts[i].kind) << "\n";
    rows.push_back(std::move(row));
  }
  return rows;
}

// Runs a gallery instance: the proof-derived witness, its verification, and the
// generic checker for comparison.
Json run_gallery(const Instance& inst, const Session& s, std::ostream& err, bool& inconclusive, bool& rejected) {
  const auto& built = inst.built;
  auto verdicts = continuity_points(built.map, inst.points, inst.mode, inst.cfg, built.probes);
  Json rows = Json::array();
  for (std::size_t i = 0; i < inst.points.size(); ++i) {
    const Point& x = inst.points[i];
    Json row = {{"point", format_point(built.map.domain, x)}, {"checker", verdict_to_json(built.map, verdicts[i])}};
    std::optional<Witness> w;
    if (built.witness) w = built.witness(x, inst.mode, inst.cfg);
    std::string source = "proof";
    if (!w && verdicts[i].witness) {
      w = verdicts[i].witness;
      source = "checker";
    }
    if (w) {
      auto vc = verify_witness(built.map, x, *w, inst.cfg, built.probes);
      row["verdict"] = verdict_name(witness_kind(*w));
      row["witness"] = witness_to_json(built.map, *w);
      row["witness_source"] = source;
      row["verified"] = vc.ok;
      if (!vc.ok) {
        row["verify_reason"] = vc.reason;
        rejected = true;
      }
      row["agrees_with_checker"] = verdicts[i].kind == witness_kind(*w);
    } else {
      row["verdict"] = verdict_name(VerdictKind::Inconclusive);
      inconclusive = true;
    }
    if (s.summary) {
      err << row["point"].get<std::string>() << ": " << row["verdict"].get<std::string>()
          << (row.value("verified", false) ? " (witness verified)" : "") << "\n";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

Json embed_report(const std::string& alpha_text, Nat depth) {
  const BairePoint a = parse_baire(alpha_text);
  Json chain = Json::array();
  const Seq prefix = a.take(depth);
  for (std::size_t n = 0; n <= prefix.size(); ++n) {
    Node u(prefix.begin(), prefix.begin() + static_cast<std::ptrdiff_t>(n));
    Interval iv = interval_of(u);
    chain.push_back({{"node", node_str(u)}, {"interval", Json::array({iv.lo.str(), iv.hi.str()})}});
  }
  return {{"alpha", to_string(a)}, {"depth", depth}, {"chain", chain}, {"point", baire_embed_point(a).str()}};
}

std::vector<Node> parse_node_list(const std::string& text) {
  std::vector<Node> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '(') {
      auto close = text.find(')', i);
      if (close == std::string::npos) throw InputError("unterminated node at offset " + std::to_string(i));
      out.push_back(parse_node(text.substr(i, close - i + 1)));
      i = close + 1;
    } else if (text[i] == ',' || text[i] == ' ' || text[i] == ';') {
      ++i;
    } else {
      throw InputError("unexpected '" + std::string(1, text[i]) + "' at offset " + std::to_string(i));
    }
  }
  return out;
}

Json nodes_json(const std::set<Node>& nodes) {
  Json out = Json::array();
  for (const auto& u : nodes) out.push_back(node_str(u));
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Session s;
  s.args = args;

  CLI::App app{"Exact continuity checks for multi-valued maps on Polish spaces.", "baire_lab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--timing", s.timing, "add wall_time_us to the report (breaks byte-identity)");
  app.add_flag("--summary", s.summary, "human-readable summary on stderr");
  app.add_option("--threads", s.threads, "OpenMP threads for per-point checks (0 = runtime default)")
      ->check(CLI::NonNegativeNumber);

  auto* classify_cmd = app.add_subcommand("classify", "infer the pointclass of a set expression");
  classify_cmd->footer(kGrammar);
  std::string expr_text;
  classify_cmd->add_option("expr", expr_text, "expression")->required();

  auto* check = app.add_subcommand("check", "run a checker on an instance file");
  std::string instance_path;
  std::vector<std::string> point_texts;
  std::string mode_text;
  check->add_option("instance", instance_path, "instance JSON file")->required();
  check->add_option("--point", point_texts, "point(s) to check; overrides the file");
  check->add_option("--mode", mode_text, "plain|strong|star|dagger|strong_star|fell");

  auto* gallery = app.add_subcommand("gallery", "proof-derived witnesses for the shipped examples");
  std::string gname, gamma = "all_zero", tree_text = "tree{nodes:[()]}", x_text, points_csv, alpha = ";0",
                     spec_path, gmode;
  Nat window = 8, depth = 3;
  bool harmonic = false;
  gallery->add_option("name", gname, "f1 | f2 | dense_split:dyadic | dense_split:thirds | spike | embed | extend | compose")
      ->required();
  gallery->add_option("--gamma", gamma, "grid point for f1");
  gallery->add_option("--window", window, "row window M for f1");
  gallery->add_option("--tree", tree_text, "tree literal for f2");
  gallery->add_option("--x", x_text, "rational point for dense_split and spike");
  gallery->add_option("--points", points_csv, "comma-separated spike points");
  gallery->add_flag("--harmonic", harmonic, "spike at 1/(n+1)");
  gallery->add_option("--alpha", alpha, "Baire point 'prefix;period' for embed");
  gallery->add_option("--depth", depth, "chain depth for embed");
  gallery->add_option("--spec", spec_path, "instance file for extend and compose");
  gallery->add_option("--mode", gmode, "checker mode (defaults per example)");

  auto* tree = app.add_subcommand("tree", "tree operations");
  tree->require_subcommand(1);
  tree->fallthrough();
  std::string tree_arg;
  auto* t_shift = tree->add_subcommand("shift", "T+1: every entry incremented");
  auto* t_trm = tree->add_subcommand("trm", "terminal nodes");
  auto* t_if = tree->add_subcommand("illfounded", "whether the tree has an infinite branch");
  auto* t_gen = tree->add_subcommand("generate", "least tree containing the listed nodes");
  for (auto* sub : {t_shift, t_trm, t_if}) sub->add_option("tree", tree_arg, "tree literal")->required();
  t_gen->add_option("nodes", tree_arg, "node list, e.g. \"(0,1),(2)\"")->required();

  auto* embed = app.add_subcommand("embed", "nested-interval image of a Baire point");
  embed->add_option("--alpha", alpha, "Baire point 'prefix;period'");
  embed->add_option("--depth", depth, "chain depth");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitInput;
  }
  if (s.threads > 0) omp_set_num_threads(s.threads);

  auto emit = [&](const Json& r) { out << r.dump(2) << "\n"; };
  auto input_error = [&](const std::string& what, Json detail) {
    err << "error: " << what << "\n";
    detail["message"] = what;
    emit(s.report(what, {{"error", detail}}));
    return kExitInput;
  };

  try {
    if (classify_cmd->parsed()) {
      SetExpr e;
      try {
        e = parse_expr(expr_text);
      } catch (const ParseError& pe) {
        return input_error(pe.what(), {{"offset", pe.offset}, {"expected", pe.expected}});
      }
      auto c = classify(e);
      Json result = classification_to_json(c);
      result["expr"] = e.str();
      SetExpr d = dual_expr(e);
      result["dual"] = {{"expr", d.str()}, {"class", classify(d).result.str()}};
      if (s.summary) err << e.str() << " : " << c.result.str() << "\n";
      emit(s.report(e.str(), result));
      return kExitOk;
    }

    if (check->parsed()) {
      Json spec = read_json_file(instance_path);
      if (!point_texts.empty()) spec["points"] = point_texts;
      if (!mode_text.empty()) spec["mode"] = mode_text;
      Instance inst = instance_from_json(spec);
      if (inst.points.empty()) throw SchemaError("$.points", "no points to check");
      bool inconclusive = false;
      Json result = {{"mode", mode_name(inst.mode)}, {"config", config_to_json(inst.cfg)},
                     {"verdicts", check_points(inst, s, err, inconclusive)}};
      emit(s.report(spec.dump(), result));
      return inconclusive ? kExitInconclusive : kExitOk;
    }

    if (gallery->parsed()) {
      if (gname == "embed") {
        Json result = embed_report(alpha, depth);
        emit(s.report(result.dump(), result));
        return kExitOk;
      }
      Json spec;
      if (gname == "f1") {
        spec = {{"multimap", {{"kind", "f1"}, {"window", window}}}, {"points", {gamma}}, {"mode", "plain"},
                {"config", config_to_json(f1_check_config())}};
      } else if (gname == "f2") {
        spec = {{"multimap", {{"kind", "f2"}}}, {"points", {tree_text}}, {"mode", "plain"},
                {"config", config_to_json(f2_check_config())}};
      } else if (gname.rfind("dense_split:", 0) == 0) {
        if (x_text.empty()) throw InputError("dense_split needs --x");
        spec = {{"multimap", {{"kind", "dense_split"}, {"set", gname.substr(12)}}},
                {"points", {x_text}},
                {"mode", "strong"}};
      } else if (gname == "spike") {
        if (x_text.empty()) throw InputError("spike needs --x");
        Json mm = {{"kind", "spike"}};
        if (harmonic) {
          mm["harmonic"] = true;
        } else {
          Json pts = Json::array();
          std::stringstream ss(points_csv);
          for (std::string tok; std::getline(ss, tok, ',');) pts.push_back(tok);
          mm["points"] = pts;
        }
        spec = {{"multimap", mm}, {"points", {x_text}}, {"mode", "plain"}};
      } else if (gname == "extend" || gname == "compose") {
        if (spec_path.empty()) throw InputError(gname + " needs --spec");
        spec = read_json_file(spec_path);
        const Json& mm = spec.contains("multimap") ? spec["multimap"] : Json();
        if (!mm.is_object() || mm.value("kind", "") != gname) {
          throw SchemaError("$.multimap.kind", "expected '" + gname + "'");
        }
      } else {
        return input_error("unknown gallery example '" + gname + "'", {{"name", gname}});
      }
      if (!gmode.empty()) spec["mode"] = gmode;
      Instance inst = instance_from_json(spec);
      if (inst.points.empty()) throw SchemaError("$.points", "no points to check");
      bool inconclusive = false, rejected = false;
      Json result = {{"name", gname}, {"instance", spec}, {"results", run_gallery(inst, s, err, inconclusive, rejected)}};
      emit(s.report(spec.dump(), result));
      if (rejected) return kExitInconclusive;
      return inconclusive ? kExitInconclusive : kExitOk;
    }

    if (tree->parsed()) {
      Json result;
      if (t_gen->parsed()) {
        Tree t = generated_by(parse_node_list(tree_arg));
        result = {{"op", "generate"}, {"tree", t.str()}};
      } else {
        Tree t = Tree::parse(tree_arg);
        if (t_shift->parsed()) result = {{"op", "shift"}, {"tree", tree_shift(t).str()}};
        if (t_trm->parsed()) result = {{"op", "trm"}, {"terminals", nodes_json(terminals(t))}};
        if (t_if->parsed()) result = {{"op", "illfounded"}, {"illfounded", is_ill_founded(t)}};
        result["input"] = t.str();
      }
      emit(s.report(result.dump(), result));
      return kExitOk;
    }

    if (embed->parsed()) {
      Json result = embed_report(alpha, depth);
      emit(s.report(result.dump(), result));
      return kExitOk;
    }
  } catch (const SchemaError& e) {
    return input_error(e.what(), {{"path", e.path}});
  } catch (const std::invalid_argument& e) {
    return input_error(e.what(), Json::object());
  } catch (const std::out_of_range& e) {
    return input_error(e.what(), Json::object());
  }
  return kExitInput;
}

}  // namespace baire
