// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <omp.h>

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>

#include "baire/cli.hpp"
#include "support.hpp"

using namespace baire;
using namespace baire::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Runs body(i) for i < n in parallel until the deadline; returns how many ran.
std::uint64_t budgeted_for(std::uint64_t n, double budget_s, const std::function<void(std::uint64_t)>& body) {
  const auto t0 = Clock::now();
  std::atomic<bool> stop{false};
  std::atomic<std::uint64_t> done{0};
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(n); ++i) {
    if (stop.load(std::memory_order_relaxed)) continue;
    body(static_cast<std::uint64_t>(i));
    done.fetch_add(1, std::memory_order_relaxed);
    if ((i & 15) == 0 && seconds_since(t0) > budget_s) stop = true;
  }
  return done.load();
}

struct Tally {
  std::mutex mu;
  std::uint64_t bad = 0;
  std::string first;
  void fail(const std::string& what) {
    std::lock_guard<std::mutex> lock(mu);
    if (bad++ == 0) first = what;
  }
};

bool conclusive(const Verdict& v) { return v.kind != VerdictKind::Inconclusive; }

// ---- 1 ----
Outcome criterion1() {
  const auto t0 = Clock::now();
  const std::pair<const char*, const char*> cases[] = {
      {"Ic(Uc(open))", "Pi0(2)"},
      {"Uc(Ic(Uc(open)))", "Sigma0(3)"},
      {"proj(inter(analytic, Ic(open)))", "Sigma1(1)"},
      {"compl(proj(inter(borel, Ic(Ic(union(compl(Uc(closed)), open))))))", "Pi1(1)"},
  };
  Outcome o;
  for (const auto& [expr, want] : cases) {
    std::ostringstream out, err;
    const int code = run_cli({"classify", expr}, out, err);
    const auto got = Json::parse(out.str())["result"]["class"].get<std::string>();
    if (code != 0 || got != want) {
      o.pass = false;
      o.detail += std::string(expr) + " -> " + got + "; ";
    }
  }
  const double t = seconds_since(t0);
  if (t >= 1.0) o.pass = false;
  o.detail += "4 expressions in " + std::to_string(t) + " s";
  return o;
}

// ---- 2 ----
Outcome criterion2() {
  const auto t0 = Clock::now();
  const auto corpus = f1_corpus();
  const auto F = f1_multimap(8);
  const auto probes = f1_probes(8);
  const auto cfg = f1_check_config();
  Tally wrong_kind, rejected;
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto w = f1_witness(corpus[i], 8, cfg);
    const bool cont = kind_of(w) == VerdictKind::Continuous;
    if (cont != f1_in_r(corpus[i])) wrong_kind.fail(grid_str(corpus[i]));
    auto vc = verify_witness(F, corpus[i], w, cfg, probes);
    if (!vc) rejected.fail(grid_str(corpus[i]) + ": " + vc.reason);
  }
  const double t = seconds_since(t0);
  Outcome o{wrong_kind.bad == 0 && rejected.bad == 0 && corpus.size() >= 50 && t < 10.0, ""};
  o.detail = std::to_string(corpus.size()) + " grids, " + std::to_string(wrong_kind.bad) + " kind mismatches, " +
             std::to_string(rejected.bad) + " rejected witnesses, " + std::to_string(t) + " s";
  if (!wrong_kind.first.empty()) o.detail += "; first mismatch " + wrong_kind.first;
  if (!rejected.first.empty()) o.detail += "; first rejection " + rejected.first;
  return o;
}

// ---- 3 ----
Outcome criterion3() {
  const auto corpus = f1_corpus();
  std::uint64_t checked = 0, bad = 0;
  std::string first;
  for (const auto& g : corpus) {
    const auto value = std::get<FiniteRealSet>(f1_value(g, 8));
    for (long k = 0; k <= 108; ++k) {
      const Rational y(k, 12);
      const bool in_value = std::find(value.points.begin(), value.points.end(), y) != value.points.end();
      bool ok = f1_graph_member(g, y, Nat{8}) == in_value;
      if (k < 108) ok = ok && f1_graph_member(g, y) == in_value;
      ++checked;
      if (!ok && bad++ == 0) first = grid_str(g) + " at " + y.str();
    }
  }
  return {bad == 0, std::to_string(checked) + " (grid, y) pairs, " + std::to_string(bad) + " disagreements" +
                        (first.empty() ? "" : "; first " + first)};
}

// ---- 4 ----
Outcome criterion4(double budget_s) {
  const auto t0 = Clock::now();
  const TernaryTrees trees;
  const auto branchy = branch_trees();
  const auto F = f2_multimap();
  const auto probes = f2_probes();
  const auto cfg = CheckConfig::defaults();
  Tally wrong_kind, rejected;
  auto one = [&](const Tree& t) {
    const auto w = f2_witness(t, cfg);
    if ((kind_of(w) == VerdictKind::Continuous) != is_ill_founded(t)) wrong_kind.fail(t.str());
    auto vc = verify_witness(F, t, w, cfg, probes);
    if (!vc) rejected.fail(t.str() + ": " + vc.reason);
  };
  for (const auto& t : branchy) one(t);
  const std::uint64_t total = TernaryTrees::size();
  const double left = budget_s - seconds_since(t0);
  const std::uint64_t done = left > 0 ? budgeted_for(total, left, [&](std::uint64_t i) { one(trees.at(i)); }) : 0;
  const double t = seconds_since(t0);
  Outcome o;
  o.pass = done == total && wrong_kind.bad == 0 && rejected.bad == 0 && t < 60.0;
  std::ostringstream d;
  d << done << " of " << total << " enumerated trees + " << branchy.size() << " branch trees in " << t << " s, "
    << wrong_kind.bad << " kind mismatches, " << rejected.bad << " rejected witnesses";
  if (done < total) {
    d << "; budget exhausted (projected " << (t / static_cast<double>(done + branchy.size()) * total / 3600.0)
      << " h for the full enumeration)";
  }
  if (!wrong_kind.first.empty()) d << "; first mismatch " << wrong_kind.first;
  if (!rejected.first.empty()) d << "; first rejection " << rejected.first;
  o.detail = d.str();
  return o;
}

// ---- 5 ----
struct Agreement {
  std::atomic<std::uint64_t> both{0}, disagree{0}, total{0};
  Tally first;
  void record(const std::string& what, const Verdict& a, const Verdict& b) {
    ++total;
    if (!conclusive(a) || !conclusive(b)) return;
    ++both;
    if (a.kind != b.kind) {
      ++disagree;
      first.fail(what + " plain=" + verdict_name(a.kind) + " star=" + verdict_name(b.kind));
    }
  }
};

Outcome criterion5(double f2_budget_s) {
  Agreement f1, f2, tab;
  {
    const auto corpus = f1_corpus();
    const auto F = f1_multimap(8);
    const auto probes = f1_probes(8);
    const auto cfg = f1_check_config();
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      f1.record(grid_str(corpus[i]), check_continuity(F, corpus[i], cfg, probes), eval_star(F, corpus[i], cfg, probes));
    }
  }
  std::uint64_t f2_done = 0;
  const TernaryTrees trees;
  {
    const auto F = f2_multimap();
    const auto probes = f2_probes();
    const auto cfg = f2_check_config();
    auto one = [&](const Tree& t) {
      f2.record(t.str(), check_continuity(F, t, cfg, probes), eval_star(F, t, cfg, probes));
    };
    for (const auto& t : branch_trees()) one(t);
    f2_done = budgeted_for(TernaryTrees::size(), f2_budget_s, [&](std::uint64_t i) { one(trees.at(i)); });
  }
  {
    Rng rng(505);
    const auto cfg = CheckConfig::defaults();
    for (int k = 0; k < 20; ++k) {
      const auto t = random_tabular(rng);
      const auto F = t.map();
      const auto probes = finite_domain_probes(t.domain);
      for (const auto& x : t.points()) {
        tab.record("tabular#" + std::to_string(k), check_continuity(F, x, cfg, probes), eval_star(F, x, cfg, probes));
      }
    }
  }
  const std::uint64_t disagree = f1.disagree + f2.disagree + tab.disagree;
  const bool covered = f2_done == TernaryTrees::size();
  std::ostringstream d;
  auto part = [&](const char* name, Agreement& a) {
    d << name << " " << a.both << "/" << a.total << " both conclusive, " << a.disagree << " disagree; ";
  };
  part("f1", f1);
  part("f2", f2);
  part("tabular", tab);
  d << "f2 enumeration covered " << f2_done << " of " << TernaryTrees::size();
  for (Agreement* a : {&f1, &f2, &tab}) {
    if (!a->first.first.empty()) {
      d << "; first disagreement " << a->first.first;
      break;
    }
  }
  return {disagree == 0 && covered, d.str()};
}

// ---- 6 ----
Outcome criterion6() {
  const auto cfg = CheckConfig::defaults();
  std::vector<Rational> dyadic_sample = {R(0), R(1), R(1, 2), R(1, 4), R(3, 4), R(5, 8), R(1, 16), R(13, 32),
                                         R(255, 256), R(1, 1024), R(1, 3), R(2, 3), R(1, 5), R(2, 7), R(5, 9),
                                         R(7, 10), R(11, 12), R(1, 100), R(99, 100), R(3, 11)};
  std::vector<Rational> spike_sample = {R(1), R(1, 2), R(1, 3), R(1, 4), R(1, 5), R(1, 6), R(1, 7), R(1, 8),
                                        R(1, 9), R(1, 10), R(0), R(2, 3), R(2, 5), R(2, 7), R(3, 4), R(-1),
                                        R(3, 2), R(5, 12), R(5, 6), R(-1, 2)};
  std::uint64_t bad = 0;
  std::string first;
  const auto D = dense_split(DenseSpec::Dyadic);
  const auto dp = dense_split_probes(DenseSpec::Dyadic);
  for (const auto& q : dyadic_sample) {
    const auto v = check_strong_continuity(D, q, cfg, dp);
    const bool want = in_dense_set(DenseSpec::Dyadic, q);
    if (v.kind != (want ? VerdictKind::Continuous : VerdictKind::Discontinuous) && bad++ == 0) {
      first = "dense_split at " + q.str() + ": " + verdict_name(v.kind);
    }
  }
  const auto spec = SpikeSpec::harmonic_list();
  const auto S = spike_function(spec);
  const auto sp = spike_probes(spec);
  for (const auto& q : spike_sample) {
    const auto v = check_continuity(S, q, cfg, sp);
    const bool in_a = spec.index_of(q).has_value();
    if (v.kind != (in_a ? VerdictKind::Discontinuous : VerdictKind::Continuous) && bad++ == 0) {
      first = "spike at " + q.str() + ": " + verdict_name(v.kind);
    }
  }
  return {bad == 0, "20 dense_split + 20 spike samples, " + std::to_string(bad) + " disagreements" +
                        (first.empty() ? "" : "; first " + first)};
}

// ---- 7 ----
Outcome criterion7() {
  Rng rng(707);
  const auto cfg = CheckConfig::defaults();
  std::uint64_t bad = 0, checked = 0;
  std::string first;
  auto note = [&](bool ok, const std::string& what) {
    ++checked;
    if (!ok && bad++ == 0) first = what;
  };
  // extend: X0 sits isometrically inside X1; new points are at distance 1 from everything.
  for (int k = 0; k < 10; ++k) {
    const std::size_t n0 = 2 + rng() % 3, extra = 1 + rng() % 2, n1 = n0 + extra;
    const auto m0 = random_ultrametric(rng, n0, domain_levels(), "a");
    std::vector<std::size_t> perm(n1);
    for (std::size_t i = 0; i < n1; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<std::size_t> image(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(n0));
    std::vector<std::vector<Rational>> t1(n1, std::vector<Rational>(n1, Rational(1)));
    for (std::size_t i = 0; i < n1; ++i) t1[i][i] = 0;
    for (std::size_t i = 0; i < n0; ++i) {
      for (std::size_t j = 0; j < n0; ++j) t1[image[i]][image[j]] = m0.table[i][j];
    }
    std::vector<std::string> l1;
    for (std::size_t i = 0; i < n1; ++i) l1.push_back("b" + std::to_string(i));
    const auto X0 = PointSpace::finite(m0);
    const auto X1 = PointSpace::finite(FiniteMetric(l1, t1));
    const bool unit = k % 2 == 1;
    const auto cod = unit ? PointSpace::unit_interval()
                          : PointSpace::finite(random_ultrametric(rng, 3, {R(1, 4), R(1)}, "c"));
    std::vector<ClosedSet> values;
    for (std::size_t i = 0; i < n0; ++i) {
      if (unit) {
        values.push_back(finite_real({R(static_cast<long>(rng() % 9), 8)}));
      } else {
        values.push_back(finite_points({rng() % 3}));
      }
    }
    const auto F0 = tabular(X0, cod, values);
    const FiniteEmbedding f(X0, X1, image);
    const auto G = extend(F0, f);
    const auto p0 = finite_domain_probes(X0), p1 = finite_domain_probes(X1);
    for (std::size_t j = 0; j < n1; ++j) {
      const bool in_p1 = check_continuity(G, FiniteLabel{j}, cfg, p1).kind == VerdictKind::Continuous;
      bool want = true;
      if (auto pre = f.preimage(j)) {
        want = check_continuity(F0, FiniteLabel{*pre}, cfg, p0).kind == VerdictKind::Continuous;
      }
      note(in_p1 == want, "extend#" + std::to_string(k) + " at b" + std::to_string(j));
    }
  }
  // compose: continuity points of pi o F equal those of F.
  auto compare = [&](const std::string& name, const MultiMap& F, const MultiMap& PF, const ProbeGen& probes,
                     const std::vector<Point>& xs, const CheckConfig& c) {
    for (const auto& x : xs) {
      const auto a = check_continuity(F, x, c, probes), b = check_continuity(PF, x, c, probes);
      note(conclusive(a) && a.kind == b.kind, name + " at " + point_str(x));
    }
  };
  const AffineMap affines[] = {{R(2), R(1)}, {R(-1, 2), R(3)}, {R(3), R(-1)}};
  for (int k = 0; k < 3; ++k) {
    TabularCase t = random_tabular(rng, 5, false);
    while (t.codomain.kind() != SpaceKind::RealLine) t = random_tabular(rng, 5, false);
    compare("affine tabular#" + std::to_string(k), t.map(), compose_affine(affines[k], t.map()),
            finite_domain_probes(t.domain), t.points(), cfg);
  }
  {
    const auto D = dense_split(DenseSpec::Dyadic);
    compare("affine dense_split", D, compose_affine(affines[0], D), dense_split_probes(DenseSpec::Dyadic),
            {R(1, 2), R(1, 3)}, cfg);
    const auto D3 = dense_split(DenseSpec::Thirds);
    compare("affine dense_split:thirds", D3, compose_affine(affines[1], D3), dense_split_probes(DenseSpec::Thirds),
            {R(1, 3), R(1, 2)}, cfg);
  }
  {
    const auto spec = SpikeSpec::listed({R(1), R(1, 2), R(1, 3)});
    const auto S = spike_function(spec);
    compare("affine spike", S, compose_affine(affines[2], S), spike_probes(spec), {R(1, 2), R(2, 5)}, cfg);
    const auto H = SpikeSpec::harmonic_list();
    compare("affine spike:harmonic", spike_function(H), compose_affine(affines[0], spike_function(H)),
            spike_probes(H), {R(1, 4), R(2, 7)}, cfg);
  }
  {
    // The schedule-bounded checker cannot see F2's continuity at ill-founded trees;
    // the proof witness (verified) supplies the verdict on the F side. The coarse
    // f2 eps schedule would hide the 1/8-scale jumps of the embedded values.
    const auto F = f2_multimap();
    const auto PF = compose_baire_embed(F);
    const auto probes = f2_probes();
    const auto c = CheckConfig::defaults();
    const char* lits[] = {"tree{nodes:[()]}", "tree{nodes:[(),(0)]}", R"(tree{nodes:[()],branches:[";0"]})"};
    for (const char* lit : lits) {
      const Tree t = Tree::parse(lit);
      const auto w = f2_witness(t, c);
      const bool witness_ok = verify_witness(F, t, w, c, probes).ok;
      const auto b = check_continuity(PF, t, c, probes);
      note(witness_ok && kind_of(w) == b.kind, std::string("baire_embed f2 at ") + lit);
    }
  }
  return {bad == 0, std::to_string(checked) + " transfer checks over 10 extend and 10 compose instances, " +
                        std::to_string(bad) + " disagreements" + (first.empty() ? "" : "; first " + first)};
}

// ---- 8 ----
Outcome criterion8() {
  const auto t0 = Clock::now();
  std::vector<Node> nodes{{}};
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].size() == 4) continue;
    for (Nat k = 0; k < 4; ++k) {
      Node v = nodes[i];
      v.push_back(k);
      nodes.push_back(v);
    }
  }
  std::vector<Interval> iv;
  for (const auto& u : nodes) iv.push_back(interval_of(u));
  std::uint64_t bad = 0, pairs = 0;
  std::string first;
  auto fail = [&](const std::string& what) {
    if (bad++ == 0) first = what;
  };
  if (!(iv[0].lo == Rational(0) && iv[0].hi == Rational(1))) fail("I_root");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto& u = nodes[i];
    if (!(iv[i].lo < iv[i].hi)) fail("degenerate " + node_str(u));
    if (iv[i].hi - iv[i].lo > pow2_neg(u.size())) fail("length " + node_str(u));
    if (!u.empty()) {
      const Node parent(u.begin(), u.end() - 1);
      const auto p = interval_of(parent);
      if (iv[i].lo < p.lo || p.hi < iv[i].hi) fail("nesting " + node_str(u));
    }
    for (std::size_t j = i + 1; j < nodes.size(); ++j) {
      if (is_prefix(u, nodes[j]) || is_prefix(nodes[j], u)) continue;
      ++pairs;
      if (!(iv[i].hi < iv[j].lo || iv[j].hi < iv[i].lo)) fail("overlap " + node_str(u) + " " + node_str(nodes[j]));
    }
  }
  const double t = seconds_since(t0);
  return {bad == 0 && t < 5.0, std::to_string(nodes.size()) + " nodes, " + std::to_string(pairs) +
                                   " incompatible pairs, " + std::to_string(bad) + " failures, " + std::to_string(t) +
                                   " s" + (first.empty() ? "" : "; first " + first)};
}

// ---- 9 ----
Outcome criterion9() {
  Rng rng(909);
  const auto cfg = CheckConfig::defaults();
  std::uint64_t bad = 0, checked = 0;
  std::string first;
  for (int k = 0; k < 100; ++k) {
    const auto t = random_tabular(rng);
    const auto F = t.map();
    const auto probes = finite_domain_probes(t.domain);
    for (std::size_t x = 0; x < t.domain.metric().size(); ++x) {
      const auto plain = check_continuity(F, FiniteLabel{x}, cfg, probes);
      const auto strong = check_strong_continuity(F, FiniteLabel{x}, cfg, probes);
      const auto want = [](bool b) { return b ? VerdictKind::Continuous : VerdictKind::Discontinuous; };
      checked += 2;
      if (plain.kind != want(oracle_plain(t, x, cfg)) && bad++ == 0) first = "plain #" + std::to_string(k);
      if (strong.kind != want(oracle_strong(t, x, cfg)) && bad++ == 0) first = "strong #" + std::to_string(k);
    }
  }
  return {bad == 0, std::to_string(checked) + " verdicts on 100 instances, " + std::to_string(bad) +
                        " disagreements with the brute-force evaluator" + (first.empty() ? "" : "; first " + first)};
}

// ---- 10 ----
Outcome criterion10() {
  Rng rng(1010);
  const auto cfg = CheckConfig::defaults();
  std::uint64_t both = 0, total = 0, bad = 0;
  std::string first;
  auto run = [&](const std::string& name, const MultiMap& F, const ProbeGen& probes, const std::vector<Point>& xs) {
    const auto CF = closure_of(F);
    for (const auto& x : xs) {
      ++total;
      const auto a = eval_lower_fell(F, x, cfg, probes);
      const auto b = check_strong_continuity(CF, x, cfg, probes);
      if (!conclusive(a) || !conclusive(b)) continue;
      ++both;
      if (a.kind != b.kind && bad++ == 0) first = name + " at " + point_str(x);
    }
  };
  for (int k = 0; k < 10; ++k) {
    const std::size_t n = 2 + rng() % 3;
    const auto dom = PointSpace::finite(random_ultrametric(rng, n, domain_levels()));
    std::vector<ClosedSet> values;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<Interval> iv;
      for (std::size_t j = 0, c = 1 + rng() % 2; j < c; ++j) {
        const long lo = static_cast<long>(rng() % 8);
        iv.push_back({R(lo, 8), R(lo + 1 + static_cast<long>(rng() % 4), 8)});
      }
      values.push_back(open_intervals(iv));
    }
    TabularCase t{dom, PointSpace::real_line(), values};
    run("open-valued#" + std::to_string(k), t.map(), finite_domain_probes(dom), t.points());
  }
  for (int k = 0; k < 5; ++k) {
    const auto t = random_tabular(rng, 5, false);
    run("finite-valued#" + std::to_string(k), t.map(), finite_domain_probes(t.domain), t.points());
  }
  const auto D = dense_split(DenseSpec::Dyadic);
  const auto dp = dense_split_probes(DenseSpec::Dyadic);
  for (const auto& q : {R(1, 2), R(1, 3), R(3, 4), R(2, 5), R(0)}) run("dense_split", D, dp, {q});
  return {bad == 0 && both > 0, "20 instances, " + std::to_string(both) + "/" + std::to_string(total) +
                                    " points conclusive on both sides, " + std::to_string(bad) + " disagreements" +
                                    (first.empty() ? "" : "; first " + first)};
}

// ---- 11 ----
BairePoint random_baire(Rng& rng) {
  Seq prefix(rng() % 4), period(1 + rng() % 2);
  for (auto& v : prefix) v = rng() % 3;
  for (auto& v : period) v = rng() % 3;
  return BairePoint(prefix, period);
}

Tree random_tree(Rng& rng) {
  std::vector<Node> gens{{}};
  for (std::size_t i = 0, n = rng() % 5; i < n; ++i) {
    Node u(rng() % 5);
    for (auto& v : u) v = rng() % 4;
    gens.push_back(u);
  }
  Tree t = generated_by(gens);
  if (rng() % 3 == 0) {
    std::vector<BairePoint> br{random_baire(rng)};
    return Tree(t.finite_part(), br);
  }
  return t;
}

bool prefix_closed(const Tree& t) {
  for (const auto& u : t.finite_part()) {
    for (std::size_t k = 0; k < u.size(); ++k) {
      if (!t.contains(Node(u.begin(), u.begin() + static_cast<std::ptrdiff_t>(k)))) return false;
    }
  }
  for (const auto& b : t.branches()) {
    for (std::size_t k = 0; k < 8; ++k) {
      if (!t.contains(b.take(k))) return false;
    }
  }
  return t.contains(Node{});
}

Outcome criterion11() {
  Rng rng(1111);
  std::uint64_t bad = 0;
  std::string first;
  auto fail = [&](const std::string& what) {
    if (bad++ == 0) first = what;
  };
  for (int i = 0; i < 1000; ++i) {
    const auto a = random_baire(rng), b = random_baire(rng), c = random_baire(rng);
    const auto ab = baire_dist(a, b), bc = baire_dist(b, c), ac = baire_dist(a, c);
    if (ac > max(ab, bc)) fail("ultrametric " + to_string(a) + " " + to_string(b) + " " + to_string(c));
    if (ab != baire_dist(b, a) || (ab == Rational(0)) != (a == b)) fail("metric axioms " + to_string(a));
  }
  for (int i = 0; i < 1000; ++i) {
    const Tree t = random_tree(rng);
    const BigNat n(static_cast<unsigned long>(rng() % 64));
    std::vector<Tree> outs{t, tree_shift(t), truncate_below(t, n)};
    for (const auto& u : terminals(t)) outs.push_back(extend_terminal(t, u, n));
    std::vector<Node> gens(t.finite_part().begin(), t.finite_part().end());
    outs.push_back(generated_by(gens));
    for (const auto& o : outs) {
      if (!prefix_closed(o)) fail("prefix closure " + t.str() + " -> " + o.str());
    }
    for (const auto& u : terminals(t)) {
      if (!t.contains(u)) fail("terminal outside " + t.str());
    }
  }
  // d(y, empty) = 1 on the criterion paths.
  const auto cfg = CheckConfig::defaults();
  const auto dom = PointSpace::finite(FiniteMetric({"a", "b"}, {{R(0), R(1, 512)}, {R(1, 512), R(0)}}));
  const auto probes = finite_domain_probes(dom);
  const auto real = PointSpace::real_line();
  if (dist_to_set(real, Point(R(3)), empty_set()) != Rational(1)) fail("dist_to_set(y, empty)");
  {
    const auto F = tabular(dom, real, {finite_real({R(0)}), empty_set()});
    const auto control = tabular(dom, real, {finite_real({R(0)}), finite_real({R(0)})});
    if (eval_star(F, FiniteLabel{0}, cfg, probes).kind == VerdictKind::Continuous) fail("eval_star ignores empty");
    if (eval_star(control, FiniteLabel{0}, cfg, probes).kind != VerdictKind::Continuous) fail("eval_star control");
    if (eval_dagger(F, FiniteLabel{0}, cfg, probes).kind == VerdictKind::Continuous) fail("eval_dagger ignores empty");
  }
  {
    // F meets K_m only from m = 5 on; smaller m see empty intersections.
    const auto F = tabular(dom, real, {finite_real({R(5)}), finite_real({R(5)})});
    const auto v = eval_dagger(F, FiniteLabel{0}, cfg, probes);
    bool ok = v.kind == VerdictKind::Continuous && v.evidence && !v.evidence->passes.empty() &&
              v.evidence->refutations.size() == 5;
    if (ok) {
      for (const auto& p : v.evidence->passes) ok = ok && p.m == 5;
      for (const auto& r : v.evidence->refutations) ok = ok && r.m < 5 && r.cover.empty();
    }
    if (!ok) fail("eval_dagger K_m cut");
  }
  return {bad == 0, "1000 triples, 1000 trees, empty-set convention on 4 paths, " + std::to_string(bad) +
                        " failures" + (first.empty() ? "" : "; first " + first)};
}

}  // namespace

int main(int argc, char** argv) {
  double budget = 60.0;
  if (argc > 1) budget = std::stod(argv[1]);
  std::cout << "threads: " << omp_get_max_threads() << "\n";
  const std::vector<std::pair<int, std::function<Outcome()>>> all = {
      {1, criterion1},
      {2, criterion2},
      {3, criterion3},
      {4, [&] { return criterion4(budget); }},
      {5, [&] { return criterion5(budget); }},
      {6, criterion6},
      {7, criterion7},
      {8, criterion8},
      {9, criterion9},
      {10, criterion10},
      {11, criterion11},
  };
  int failed = 0;
  for (const auto& [id, fn] : all) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << " - " << o.detail << std::endl;
  }
  std::cout << (all.size() - failed) << "/" << all.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
