#include "baire/pointclass.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <map>

namespace baire {

std::string Pointclass::str() const {
  static constexpr std::array<const char*, 3> names{"Sigma", "Pi", "Delta"};
  return std::string(names[static_cast<int>(level)]) + (family == Family::Borel ? "0" : "1") + "(" +
         std::to_string(n) + ")";
}

Pointclass Pointclass::parse(std::string_view text) {
  Pointclass c;
  std::string_view rest;
  if (text.substr(0, 5) == "Sigma") {
    c.level = Level::Sigma;
    rest = text.substr(5);
  } else if (text.substr(0, 5) == "Delta") {
    c.level = Level::Delta;
    rest = text.substr(5);
  } else if (text.substr(0, 2) == "Pi") {
    c.level = Level::Pi;
    rest = text.substr(2);
  } else {
    throw std::invalid_argument("bad pointclass: " + std::string(text));
  }
  if (rest.size() < 4 || (rest[0] != '0' && rest[0] != '1') || rest[1] != '(' || rest.back() != ')') {
    throw std::invalid_argument("bad pointclass: " + std::string(text));
  }
  c.family = rest[0] == '0' ? Family::Borel : Family::Projective;
  const std::string digits(rest.substr(2, rest.size() - 3));
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || std::stoul(digits) == 0) {
    throw std::invalid_argument("bad pointclass index: " + std::string(text));
  }
  c.n = static_cast<unsigned>(std::stoul(digits));
  return c;
}

Pointclass dual(const Pointclass& c) {
  Pointclass d = c;
  if (c.level == Level::Sigma) d.level = Level::Pi;
  if (c.level == Level::Pi) d.level = Level::Sigma;
  return d;
}

namespace {

// Delta(n) sits at 2n, Sigma(n) and Pi(n) side by side at 2n+1.
unsigned position(const Pointclass& c) { return 2 * c.n + (c.level == Level::Delta ? 0 : 1); }

}  // namespace

bool leq(const Pointclass& a, const Pointclass& b) {
  if (a == b) return true;
  if (a.family != b.family) return a.family == Family::Borel;
  return position(a) < position(b);
}

Pointclass join(const Pointclass& a, const Pointclass& b) {
  if (leq(a, b)) return b;
  if (leq(b, a)) return a;
  return {a.family, Level::Delta, a.n + 1};
}

SetExpr SetExpr::unary(Op op, SetExpr e) { return {op, AtomKind::Open, {std::move(e)}}; }

SetExpr SetExpr::binary(Op op, SetExpr a, SetExpr b) { return {op, AtomKind::Open, {std::move(a), std::move(b)}}; }

namespace {

constexpr std::array<std::pair<const char*, AtomKind>, 5> kAtoms{{{"open", AtomKind::Open},
                                                                  {"closed", AtomKind::Closed},
                                                                  {"analytic", AtomKind::Analytic},
                                                                  {"coanalytic", AtomKind::Coanalytic},
                                                                  {"borel", AtomKind::Borel}}};
constexpr std::array<std::pair<const char*, Op>, 7> kOps{{{"compl", Op::Compl},
                                                          {"Uc", Op::UnionCtbl},
                                                          {"Ic", Op::InterCtbl},
                                                          {"union", Op::Union},
                                                          {"inter", Op::Inter},
                                                          {"preimg", Op::Preimg},
                                                          {"proj", Op::Proj}}};

const char* op_name(Op op) {
  for (const auto& [name, o] : kOps) {
    if (o == op) return name;
  }
  return "atom";
}

const char* atom_name(AtomKind a) {
  for (const auto& [name, k] : kAtoms) {
    if (k == a) return name;
  }
  return "?";
}

bool is_binary(Op op) { return op == Op::Union || op == Op::Inter; }

std::vector<std::string> term_starts() {
  std::vector<std::string> out;
  for (const auto& a : kAtoms) out.emplace_back(a.first);
  for (const auto& o : kOps) out.emplace_back(o.first);
  return out;
}

std::string describe(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) return "end of input";
  return "'" + std::string(1, s[pos]) + "'";
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  SetExpr parse() {
    SetExpr e = term();
    skip();
    if (pos_ != s_.size()) throw ParseError(pos_, {"end of input"}, describe(s_, pos_));
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return;
    }
    throw ParseError(pos_, {std::string(1, c)}, describe(s_, pos_));
  }

  SetExpr term() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const std::string_view word = s_.substr(start, pos_ - start);
    for (const auto& [name, a] : kAtoms) {
      if (word == name) return SetExpr::make_atom(a);
    }
    for (const auto& [name, op] : kOps) {
      if (word != name) continue;
      expect('(');
      SetExpr first = term();
      if (is_binary(op)) {
        expect(',');
        SetExpr second = term();
        expect(')');
        return SetExpr::binary(op, std::move(first), std::move(second));
      }
      expect(')');
      return SetExpr::unary(op, std::move(first));
    }
    throw ParseError(start, term_starts(), word.empty() ? describe(s_, start) : "'" + std::string(word) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

std::string join_expected(const std::vector<std::string>& e) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) out += (i ? ", " : "") + e[i];
  return out;
}

}  // namespace

ParseError::ParseError(std::size_t off, std::vector<std::string> exp, const std::string& found)
    : std::invalid_argument("parse error at offset " + std::to_string(off) + ": expected one of {" +
                            join_expected(exp) + "}, found " + found),
      offset(off),
      expected(std::move(exp)) {}

SetExpr parse_expr(std::string_view text) { return Parser(text).parse(); }

std::string SetExpr::str() const {
  if (op == Op::Atom) return atom_name(atom);
  std::string out = std::string(op_name(op)) + "(" + args[0].str();
  if (args.size() > 1) out += ", " + args[1].str();
  return out + ")";
}

namespace {

struct Step {
  std::string rule;
  Pointclass result;
};

Step atom_step(AtomKind a) {
  switch (a) {
    case AtomKind::Open:
      return {"atom_open", Pointclass::sigma0(1)};
    case AtomKind::Closed:
      return {"atom_closed", Pointclass::pi0(1)};
    case AtomKind::Analytic:
      return {"atom_analytic", Pointclass::sigma1(1)};
    case AtomKind::Coanalytic:
      return {"atom_coanalytic", Pointclass::pi1(1)};
    case AtomKind::Borel:
      break;
  }
  return {"atom_borel", Pointclass::delta1(1)};
}

Step countable_step(bool unions, const Pointclass& c) {
  const char* tag = unions ? "uc" : "ic";
  if (c.family == Family::Projective) return {std::string(tag) + "_projective", c};
  const Level closed_level = unions ? Level::Sigma : Level::Pi;
  if (c.level == closed_level) return {std::string(tag) + (unions ? "_sigma" : "_pi"), c};
  if (c.level == Level::Delta) return {std::string(tag) + "_delta", {Family::Borel, closed_level, c.n}};
  return {std::string(tag) + (unions ? "_pi_step" : "_sigma_step"), {Family::Borel, closed_level, c.n + 1}};
}

Step proj_step(const Pointclass& c) {
  if (c.family == Family::Borel) return {"proj_borel", Pointclass::sigma1(1)};
  switch (c.level) {
    case Level::Sigma:
      return {"proj_sigma", c};
    case Level::Pi:
      return {"proj_pi_step", Pointclass::sigma1(c.n + 1)};
    case Level::Delta:
      break;
  }
  return {"proj_delta", Pointclass::sigma1(c.n)};
}

std::size_t classify_into(const SetExpr& e, std::vector<TraceStep>& trace) {
  std::vector<std::size_t> inputs;
  for (const auto& a : e.args) inputs.push_back(classify_into(a, trace));
  auto in = [&](std::size_t i) { return trace[inputs[i]].result; };
  Step step;
  switch (e.op) {
    case Op::Atom:
      step = atom_step(e.atom);
      break;
    case Op::Compl:
      step = {"compl_dual", dual(in(0))};
      break;
    case Op::UnionCtbl:
      step = countable_step(true, in(0));
      break;
    case Op::InterCtbl:
      step = countable_step(false, in(0));
      break;
    case Op::Union:
      step = {"union_join", join(in(0), in(1))};
      break;
    case Op::Inter:
      step = {"inter_join", join(in(0), in(1))};
      break;
    case Op::Preimg:
      step = {"preimg_preserve", in(0)};
      break;
    case Op::Proj:
      step = proj_step(in(0));
      break;
  }
  trace.push_back({trace.size(), step.rule, e.str(), inputs, step.result});
  return trace.size() - 1;
}

}  // namespace

Classification classify(const SetExpr& e) {
  Classification c;
  classify_into(e, c.trace);
  c.result = c.trace.back().result;
  return c;
}

SetExpr dual_expr(const SetExpr& e) {
  switch (e.op) {
    case Op::Atom:
      switch (e.atom) {
        case AtomKind::Open:
          return SetExpr::make_atom(AtomKind::Closed);
        case AtomKind::Closed:
          return SetExpr::make_atom(AtomKind::Open);
        case AtomKind::Analytic:
          return SetExpr::make_atom(AtomKind::Coanalytic);
        case AtomKind::Coanalytic:
          return SetExpr::make_atom(AtomKind::Analytic);
        case AtomKind::Borel:
          return e;
      }
      break;
    case Op::Compl:
      return e.args[0];
    case Op::UnionCtbl:
      return SetExpr::unary(Op::InterCtbl, dual_expr(e.args[0]));
    case Op::InterCtbl:
      return SetExpr::unary(Op::UnionCtbl, dual_expr(e.args[0]));
    case Op::Union:
      return SetExpr::binary(Op::Inter, dual_expr(e.args[0]), dual_expr(e.args[1]));
    case Op::Inter:
      return SetExpr::binary(Op::Union, dual_expr(e.args[0]), dual_expr(e.args[1]));
    case Op::Preimg:
      return SetExpr::unary(Op::Preimg, dual_expr(e.args[0]));
    case Op::Proj:
      break;
  }
  return SetExpr::unary(Op::Compl, e);
}

namespace {

// The validator's own statement of every rule: operator, side condition on the
// input classes, and the class it yields.
struct Rule {
  std::string name;
  std::string statement;
  std::string op;
  std::function<bool(const std::vector<Pointclass>&)> applies;
  std::function<Pointclass(const std::vector<Pointclass>&)> yields;
};

using PCs = std::vector<Pointclass>;

bool borel_at(const Pointclass& c, Level l) { return c.family == Family::Borel && c.level == l; }

const std::vector<Rule>& rules() {
  static const std::vector<Rule> table = [] {
    std::vector<Rule> r;
    auto atom = [&](const char* name, const char* word, Pointclass c, const char* stmt) {
      r.push_back({name, stmt, word, [](const PCs& in) { return in.empty(); }, [c](const PCs&) { return c; }});
    };
    atom("atom_open", "open", Pointclass::sigma0(1), "open sets are Sigma0(1)");
    atom("atom_closed", "closed", Pointclass::pi0(1), "closed sets are Pi0(1)");
    atom("atom_analytic", "analytic", Pointclass::sigma1(1), "analytic sets are Sigma1(1)");
    atom("atom_coanalytic", "coanalytic", Pointclass::pi1(1), "co-analytic sets are Pi1(1)");
    atom("atom_borel", "borel", Pointclass::delta1(1), "Borel sets are Delta1(1)");
    r.push_back({"compl_dual", "complements swap Sigma and Pi", "compl",
                 [](const PCs& in) { return in.size() == 1; }, [](const PCs& in) { return dual(in[0]); }});
    auto lub = [](const PCs& in) { return leq(in[0], in[1]) ? in[1] : leq(in[1], in[0]) ? in[0]
                                                            : Pointclass{in[0].family, Level::Delta, in[0].n + 1}; };
    auto two = [](const PCs& in) { return in.size() == 2; };
    r.push_back({"union_join", "finite unions stay in the least class holding both", "union", two, lub});
    r.push_back({"inter_join", "finite intersections stay in the least class holding both", "inter", two, lub});
    r.push_back({"preimg_preserve", "continuous preimages keep the class", "preimg",
                 [](const PCs& in) { return in.size() == 1; }, [](const PCs& in) { return in[0]; }});
    for (bool u : {true, false}) {
      const std::string op = u ? "Uc" : "Ic";
      const std::string tag = u ? "uc" : "ic";
      const Level own = u ? Level::Sigma : Level::Pi;
      const Level other = u ? Level::Pi : Level::Sigma;
      r.push_back({tag + (u ? "_sigma" : "_pi"), op + " keeps the class closed under it", op,
                   [own](const PCs& in) { return in.size() == 1 && borel_at(in[0], own); },
                   [](const PCs& in) { return in[0]; }});
      r.push_back({tag + "_delta", op + " of Delta0(n) sets lands in the closed side at level n", op,
                   [](const PCs& in) { return in.size() == 1 && borel_at(in[0], Level::Delta); },
                   [own](const PCs& in) { return Pointclass{Family::Borel, own, in[0].n}; }});
      r.push_back({tag + (u ? "_pi_step" : "_sigma_step"), op + " of the opposite side climbs one level", op,
                   [other](const PCs& in) { return in.size() == 1 && borel_at(in[0], other); },
                   [own](const PCs& in) { return Pointclass{Family::Borel, own, in[0].n + 1}; }});
      r.push_back({tag + "_projective", "projective classes are closed under countable unions and intersections", op,
                   [](const PCs& in) { return in.size() == 1 && in[0].family == Family::Projective; },
                   [](const PCs& in) { return in[0]; }});
    }
    r.push_back({"proj_borel", "projections of Borel sets are analytic", "proj",
                 [](const PCs& in) { return in.size() == 1 && in[0].family == Family::Borel; },
                 [](const PCs&) { return Pointclass::sigma1(1); }});
    auto proj_of = [](Level l) {
      return [l](const PCs& in) { return in.size() == 1 && in[0].family == Family::Projective && in[0].level == l; };
    };
    r.push_back({"proj_sigma", "Sigma1(n) is closed under projection", "proj", proj_of(Level::Sigma),
                 [](const PCs& in) { return in[0]; }});
    r.push_back({"proj_delta", "projections of Delta1(n) sets are Sigma1(n)", "proj", proj_of(Level::Delta),
                 [](const PCs& in) { return Pointclass::sigma1(in[0].n); }});
    r.push_back({"proj_pi_step", "projections of Pi1(n) sets are Sigma1(n+1)", "proj", proj_of(Level::Pi),
                 [](const PCs& in) { return Pointclass::sigma1(in[0].n + 1); }});
    return r;
  }();
  return table;
}

std::string head_word(const SetExpr& e) { return e.op == Op::Atom ? atom_name(e.atom) : op_name(e.op); }

}  // namespace

std::optional<std::string> validate_trace(const SetExpr& e, const std::vector<TraceStep>& trace) {
  // Expected post-order of subexpressions, paired with the expected input positions.
  std::vector<std::pair<const SetExpr*, std::vector<std::size_t>>> order;
  std::function<std::size_t(const SetExpr&)> walk = [&](const SetExpr& s) {
    std::vector<std::size_t> kids;
    for (const auto& a : s.args) kids.push_back(walk(a));
    order.emplace_back(&s, kids);
    return order.size() - 1;
  };
  walk(e);
  if (trace.size() != order.size()) {
    return "trace has " + std::to_string(trace.size()) + " steps, expression has " + std::to_string(order.size()) +
           " nodes";
  }
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const auto& st = trace[i];
    const auto& [node, kids] = order[i];
    const std::string where = "step " + std::to_string(i) + ": ";
    if (st.id != i) return where + "id out of sequence";
    if (st.expr != node->str()) return where + "expression '" + st.expr + "' does not match '" + node->str() + "'";
    if (st.inputs != kids) return where + "inputs do not point at the subexpressions";
    PCs in;
    for (auto k : st.inputs) in.push_back(trace[k].result);
    auto rule = std::find_if(rules().begin(), rules().end(), [&](const Rule& r) { return r.name == st.rule; });
    if (rule == rules().end()) return where + "unknown rule '" + st.rule + "'";
    if (rule->op != head_word(*node)) return where + "rule '" + st.rule + "' does not apply to " + head_word(*node);
    if (!rule->applies(in)) return where + "side condition of '" + st.rule + "' fails";
    if (!(rule->yields(in) == st.result)) {
      return where + "'" + st.rule + "' yields " + rule->yields(in).str() + ", trace says " + st.result.str();
    }
  }
  return std::nullopt;
}

std::vector<std::pair<std::string, std::string>> rule_catalog() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& r : rules()) out.emplace_back(r.name, r.statement);
  return out;
}

}  // namespace baire
