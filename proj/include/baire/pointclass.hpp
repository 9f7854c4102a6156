#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace baire {

enum class Family { Borel, Projective };  // superscript 0 or 1
enum class Level { Sigma, Pi, Delta };

struct Pointclass {
  Family family = Family::Borel;
  Level level = Level::Sigma;
  unsigned n = 1;

  static Pointclass sigma0(unsigned n) { return {Family::Borel, Level::Sigma, n}; }
  static Pointclass pi0(unsigned n) { return {Family::Borel, Level::Pi, n}; }
  static Pointclass delta0(unsigned n) { return {Family::Borel, Level::Delta, n}; }
  static Pointclass sigma1(unsigned n) { return {Family::Projective, Level::Sigma, n}; }
  static Pointclass pi1(unsigned n) { return {Family::Projective, Level::Pi, n}; }
  static Pointclass delta1(unsigned n) { return {Family::Projective, Level::Delta, n}; }

  std::string str() const;  // "Pi0(2)"
  static Pointclass parse(std::string_view text);
  friend bool operator==(const Pointclass&, const Pointclass&) = default;
};

Pointclass dual(const Pointclass& c);
bool leq(const Pointclass& a, const Pointclass& b);
// Least upper bound; Sigma(n) and Pi(n) meet at Delta(n+1).
Pointclass join(const Pointclass& a, const Pointclass& b);

enum class AtomKind { Open, Closed, Analytic, Coanalytic, Borel };
enum class Op { Atom, Compl, UnionCtbl, InterCtbl, Union, Inter, Preimg, Proj };

struct SetExpr {
  Op op = Op::Atom;
  AtomKind atom = AtomKind::Open;
  std::vector<SetExpr> args;

  static SetExpr make_atom(AtomKind a) { return {Op::Atom, a, {}}; }
  static SetExpr unary(Op op, SetExpr e);
  static SetExpr binary(Op op, SetExpr a, SetExpr b);
  std::string str() const;  // grammar form, e.g. "Ic(Uc(open))"
  friend bool operator==(const SetExpr&, const SetExpr&) = default;
};

struct ParseError : std::invalid_argument {
  std::size_t offset;
  std::vector<std::string> expected;
  ParseError(std::size_t offset, std::vector<std::string> expected, const std::string& found);
};

// atoms: open closed analytic coanalytic borel
// combinators: compl(e) Uc(e) Ic(e) union(e,e) inter(e,e) preimg(e) proj(e)
SetExpr parse_expr(std::string_view text);

struct TraceStep {
  std::size_t id = 0;
  std::string rule;
  std::string expr;
  std::vector<std::size_t> inputs;
  Pointclass result;
};

struct Classification {
  Pointclass result;
  std::vector<TraceStep> trace;  // post-order; the last step is the root
};

Classification classify(const SetExpr& e);
// An expression for the complement, with compl pushed to the atoms where possible.
SetExpr dual_expr(const SetExpr& e);

// Replays a trace against e: every step must instantiate a known rule on the
// classes of its inputs. Returns the first problem found.
std::optional<std::string> validate_trace(const SetExpr& e, const std::vector<TraceStep>& trace);

// Rule names with a one-line statement each, for --help and reports.
std::vector<std::pair<std::string, std::string>> rule_catalog();

}  // namespace baire
