#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "baire/closed_set.hpp"

namespace baire {

struct MultiMap {
  std::string name;
  PointSpace domain;
  PointSpace codomain;
  std::function<ClosedSet(const Point&)> rule;

  ClosedSet operator()(const Point& x) const { return rule(x); }
};

// x' candidates for the ball B(center, radius). The checkers drop anything
// outside the ball, so generators may be generous.
using ProbeGen = std::function<std::vector<Point>(const Point& center, const Rational& radius)>;

struct CheckConfig {
  std::vector<Rational> eps_schedule;
  std::vector<Rational> delta_schedule;
  std::size_t probe_budget = 64;
  Rational net_resolution{1, 1024};
  Nat dense_bound = 256;
  Nat n_bound = 8;
  Nat m_bound = 8;
  bool alternative_dense = false;  // (y_s) from alternative_dense_sequence

  // eps = delta = 1, 1/2, ..., 1/256
  static CheckConfig defaults();
  void validate() const;  // throws std::invalid_argument
};

struct EpsDelta {
  Rational eps, delta;
};

struct ContinuityWitness {
  Point y;
  std::vector<EpsDelta> table;
};

// One table per net point of F(x).
struct StrongContinuityWitness {
  Rational net_resolution;
  std::vector<ContinuityWitness> tables;
};

struct Counterexample {
  Rational delta;
  Point x_prime;
};

struct Refutation {
  Point y;
  Rational eps_star;
  std::vector<Counterexample> counterexamples;  // one per delta in the schedule
};

// Plain mode: entries cover the whole net and each eps_star exceeds the net
// resolution. Strong mode: a single entry whose y lies in F(x).
struct DiscontinuityWitness {
  Rational net_resolution;
  bool strong = false;
  std::vector<Refutation> entries;
};

using Witness = std::variant<ContinuityWitness, StrongContinuityWitness, DiscontinuityWitness>;

// Evidence from the criterion evaluators.
struct LevelPass {
  Nat m = 0;  // exhaustion index; 0 outside the dagger evaluator
  Nat n = 0;
  Nat s = 0;
  Point y_s;
  Rational delta;
  Rational sup;
};

struct CoverProbe {
  Point z;
  Rational delta;
  Point x_prime;
  Rational dist;
};

// Every y within tau of F(x) (or of F(x) cut to K_m) fails level n at every delta.
struct LevelRefutation {
  Nat m = 0;
  Nat n = 0;
  Rational tau;
  Rational rho;  // cover spacing slack; 0 in ultrametric and finite codomains
  std::vector<CoverProbe> cover;
};

struct LowerFellBall {
  Point center;
  Rational radius;
};

struct LowerFellPass {
  LowerFellBall ball;
  Rational delta;
};

struct LowerFellRefutation {
  LowerFellBall ball;
  std::vector<Counterexample> counterexamples;
};

struct CriterionEvidence {
  std::vector<LevelPass> passes;
  std::vector<LevelRefutation> refutations;
  std::optional<LevelPass> strong_failure;  // (n, s) with y_s close to F(x) and no delta passing
  std::vector<LowerFellPass> fell_passes;
  std::optional<LowerFellRefutation> fell_failure;
};

enum class VerdictKind { Continuous, Discontinuous, Inconclusive };
const char* verdict_name(VerdictKind k);

struct Verdict {
  VerdictKind kind = VerdictKind::Inconclusive;
  std::optional<Witness> witness;
  std::optional<CriterionEvidence> evidence;
  std::string report;  // which truncation ran out, when Inconclusive
};

// The probes actually examined for B(x, delta): x first, then generator output
// inside the ball, deduplicated, at most cfg.probe_budget.
std::vector<Point> probe_set(const MultiMap& F, const Point& x, const Rational& delta,
                             const CheckConfig& cfg, const ProbeGen& probes);

// Full finite domain as a probe generator.
ProbeGen finite_domain_probes(const PointSpace& domain);

Verdict check_continuity(const MultiMap& F, const Point& x, const CheckConfig& cfg,
                         const ProbeGen& probes);
Verdict check_strong_continuity(const MultiMap& F, const Point& x, const CheckConfig& cfg,
                                const ProbeGen& probes);
Verdict eval_star(const MultiMap& F, const Point& x, const CheckConfig& cfg, const ProbeGen& probes);
Verdict eval_dagger(const MultiMap& F, const Point& x, const CheckConfig& cfg, const ProbeGen& probes);
Verdict eval_strong_star(const MultiMap& F, const Point& x, const CheckConfig& cfg,
                         const ProbeGen& probes);
// Empty test_balls selects (y, eps) for y in the closure net and eps in the schedule.
Verdict eval_lower_fell(const MultiMap& F, const Point& x, const CheckConfig& cfg,
                        const ProbeGen& probes, std::vector<LowerFellBall> test_balls = {});

struct WitnessCheck {
  bool ok = true;
  std::string reason;
  explicit operator bool() const { return ok; }
};

WitnessCheck verify_witness(const MultiMap& F, const Point& x, const Witness& w, const CheckConfig& cfg,
                            const ProbeGen& probes);

enum class Mode { Plain, Strong, Star, Dagger, StrongStar, LowerFell };
Mode parse_mode(std::string_view text);
const char* mode_name(Mode m);
Verdict run_mode(Mode mode, const MultiMap& F, const Point& x, const CheckConfig& cfg,
                 const ProbeGen& probes);

// Pointwise verdicts in sample order. The parallel version splits the sample
// across OpenMP threads; the serial one is the reference.
std::vector<Verdict> continuity_points(const MultiMap& F, const std::vector<Point>& sample, Mode mode,
                                       const CheckConfig& cfg, const ProbeGen& probes);
std::vector<Verdict> continuity_points_serial(const MultiMap& F, const std::vector<Point>& sample,
                                              Mode mode, const CheckConfig& cfg, const ProbeGen& probes);

MultiMap closure_of(const MultiMap& F);

}  // namespace baire
