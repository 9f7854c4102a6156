#include "baire/checkers.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>

namespace baire {

CheckConfig CheckConfig::defaults() {
  CheckConfig cfg;
  for (unsigned long k = 0; k <= 8; ++k) {
    cfg.eps_schedule.push_back(pow2_neg(k));
    cfg.delta_schedule.push_back(pow2_neg(k));
  }
  return cfg;
}

void CheckConfig::validate() const {
  auto check = [](const std::vector<Rational>& sched, const char* what) {
    if (sched.empty()) throw std::invalid_argument(std::string(what) + " must be nonempty");
    for (std::size_t i = 0; i < sched.size(); ++i) {
      if (sched[i].sign() <= 0) throw std::invalid_argument(std::string(what) + " entries must be positive");
      if (i > 0 && !(sched[i] < sched[i - 1])) {
        throw std::invalid_argument(std::string(what) + " must be strictly descending");
      }
    }
  };
  check(eps_schedule, "eps_schedule");
  check(delta_schedule, "delta_schedule");
  if (probe_budget == 0) throw std::invalid_argument("probe_budget must be positive");
  if (net_resolution.sign() <= 0) throw std::invalid_argument("net_resolution must be positive");
}

const char* verdict_name(VerdictKind k) {
  switch (k) {
    case VerdictKind::Continuous:
      return "Continuous";
    case VerdictKind::Discontinuous:
      return "Discontinuous";
    case VerdictKind::Inconclusive:
      break;
  }
  return "Inconclusive";
}

std::vector<Point> probe_set(const MultiMap& F, const Point& x, const Rational& delta,
                             const CheckConfig& cfg, const ProbeGen& probes) {
  std::vector<Point> out{x};
  if (!probes) return out;
  for (auto& p : probes(x, delta)) {
    if (out.size() >= cfg.probe_budget) break;
    if (!F.domain.contains(p)) continue;
    if (!(dist(F.domain, x, p) < delta)) continue;
    if (std::find(out.begin(), out.end(), p) != out.end()) continue;
    out.push_back(std::move(p));
  }
  return out;
}

ProbeGen finite_domain_probes(const PointSpace& domain) {
  const std::size_t n = domain.metric().size();
  return [n](const Point&, const Rational&) {
    std::vector<Point> all;
    for (std::size_t i = 0; i < n; ++i) all.emplace_back(FiniteLabel{i});
    return all;
  };
}

namespace {

// TreeBody values become the equivalent finite Baire set once, so repeated
// distance queries skip the shift and terminal scan.
ClosedSet materialize(ClosedSet s) {
  if (std::holds_alternative<TreeBody>(s)) return finite_baire(baire_members(s));
  return s;
}

// Probes for every scheduled delta. Balls are nested, so the probes admissible
// for delta_j are those generated for delta_j and every smaller delta.
struct ProbePool {
  std::vector<Point> points;
  std::vector<ClosedSet> values;
  std::vector<std::vector<std::size_t>> fresh;  // indices first admitted at delta_j
  std::size_t last = 0;

  ProbePool(const MultiMap& F, const Point& x, const CheckConfig& cfg, const ProbeGen& probes) {
    const std::size_t J = cfg.delta_schedule.size();
    fresh.resize(J);
    last = J - 1;
    for (std::size_t j = J; j-- > 0;) {
      for (auto& p : probe_set(F, x, cfg.delta_schedule[j], cfg, probes)) {
        if (std::find(points.begin(), points.end(), p) != points.end()) continue;
        values.push_back(materialize(F(p)));
        points.push_back(std::move(p));
        fresh[j].push_back(points.size() - 1);
      }
    }
  }

  // sup_j of a per-probe score over the admissible probes, with its argmax.
  struct Sups {
    std::vector<Rational> sup;
    std::vector<std::size_t> arg;
  };
  template <class Score>
  Sups sups(Score&& score) const {
    std::vector<Rational> d(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) d[i] = score(values[i]);
    Sups out{std::vector<Rational>(fresh.size()), std::vector<std::size_t>(fresh.size())};
    std::optional<std::size_t> best;
    for (std::size_t j = fresh.size(); j-- > 0;) {
      for (auto i : fresh[j]) {
        if (!best || d[*best] < d[i]) best = i;
      }
      out.sup[j] = d[*best];
      out.arg[j] = *best;
    }
    return out;
  }
};

Rational sup_dist(const ProbePool::Sups& s) { return s.sup.back(); }

// First (largest) delta whose sup beats eps, per scheduled eps.
std::optional<std::vector<EpsDelta>> build_table(const ProbePool::Sups& s, const CheckConfig& cfg) {
  std::vector<EpsDelta> table;
  for (const auto& eps : cfg.eps_schedule) {
    std::optional<std::size_t> hit;
    for (std::size_t j = 0; j < s.sup.size() && !hit; ++j) {
      if (s.sup[j] < eps) hit = j;
    }
    if (!hit) return std::nullopt;
    table.push_back({eps, cfg.delta_schedule[*hit]});
  }
  return table;
}

Refutation refute(const Point& y, const ProbePool& pool, const ProbePool::Sups& s, const CheckConfig& cfg) {
  // The argmax at the smallest delta lies inside every scheduled ball.
  Refutation r{y, sup_dist(s), {}};
  for (const auto& delta : cfg.delta_schedule) r.counterexamples.push_back({delta, pool.points[s.arg.back()]});
  return r;
}

ClosedSet value_at(const MultiMap& F, const Point& x) {
  require_member(F.domain, x, "evaluation point");
  return F(x);
}

}  // namespace

Verdict check_continuity(const MultiMap& F, const Point& x, const CheckConfig& cfg, const ProbeGen& probes) {
  cfg.validate();
  const ClosedSet fx = value_at(F, x);
  const ProbePool pool(F, x, cfg, probes);
  DiscontinuityWitness refuted{cfg.net_resolution, false, {}};
  std::optional<std::string> weak;
  for (const auto& y : eps_net(fx, cfg.net_resolution)) {
    auto s = pool.sups([&](const ClosedSet& v) { return dist_to_set(F.codomain, y, v); });
    if (auto table = build_table(s, cfg)) {
      return {VerdictKind::Continuous, ContinuityWitness{y, std::move(*table)}, std::nullopt, ""};
    }
    if (!(cfg.net_resolution < sup_dist(s))) {
      if (!weak) weak = "net point " + point_str(y) + " is refuted only at level " + sup_dist(s).str() +
                        ", not above net_resolution " + cfg.net_resolution.str();
      continue;
    }
    refuted.entries.push_back(refute(y, pool, s, cfg));
  }
  if (weak) return {VerdictKind::Inconclusive, std::nullopt, std::nullopt, *weak};
  return {VerdictKind::Discontinuous, std::move(refuted), std::nullopt, ""};
}

Verdict check_strong_continuity(const MultiMap& F, const Point& x, const CheckConfig& cfg,
                                const ProbeGen& probes) {
  cfg.validate();
  const ClosedSet fx = value_at(F, x);
  const ProbePool pool(F, x, cfg, probes);
  StrongContinuityWitness all{cfg.net_resolution, {}};
  for (const auto& y : eps_net(fx, cfg.net_resolution)) {
    auto s = pool.sups([&](const ClosedSet& v) { return dist_to_set(F.codomain, y, v); });
    auto table = build_table(s, cfg);
    if (!table) {
      DiscontinuityWitness w{cfg.net_resolution, true, {refute(y, pool, s, cfg)}};
      return {VerdictKind::Discontinuous, std::move(w), std::nullopt, ""};
    }
    all.tables.push_back({y, std::move(*table)});
  }
  return {VerdictKind::Continuous, std::move(all), std::nullopt, ""};
}

namespace {

// Points z such that every y of the codomain within tau of `target` lies
// within rho of some z. Empty target gives an empty cover.
std::vector<Point> cover_points(const PointSpace& Y, const ClosedSet& target, const Rational& tau,
                                const Rational& rho) {
  std::vector<Point> out;
  if (is_empty(target)) return out;
  if (Y.is_real()) {
    std::vector<Interval> spans;
    if (auto* f = std::get_if<FiniteRealSet>(&target)) {
      for (const auto& p : f->points) spans.push_back({p, p});
    } else if (auto* c = std::get_if<ClosedIntervalUnion>(&target)) {
      spans = c->intervals;
    } else {
      spans = std::get<ClosedIntervalUnion>(closure(target)).intervals;
    }
    const bool unit = Y.kind() == SpaceKind::UnitInterval;
    for (const auto& sp : spans) {
      const Rational hi = sp.hi + tau;
      for (Rational z = sp.lo - tau;; z += rho + rho) {
        if (!unit || (Rational(0) <= z + rho && z - rho <= Rational(1))) out.emplace_back(z);
        if (!(z < hi)) break;
      }
    }
    return out;
  }
  if (Y.kind() == SpaceKind::Baire) {
    // Ultrametric: y within tau of f agrees with f on the first n+1 places.
    const Nat len = static_cast<Nat>((Rational(1) / tau).floor().get_ui());
    for (const auto& f : baire_members(target)) {
      Point z = pad(f.take(len));
      if (std::find(out.begin(), out.end(), z) == out.end()) out.push_back(std::move(z));
    }
    return out;
  }
  if (Y.kind() == SpaceKind::FinitePoints) {
    for (std::size_t i = 0; i < Y.metric().size(); ++i) {
      Point z = FiniteLabel{i};
      if (dist_to_set(Y, z, target) < tau) out.push_back(std::move(z));
    }
    return out;
  }
  throw std::invalid_argument("no cover construction for the " + Y.name() + " codomain");
}

// Sound refutation of level n: every y with d(y, target) < tau is at least
// tau from the value of some admissible probe, at every scheduled delta.
// Points farther than tau from target are refuted by x itself.
template <class Cut>
std::optional<LevelRefutation> cover_refute(const MultiMap& F, const ProbePool& pool, const ClosedSet& target,
                                            Nat m, Nat n, const CheckConfig& cfg, Cut&& cut) {
  const Rational tau = inv_succ(n);
  const Rational rho = F.codomain.is_real() ? tau / Rational(8) : Rational(0);
  LevelRefutation ref{m, n, tau, rho, {}};
  for (const auto& z : cover_points(F.codomain, target, tau, rho)) {
    auto s = pool.sups([&](const ClosedSet& v) { return dist_to_set(F.codomain, z, cut(v)); });
    if (sup_dist(s) < tau + rho) return std::nullopt;
    for (const auto& delta : cfg.delta_schedule) {
      ref.cover.push_back({z, delta, pool.points[s.arg.back()], sup_dist(s)});
    }
  }
  return ref;
}

struct DenseScan {
  std::vector<Point> ys;
  std::vector<ProbePool::Sups> sups;
};

template <class Cut>
DenseScan dense_scan(const MultiMap& F, const ProbePool& pool, const CheckConfig& cfg, Cut&& cut) {
  const auto seq = cfg.alternative_dense ? alternative_dense_sequence(F.codomain) : dense_sequence(F.codomain);
  DenseScan out;
  for (Nat s = 0; s <= cfg.dense_bound; ++s) {
    out.ys.push_back(seq.at(s));
    const Point& y = out.ys.back();
    out.sups.push_back(pool.sups([&](const ClosedSet& v) { return dist_to_set(F.codomain, y, cut(v)); }));
  }
  return out;
}

std::optional<LevelPass> best_pass(const DenseScan& scan, const CheckConfig& cfg) {
  std::optional<LevelPass> best;
  for (Nat s = 0; s < scan.ys.size(); ++s) {
    const auto& sp = scan.sups[s];
    for (std::size_t j = 0; j < sp.sup.size(); ++j) {
      if (!best || sp.sup[j] < best->sup) best = LevelPass{0, 0, s, scan.ys[s], cfg.delta_schedule[j], sp.sup[j]};
    }
  }
  return best;
}

struct StarOutcome {
  VerdictKind kind;
  std::vector<LevelPass> passes;
  std::optional<LevelRefutation> refutation;
  std::string report;
};

template <class Cut>
StarOutcome star_levels(const MultiMap& F, const ProbePool& pool, const ClosedSet& target, Nat m,
                        const CheckConfig& cfg, Cut&& cut) {
  const DenseScan scan = dense_scan(F, pool, cfg, cut);
  const auto best = best_pass(scan, cfg);
  StarOutcome out{VerdictKind::Continuous, {}, std::nullopt, ""};
  std::vector<Nat> failing;
  for (Nat n = 0; n <= cfg.n_bound; ++n) {
    if (best && best->sup < inv_succ(n)) {
      LevelPass p = *best;
      p.m = m;
      p.n = n;
      out.passes.push_back(std::move(p));
    } else {
      failing.push_back(n);
    }
  }
  if (failing.empty()) return out;
  for (Nat n : failing) {
    if (auto ref = cover_refute(F, pool, target, m, n, cfg, cut)) {
      out.kind = VerdictKind::Discontinuous;
      out.refutation = std::move(ref);
      return out;
    }
  }
  out.kind = VerdictKind::Inconclusive;
  out.report = "level n = " + std::to_string(failing.front()) + " failed for s <= " +
               std::to_string(cfg.dense_bound) + " but no cover refutation holds for n <= " +
               std::to_string(cfg.n_bound);
  return out;
}

}  // namespace

Verdict eval_star(const MultiMap& F, const Point& x, const CheckConfig& cfg, const ProbeGen& probes) {
  cfg.validate();
  const ClosedSet fx = value_at(F, x);
  const ProbePool pool(F, x, cfg, probes);
  auto out = star_levels(F, pool, fx, 0, cfg, [](const ClosedSet& v) -> const ClosedSet& { return v; });
  CriterionEvidence ev;
  ev.passes = std::move(out.passes);
  if (out.refutation) ev.refutations.push_back(std::move(*out.refutation));
  return {out.kind, std::nullopt, std::move(ev), out.report};
}

Verdict eval_dagger(const MultiMap& F, const Point& x, const CheckConfig& cfg, const ProbeGen& probes) {
  cfg.validate();
  if (!F.codomain.is_real()) throw std::invalid_argument("eval_dagger needs a real codomain");
  const ClosedSet fx = value_at(F, x);
  const ProbePool pool(F, x, cfg, probes);
  CriterionEvidence ev;
  std::string report;
  for (Nat m = 0; m <= cfg.m_bound; ++m) {
    const Rational lo(-static_cast<long>(m)), hi(static_cast<long>(m));
    auto cut = [&](const ClosedSet& v) { return intersect_interval(v, lo, hi); };
    auto out = star_levels(F, pool, cut(fx), m, cfg, cut);
    if (out.kind == VerdictKind::Continuous) {
      ev.passes = std::move(out.passes);
      return {VerdictKind::Continuous, std::nullopt, std::move(ev), ""};
    }
    if (out.kind == VerdictKind::Discontinuous) {
      ev.refutations.push_back(std::move(*out.refutation));
    } else if (report.empty()) {
      report = "m = " + std::to_string(m) + ": " + out.report;
    }
  }
  if (!report.empty()) return {VerdictKind::Inconclusive, std::nullopt, std::move(ev), report};
  return {VerdictKind::Discontinuous, std::nullopt, std::move(ev), ""};
}

Verdict eval_strong_star(const MultiMap& F, const Point& x, const CheckConfig& cfg, const ProbeGen& probes) {
  cfg.validate();
  const ClosedSet fx = value_at(F, x);
  const ProbePool pool(F, x, cfg, probes);
  const auto ident = [](const ClosedSet& v) -> const ClosedSet& { return v; };
  const DenseScan scan = dense_scan(F, pool, cfg, ident);
  for (Nat n = 0; n <= cfg.n_bound; ++n) {
    const Rational near = inv_succ(n) / Rational(3);
    for (Nat s = 0; s < scan.ys.size(); ++s) {
      if (near < dist_to_set(F.codomain, scan.ys[s], fx)) continue;
      const auto& sp = scan.sups[s];
      if (sup_dist(sp) < inv_succ(n)) continue;
      CriterionEvidence ev;
      ev.strong_failure = LevelPass{0, n, s, scan.ys[s], cfg.delta_schedule.back(), sup_dist(sp)};
      return {VerdictKind::Discontinuous, std::nullopt, std::move(ev), ""};
    }
  }
  return {VerdictKind::Continuous, std::nullopt, CriterionEvidence{},
          "all (n, s) with n <= " + std::to_string(cfg.n_bound) + ", s <= " + std::to_string(cfg.dense_bound) +
              " pass"};
}

Verdict eval_lower_fell(const MultiMap& F, const Point& x, const CheckConfig& cfg, const ProbeGen& probes,
                        std::vector<LowerFellBall> test_balls) {
  cfg.validate();
  const ClosedSet fx = closure(value_at(F, x));
  if (test_balls.empty()) {
    for (const auto& y : eps_net(fx, cfg.net_resolution)) {
      for (const auto& eps : cfg.eps_schedule) test_balls.push_back({y, eps});
    }
  }
  const ProbePool pool(F, x, cfg, probes);
  CriterionEvidence ev;
  for (const auto& ball : test_balls) {
    if (!meets_open_ball(F.codomain, fx, ball.center, ball.radius)) continue;
    // Score 1 for a probe whose closed value misses the ball.
    auto s = pool.sups([&](const ClosedSet& v) {
      return Rational(meets_open_ball(F.codomain, closure(v), ball.center, ball.radius) ? 0 : 1);
    });
    std::optional<std::size_t> hit;
    for (std::size_t j = 0; j < s.sup.size() && !hit; ++j) {
      if (s.sup[j].sign() == 0) hit = j;
    }
    if (!hit) {
      LowerFellRefutation r{ball, {}};
      for (const auto& delta : cfg.delta_schedule) r.counterexamples.push_back({delta, pool.points[s.arg.back()]});
      ev.fell_failure = std::move(r);
      return {VerdictKind::Discontinuous, std::nullopt, std::move(ev), ""};
    }
    ev.fell_passes.push_back({ball, cfg.delta_schedule[*hit]});
  }
  return {VerdictKind::Continuous, std::nullopt, std::move(ev), ""};
}

namespace {

WitnessCheck fail(std::string why) { return {false, std::move(why)}; }

WitnessCheck verify_table(const MultiMap& F, const Point& x, const ClosedSet& fx, const ContinuityWitness& w,
                          const CheckConfig& cfg, const ProbeGen& probes) {
  if (!F.codomain.contains(w.y)) return fail("y is not a codomain point");
  if (dist_to_set(F.codomain, w.y, fx).sign() != 0) return fail("y = " + point_str(w.y) + " is not in F(x)");
  for (const auto& eps : cfg.eps_schedule) {
    bool covered = std::any_of(w.table.begin(), w.table.end(), [&](const EpsDelta& r) { return r.eps <= eps; });
    if (!covered) return fail("table does not cover eps = " + eps.str());
  }
  for (const auto& row : w.table) {
    if (row.eps.sign() <= 0 || row.delta.sign() <= 0) return fail("table entries must be positive");
    for (const auto& xp : probe_set(F, x, row.delta, cfg, probes)) {
      Rational d = dist_to_set(F.codomain, w.y, F(xp));
      if (!(d < row.eps)) {
        return fail("probe " + point_str(xp) + " at delta " + row.delta.str() + " gives distance " + d.str() +
                    " >= eps " + row.eps.str());
      }
    }
  }
  return {};
}

WitnessCheck verify_refutation(const MultiMap& F, const Point& x, const Refutation& r, const CheckConfig& cfg) {
  if (r.eps_star.sign() <= 0) return fail("eps_star must be positive");
  for (const auto& delta : cfg.delta_schedule) {
    auto it = std::find_if(r.counterexamples.begin(), r.counterexamples.end(),
                           [&](const Counterexample& c) { return c.delta == delta; });
    if (it == r.counterexamples.end()) return fail("no counterexample for delta " + delta.str());
  }
  for (const auto& c : r.counterexamples) {
    if (!F.domain.contains(c.x_prime)) return fail("counterexample outside the domain");
    if (!(dist(F.domain, x, c.x_prime) < c.delta)) {
      return fail("counterexample " + point_str(c.x_prime) + " is not within delta " + c.delta.str());
    }
    Rational d = dist_to_set(F.codomain, r.y, F(c.x_prime));
    if (d < r.eps_star) {
      return fail("counterexample " + point_str(c.x_prime) + " gives distance " + d.str() + " < eps_star " +
                  r.eps_star.str());
    }
  }
  return {};
}

}  // namespace

WitnessCheck verify_witness(const MultiMap& F, const Point& x, const Witness& w, const CheckConfig& cfg,
                            const ProbeGen& probes) {
  try {
    cfg.validate();
    const ClosedSet fx = value_at(F, x);
    if (auto* c = std::get_if<ContinuityWitness>(&w)) return verify_table(F, x, fx, *c, cfg, probes);
    if (auto* s = std::get_if<StrongContinuityWitness>(&w)) {
      if (s->net_resolution.sign() <= 0) return fail("net_resolution must be positive");
      for (const auto& y : eps_net(fx, s->net_resolution)) {
        auto it = std::find_if(s->tables.begin(), s->tables.end(),
                               [&](const ContinuityWitness& t) { return t.y == y; });
        if (it == s->tables.end()) return fail("no table for net point " + point_str(y));
      }
      for (const auto& t : s->tables) {
        if (auto r = verify_table(F, x, fx, t, cfg, probes); !r) return r;
      }
      return {};
    }
    const auto& d = std::get<DiscontinuityWitness>(w);
    if (d.strong) {
      if (d.entries.size() != 1) return fail("strong refutation needs exactly one entry");
      if (dist_to_set(F.codomain, d.entries[0].y, fx).sign() != 0) return fail("refuted y is not in F(x)");
      return verify_refutation(F, x, d.entries[0], cfg);
    }
    if (d.net_resolution.sign() <= 0) return fail("net_resolution must be positive");
    for (const auto& y : eps_net(fx, d.net_resolution)) {
      auto it = std::find_if(d.entries.begin(), d.entries.end(), [&](const Refutation& r) { return r.y == y; });
      if (it == d.entries.end()) return fail("net point " + point_str(y) + " is not refuted");
    }
    for (const auto& r : d.entries) {
      if (!(d.net_resolution < r.eps_star)) {
        return fail("eps_star " + r.eps_star.str() + " does not exceed the net resolution");
      }
      if (auto res = verify_refutation(F, x, r, cfg); !res) return res;
    }
    return {};
  } catch (const std::exception& e) {
    return fail(e.what());
  }
}

Mode parse_mode(std::string_view text) {
  if (text == "plain") return Mode::Plain;
  if (text == "strong") return Mode::Strong;
  if (text == "star") return Mode::Star;
  if (text == "dagger") return Mode::Dagger;
  if (text == "strong_star") return Mode::StrongStar;
  if (text == "fell") return Mode::LowerFell;
  throw std::invalid_argument("unknown mode '" + std::string(text) +
                              "' (plain, strong, star, dagger, strong_star, fell)");
}

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::Plain:
      return "plain";
    case Mode::Strong:
      return "strong";
    case Mode::Star:
      return "star";
    case Mode::Dagger:
      return "dagger";
    case Mode::StrongStar:
      return "strong_star";
    case Mode::LowerFell:
      break;
  }
  return "fell";
}

Verdict run_mode(Mode mode, const MultiMap& F, const Point& x, const CheckConfig& cfg, const ProbeGen& probes) {
  switch (mode) {
    case Mode::Plain:
      return check_continuity(F, x, cfg, probes);
    case Mode::Strong:
      return check_strong_continuity(F, x, cfg, probes);
    case Mode::Star:
      return eval_star(F, x, cfg, probes);
    case Mode::Dagger:
      return eval_dagger(F, x, cfg, probes);
    case Mode::StrongStar:
      return eval_strong_star(F, x, cfg, probes);
    case Mode::LowerFell:
      break;
  }
  return eval_lower_fell(F, x, cfg, probes);
}

std::vector<Verdict> continuity_points_serial(const MultiMap& F, const std::vector<Point>& sample, Mode mode,
                                              const CheckConfig& cfg, const ProbeGen& probes) {
  std::vector<Verdict> out;
  out.reserve(sample.size());
  for (const auto& x : sample) out.push_back(run_mode(mode, F, x, cfg, probes));
  return out;
}

std::vector<Verdict> continuity_points(const MultiMap& F, const std::vector<Point>& sample, Mode mode,
                                       const CheckConfig& cfg, const ProbeGen& probes) {
  const long n = static_cast<long>(sample.size());
  std::vector<Verdict> out(sample.size());
  std::vector<std::exception_ptr> errors(sample.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = run_mode(mode, F, sample[i], cfg, probes);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

MultiMap closure_of(const MultiMap& F) {
  MultiMap G = F;
  G.name = "closure(" + F.name + ")";
  G.rule = [rule = F.rule](const Point& x) { return closure(rule(x)); };
  return G;
}

}  // namespace baire
