#include "baire/gallery.hpp"

#include <algorithm>
#include <stdexcept>

namespace baire {

// ---- F1 ----

bool r_membership(const CantorGridPoint& g, Nat m) { return g.row_has_infinitely_many_ones(m); }

Nat n_of(const CantorGridPoint& g, Nat m) {
  if (r_membership(g, m)) {
    throw std::invalid_argument("n_of is undefined: row " + std::to_string(m) + " has infinitely many ones");
  }
  // A canonical eventually-zero row has a prefix ending in its last 1.
  return g.row(m).prefix().size() + 1;
}

ClosedSet f1_value(const CantorGridPoint& g, Nat M) {
  std::vector<Rational> pts;
  for (Nat m = 0; m <= M; ++m) {
    Rational base(static_cast<long>(m));
    pts.push_back(r_membership(g, m) ? base : base + inv_succ(n_of(g, m)));
  }
  return finite_real(std::move(pts));
}

namespace {

bool period_has_one(const RowSpec& r) {
  return std::find(r.period().begin(), r.period().end(), Bit{1}) != r.period().end();
}

// Is there s >= i with r(s) = 1?
bool one_from(const RowSpec& r, const BigNat& i) {
  if (period_has_one(r)) return true;
  const auto& p = r.prefix();
  if (i >= p.size()) return false;
  for (std::size_t s = i.get_ui(); s < p.size(); ++s) {
    if (p[s]) return true;
  }
  return false;
}

}  // namespace

bool f1_graph_member(const CantorGridPoint& g, const Rational& y, std::optional<Nat> window, F1Clause clause) {
  if (y.sign() < 0) return false;
  // A candidate m satisfies y = m or 0 < y - m <= 1/2.
  BigNat lo = (y - Rational(1, 2)).ceil(), hi = y.floor();
  if (lo < 0) lo = 0;
  if (window && hi > *window) hi = static_cast<unsigned long>(*window);
  for (BigNat mb = lo; mb <= hi; ++mb) {
    const Nat m = mb.get_ui();
    const Rational rm(mb);
    if (y == rm) {
      if (r_membership(g, m)) return true;
      continue;
    }
    const Rational q = Rational(1) / (y - rm);
    if (!q.is_integer() || q < Rational(2)) continue;
    const BigNat k = q.num() - 2;
    const RowSpec& row = g.row(m);
    if (one_from(row, k)) continue;  // needs gamma(m,s) = 0 for all s >= k
    // for all i < k some later 1; the clause is monotone in i, so i = k-1 decides it
    if (k > 0) {
      const BigNat from = clause == F1Clause::AtLeast ? BigNat(k - 1) : k;
      if (!one_from(row, from)) continue;
    }
    return true;
  }
  return false;
}

CantorGridPoint grid_fill(const CantorGridPoint& g, const BigNat& pinned, Bit fill) {
  if (pinned > (BigNat(1) << 26)) throw std::invalid_argument("ball too small to materialize its grid cells");
  const Nat K = pinned.get_ui();
  std::map<Nat, RowSpec> rows;
  for (Nat m = 0; pair_index(m, 0) < K; ++m) {
    Nat c = 0;
    while (pair_index(m, c) < K) ++c;
    rows.emplace(m, RowSpec(g.row(m).take(c), {fill}));
  }
  return CantorGridPoint(std::move(rows), RowSpec::constant(fill));
}

namespace {

Nat pinned_in_row(Nat m, Nat K) {
  Nat c = 0;
  while (pair_index(m, c) < K) ++c;
  return c;
}

CantorGridPoint with_row(const CantorGridPoint& g, Nat m, RowSpec row) {
  auto rows = g.explicit_rows();
  rows.insert_or_assign(m, std::move(row));
  return CantorGridPoint(std::move(rows), g.default_row());
}

}  // namespace

MultiMap f1_multimap(Nat M) {
  return {"f1", PointSpace::cantor_grid(), PointSpace::real_line(),
          [M](const Point& x) { return f1_value(std::get<CantorGridPoint>(x), M); }};
}

CheckConfig f1_check_config() {
  CheckConfig cfg = CheckConfig::defaults();
  cfg.delta_schedule.clear();
  for (unsigned k = 0; k <= 17; ++k) cfg.delta_schedule.push_back(pow2_neg(k));
  cfg.n_bound = 16;
  return cfg;
}

ProbeGen f1_probes(Nat M) {
  return [M](const Point& center, const Rational& radius) {
    const auto& g = std::get<CantorGridPoint>(center);
    const BigNat K = pinned_slots(radius);
    std::vector<Point> out{g, grid_fill(g, K, 1), grid_fill(g, K, 0)};
    const Nat k = K.get_ui();
    for (Nat m = 0; m <= M; ++m) {
      const Nat c = pinned_in_row(m, k);
      auto kept = g.row(m).take(c);
      out.emplace_back(with_row(g, m, RowSpec(kept, {0})));
      out.emplace_back(with_row(g, m, RowSpec(kept, {1})));
      kept.push_back(1);
      out.emplace_back(with_row(g, m, RowSpec(kept, {0})));
    }
    return out;
  };
}

Witness f1_witness(const CantorGridPoint& g, Nat M, const CheckConfig& cfg) {
  for (Nat m = 0; m <= M; ++m) {
    if (!r_membership(g, m)) continue;
    ContinuityWitness w{Rational(static_cast<long>(m)), {}};
    for (const auto& eps : cfg.eps_schedule) {
      const Nat n = (Rational(1) / eps).floor().get_ui();  // 1/(n+1) < eps
      Nat s = n;
      while (!g.entry(m, s)) ++s;
      w.table.push_back({eps, inv_succ(pair_index(m, s))});
    }
    return w;
  }
  DiscontinuityWitness w{cfg.net_resolution, false, {}};
  for (Nat m = 0; m <= M; ++m) {
    const Nat n = n_of(g, m);
    Refutation r{Rational(static_cast<long>(m)) + inv_succ(n), inv_succ(n) / Rational(2), {}};
    for (const auto& delta : cfg.delta_schedule) {
      r.counterexamples.push_back({delta, grid_fill(g, pinned_slots(delta), 1)});
    }
    w.entries.push_back(std::move(r));
  }
  return w;
}

// ---- F2 ----

MultiMap f2_multimap() {
  return {"f2", PointSpace::trees(), PointSpace::baire(),
          [](const Point& x) { return tree_body(std::get<Tree>(x)); }};
}

Tree extend_terminal(const Tree& t, const Node& u, const BigNat& pinned) {
  std::set<Node> nodes = t.finite_part();
  Node v = u;
  v.push_back(fresh_entry(pinned));
  nodes.insert(std::move(v));
  return Tree(std::move(nodes), t.branches());
}

CheckConfig f2_check_config() {
  CheckConfig cfg = CheckConfig::defaults();
  cfg.eps_schedule.clear();
  cfg.delta_schedule.clear();
  for (unsigned k = 0; k <= 3; ++k) cfg.eps_schedule.push_back(pow2_neg(k));
  for (unsigned k = 0; k <= 20; ++k) cfg.delta_schedule.push_back(pow2_neg(k));
  cfg.n_bound = 3;
  cfg.dense_bound = 4096;
  return cfg;
}

ProbeGen f2_probes() {
  return [](const Point& center, const Rational& radius) {
    const auto& t = std::get<Tree>(center);
    const BigNat N = pinned_slots(radius);
    const Tree cut = truncate_below(t, N);
    std::vector<Point> out{t, cut};
    for (const auto& u : terminals(t)) out.emplace_back(extend_terminal(t, u, N));
    for (const auto& u : terminals(cut)) out.emplace_back(extend_terminal(cut, u, N));
    return out;
  };
}

Witness f2_witness(const Tree& t, const CheckConfig& cfg) {
  if (is_ill_founded(t)) {
    const BairePoint& alpha = t.branches().front();
    ContinuityWitness w{shift_up(alpha), {}};
    for (const auto& eps : cfg.eps_schedule) {
      // Trees keeping alpha|K have a value agreeing with y on K places.
      const Nat K = (Rational(1) / eps).floor().get_ui();
      w.table.push_back({eps, inv_succ(node_index(alpha.take(K)))});
    }
    return w;
  }
  DiscontinuityWitness w{cfg.net_resolution, false, {}};
  for (const auto& u : terminals(t)) {
    Node shifted = u;
    for (auto& v : shifted) ++v;
    Refutation r{pad(shifted), inv_succ(u.size() + 1), {}};
    for (const auto& delta : cfg.delta_schedule) {
      r.counterexamples.push_back({delta, extend_terminal(t, u, pinned_slots(delta))});
    }
    w.entries.push_back(std::move(r));
  }
  return w;
}

// ---- dense split ----

DenseSpec parse_dense_spec(std::string_view name) {
  if (name == "dyadic") return DenseSpec::Dyadic;
  if (name == "thirds") return DenseSpec::Thirds;
  throw std::invalid_argument("unknown dense set '" + std::string(name) + "' (dyadic, thirds)");
}

const char* dense_spec_name(DenseSpec spec) { return spec == DenseSpec::Dyadic ? "dyadic" : "thirds"; }

bool in_dense_set(DenseSpec spec, const Rational& q) {
  if (spec == DenseSpec::Dyadic) {
    const BigNat d = q.den();
    return mpz_popcount(d.get_mpz_t()) == 1;
  }
  return !(q * Rational(3)).is_integer();
}

MultiMap dense_split(DenseSpec spec) {
  return {std::string("dense_split:") + dense_spec_name(spec), PointSpace::unit_interval(),
          PointSpace::unit_interval(), [spec](const Point& x) {
            if (in_dense_set(spec, std::get<Rational>(x))) return finite_real({Rational(0)});
            return finite_real({Rational(0), Rational(1)});
          }};
}

namespace {

std::vector<Rational> nearby(const Rational& x, const Rational& delta) {
  std::vector<Rational> out;
  Rational step = delta;
  for (int j = 1; j <= 6; ++j) {
    step /= Rational(2);
    out.push_back(x + step);
    out.push_back(x - step);
  }
  out.push_back(x + delta / Rational(3));
  out.push_back(x - delta / Rational(3));
  return out;
}

// Dyadics floor(x 2^k)/2^k and the next one up, for 2^-k < delta.
std::vector<Rational> dyadic_near(const Rational& x, const Rational& delta) {
  std::vector<Rational> out;
  unsigned long k = 0;
  while (!(pow2_neg(k) < delta)) ++k;
  for (unsigned long j = k; j < k + 3; ++j) {
    const Rational unit = pow2_neg(j);
    const Rational lo = Rational((x / unit).floor()) * unit;
    out.push_back(lo);
    out.push_back(lo + unit);
  }
  return out;
}

}  // namespace

ProbeGen dense_split_probes(DenseSpec) {
  return [](const Point& center, const Rational& radius) {
    const auto& x = std::get<Rational>(center);
    std::vector<Point> out;
    for (const auto& q : dyadic_near(x, radius)) out.emplace_back(q);
    for (const auto& q : nearby(x, radius)) out.emplace_back(q);
    for (long k = 0; k <= 3; ++k) out.emplace_back(Rational(k, 3));
    return out;
  };
}

Witness dense_split_witness(DenseSpec spec, const Rational& x, const CheckConfig& cfg) {
  if (in_dense_set(spec, x)) {
    ContinuityWitness w{Rational(0), {}};
    for (const auto& eps : cfg.eps_schedule) w.table.push_back({eps, Rational(1)});
    return StrongContinuityWitness{cfg.net_resolution, {w}};
  }
  Refutation r{Rational(1), Rational(1, 2), {}};
  for (const auto& delta : cfg.delta_schedule) {
    std::optional<Rational> pick;
    auto candidates = dyadic_near(x, delta);
    for (const auto& q : nearby(x, delta)) candidates.push_back(q);
    for (const auto& q : candidates) {
      if (Rational(0) <= q && q <= Rational(1) && abs(q - x) < delta && in_dense_set(spec, q)) {
        pick = q;
        break;
      }
    }
    if (!pick) throw std::logic_error("no point of the dense set found near " + x.str());
    r.counterexamples.push_back({delta, *pick});
  }
  return DiscontinuityWitness{cfg.net_resolution, true, {std::move(r)}};
}

// ---- spike ----

SpikeSpec SpikeSpec::listed(std::vector<Rational> pts) {
  auto sorted = pts;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("spike points must be pairwise distinct");
  }
  return SpikeSpec{std::move(pts), false};
}

std::optional<Nat> SpikeSpec::index_of(const Rational& x) const {
  if (harmonic) {
    if (x.sign() > 0 && x.num() == 1) return x.den().get_ui() - 1;
    return std::nullopt;
  }
  auto it = std::find(points.begin(), points.end(), x);
  if (it == points.end()) return std::nullopt;
  return static_cast<Nat>(it - points.begin());
}

std::vector<std::pair<Nat, Rational>> SpikeSpec::first(Nat bound) const {
  std::vector<std::pair<Nat, Rational>> out;
  const Nat n = harmonic ? bound : std::min<Nat>(bound, points.size());
  for (Nat i = 0; i < n; ++i) out.emplace_back(i, harmonic ? inv_succ(i) : points[i]);
  return out;
}

MultiMap spike_function(const SpikeSpec& spec) {
  return {"spike", PointSpace::real_line(), PointSpace::real_line(), [spec](const Point& x) {
            auto n = spec.index_of(std::get<Rational>(x));
            return finite_real({n ? inv_succ(*n) : Rational(0)});
          }};
}

ProbeGen spike_probes(const SpikeSpec& spec) {
  return [spec](const Point& center, const Rational& radius) {
    const auto& x = std::get<Rational>(center);
    std::vector<Point> out;
    if (spec.harmonic) {
      // 1/(n+1) lies in the ball iff n+1 lies between 1/(x+radius) and 1/(x-radius).
      const Rational top = x + radius;
      if (top.sign() > 0) {
        BigNat n0 = (Rational(1) / top).floor();
        n0 = n0 > 1 ? BigNat(n0 - 1) : BigNat(0);
        for (BigNat n = n0; n < n0 + 24; ++n) {
          Rational p = inv_succ(n);
          if (abs(p - x) < radius) out.emplace_back(std::move(p));
        }
      }
    } else {
      for (const auto& p : spec.points) {
        if (abs(p - x) < radius) out.emplace_back(p);
      }
    }
    for (const auto& q : nearby(x, radius)) out.emplace_back(q);
    return out;
  };
}

Witness spike_witness(const SpikeSpec& spec, const Rational& x, const CheckConfig& cfg) {
  if (auto n = spec.index_of(x)) {
    const Rational v = inv_succ(*n);
    Refutation r{v, v / Rational(2), {}};
    for (const auto& delta : cfg.delta_schedule) {
      std::optional<Rational> pick;
      for (const auto& q : nearby(x, delta)) {
        if (!spec.index_of(q)) {
          pick = q;
          break;
        }
      }
      if (!pick) throw std::logic_error("no point off the spike set found near " + x.str());
      r.counterexamples.push_back({delta, *pick});
    }
    return DiscontinuityWitness{cfg.net_resolution, false, {std::move(r)}};
  }
  ContinuityWitness w{Rational(0), {}};
  for (const auto& eps : cfg.eps_schedule) {
    // Only x_i with i < floor(1/eps) carry a value >= eps.
    Rational delta(1);
    for (const auto& [i, p] : spec.first((Rational(1) / eps).floor().get_ui())) delta = min(delta, abs(x - p));
    w.table.push_back({eps, delta});
  }
  return w;
}

// ---- tabular, extend, compose ----

MultiMap tabular(PointSpace domain, PointSpace codomain, std::vector<ClosedSet> values) {
  if (domain.kind() != SpaceKind::FinitePoints) throw std::invalid_argument("tabular maps need a finite domain");
  if (values.size() != domain.metric().size()) {
    throw std::invalid_argument("tabular map needs one value per domain point");
  }
  for (const auto& v : values) {
    if (is_empty(v)) continue;
    // dist_to_set rejects a value that does not live in the codomain.
    (void)dist_to_set(codomain, dense_point(codomain, 0), v);
  }
  return {"tabular", std::move(domain), std::move(codomain),
          [values = std::move(values)](const Point& x) { return values.at(std::get<FiniteLabel>(x).index); }};
}

FiniteEmbedding::FiniteEmbedding(PointSpace f, PointSpace t, std::vector<std::size_t> img)
    : from(std::move(f)), to(std::move(t)), image(std::move(img)) {
  if (from.kind() != SpaceKind::FinitePoints || to.kind() != SpaceKind::FinitePoints) {
    throw std::invalid_argument("finite embeddings need FinitePoints spaces");
  }
  if (image.size() != from.metric().size()) throw std::invalid_argument("embedding needs one image per point");
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] >= to.metric().size()) throw std::invalid_argument("embedding image out of range");
    for (std::size_t j = 0; j < i; ++j) {
      if (image[i] == image[j]) throw std::invalid_argument("embedding must be injective");
      if (to.metric().table[image[i]][image[j]] != from.metric().table[i][j]) {
        throw std::invalid_argument("embedding must preserve distances");
      }
    }
  }
}

std::optional<std::size_t> FiniteEmbedding::preimage(std::size_t j) const {
  auto it = std::find(image.begin(), image.end(), j);
  if (it == image.end()) return std::nullopt;
  return static_cast<std::size_t>(it - image.begin());
}

MultiMap extend(const MultiMap& F0, const FiniteEmbedding& f) {
  if (!(F0.domain == f.from)) throw std::invalid_argument("embedding source differs from the map's domain");
  ClosedSet whole;
  try {
    whole = whole_space(F0.codomain);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("extend needs the whole codomain as a value off the image, and the " +
                                F0.codomain.name() + " space has no finite representation of itself");
  }
  return {"extend(" + F0.name + ")", f.to, F0.codomain, [F0, f, whole](const Point& x) {
            auto i = f.preimage(std::get<FiniteLabel>(x).index);
            return i ? F0(FiniteLabel{*i}) : whole;
          }};
}

MultiMap compose_affine(const AffineMap& pi, const MultiMap& F) {
  if (pi.a.sign() == 0) throw std::invalid_argument("affine map needs a nonzero slope");
  if (!F.codomain.is_real()) throw std::invalid_argument("affine maps act on real codomains");
  auto image = [pi](const Interval& i) {
    Rational l = pi(i.lo), h = pi(i.hi);
    return pi.a.sign() > 0 ? Interval{l, h} : Interval{h, l};
  };
  return {"affine(" + F.name + ")", F.domain, PointSpace::real_line(), [pi, image, rule = F.rule](const Point& x) {
            ClosedSet v = rule(x);
            if (auto* f = std::get_if<FiniteRealSet>(&v)) {
              std::vector<Rational> pts;
              for (const auto& p : f->points) pts.push_back(pi(p));
              return finite_real(std::move(pts));
            }
            if (auto* c = std::get_if<ClosedIntervalUnion>(&v)) {
              std::vector<Interval> iv;
              for (const auto& i : c->intervals) iv.push_back(image(i));
              return closed_intervals(std::move(iv));
            }
            if (auto* o = std::get_if<OpenIntervalUnion>(&v)) {
              std::vector<Interval> iv;
              for (const auto& i : o->intervals) iv.push_back(image(i));
              return open_intervals(std::move(iv));
            }
            if (is_empty(v)) return v;
            throw std::invalid_argument(std::string("no affine image for a ") + kind_name(v) + " value");
          }};
}

MultiMap compose_baire_embed(const MultiMap& F) {
  if (F.codomain.kind() != SpaceKind::Baire) throw std::invalid_argument("baire_embed acts on Baire-space values");
  return {"embed(" + F.name + ")", F.domain, PointSpace::unit_interval(), [rule = F.rule](const Point& x) {
            ClosedSet v = rule(x);
            if (is_empty(v)) return v;
            std::vector<Rational> pts;
            for (const auto& a : baire_members(v)) pts.push_back(baire_embed_point(a));
            return finite_real(std::move(pts));
          }};
}

// ---- embedding ----

namespace {

// Child n of [a, a+L] starts at a + L(1 - 2^-n) and has length L 2^-(n+2).
void descend(Rational& a, Rational& L, Nat n) {
  a += L * (Rational(1) - pow2_neg(n));
  L *= pow2_neg(n + 2);
}

}  // namespace

Interval interval_of(const Node& u) {
  Rational a(0), L(1);
  for (Nat n : u) descend(a, L, n);
  return {a, a + L};
}

Interval baire_embed(const BairePoint& a, Nat depth) { return interval_of(a.take(depth)); }

Rational baire_embed_point(const BairePoint& alpha) {
  Rational a(0), L(1);
  for (Nat n : alpha.prefix()) descend(a, L, n);
  // One period moves the left end by L*S and scales L by rho; sum the geometric series.
  Rational s(0), l(1);
  for (Nat n : alpha.period()) descend(s, l, n);
  return a + L * s / (Rational(1) - l);
}

}  // namespace baire
