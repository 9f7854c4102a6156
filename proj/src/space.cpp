#include "baire/space.hpp"

#include <numeric>
#include <stdexcept>

namespace baire {

FiniteMetric::FiniteMetric(std::vector<std::string> l, std::vector<std::vector<Rational>> t)
    : labels(std::move(l)), table(std::move(t)) {
  const std::size_t n = labels.size();
  if (n == 0) throw std::invalid_argument("finite space needs at least one point");
  if (table.size() != n) throw std::invalid_argument("metric table has wrong row count");
  for (const auto& row : table) {
    if (row.size() != n) throw std::invalid_argument("metric table is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i][i] != 0) throw std::invalid_argument("metric table diagonal must be zero");
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j] != table[j][i]) throw std::invalid_argument("metric table must be symmetric");
      if (i != j && table[i][j].sign() <= 0) {
        throw std::invalid_argument("distinct points need positive distance");
      }
      for (std::size_t k = 0; k < n; ++k) {
        if (table[i][k] > table[i][j] + table[j][k]) {
          throw std::invalid_argument("metric table violates the triangle inequality at " +
                                      labels[i] + "," + labels[j] + "," + labels[k]);
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (labels[i] == labels[j]) throw std::invalid_argument("duplicate label " + labels[i]);
    }
  }
}

std::size_t FiniteMetric::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (labels[i] == label) return i;
  }
  throw std::invalid_argument("unknown point label: " + label);
}

PointSpace PointSpace::finite(FiniteMetric m) {
  PointSpace s(SpaceKind::FinitePoints);
  s.finite_ = std::make_shared<const FiniteMetric>(std::move(m));
  return s;
}

const FiniteMetric& PointSpace::metric() const {
  if (!finite_) throw std::logic_error("not a finite space");
  return *finite_;
}

bool operator==(const PointSpace& a, const PointSpace& b) {
  if (a.kind_ != b.kind_) return false;
  if (a.kind_ != SpaceKind::FinitePoints) return true;
  return a.finite_ == b.finite_ ||
         (a.finite_->labels == b.finite_->labels && a.finite_->table == b.finite_->table);
}

bool PointSpace::contains(const Point& p) const {
  switch (kind_) {
    case SpaceKind::RealLine:
      return std::holds_alternative<Rational>(p);
    case SpaceKind::UnitInterval: {
      auto* r = std::get_if<Rational>(&p);
      return r && r->sign() >= 0 && *r <= Rational(1);
    }
    case SpaceKind::Baire:
      return std::holds_alternative<BairePoint>(p);
    case SpaceKind::CantorGrid:
      return std::holds_alternative<CantorGridPoint>(p);
    case SpaceKind::FinitePoints: {
      auto* f = std::get_if<FiniteLabel>(&p);
      return f && f->index < finite_->size();
    }
    case SpaceKind::Trees:
      return std::holds_alternative<Tree>(p);
  }
  return false;
}

std::string PointSpace::name() const {
  switch (kind_) {
    case SpaceKind::RealLine: return "real_line";
    case SpaceKind::UnitInterval: return "unit_interval";
    case SpaceKind::Baire: return "baire";
    case SpaceKind::CantorGrid: return "cantor_grid";
    case SpaceKind::FinitePoints: return "finite";
    case SpaceKind::Trees: return "trees";
  }
  return "?";
}

void require_member(const PointSpace& space, const Point& p, const char* what) {
  if (!space.contains(p)) {
    throw std::invalid_argument(std::string(what) + " is not a point of the " + space.name() + " space");
  }
}

Rational dist(const PointSpace& space, const Point& a, const Point& b) {
  require_member(space, a, "first argument");
  require_member(space, b, "second argument");
  switch (space.kind()) {
    case SpaceKind::RealLine:
    case SpaceKind::UnitInterval:
      return abs(std::get<Rational>(a) - std::get<Rational>(b));
    case SpaceKind::Baire:
      return baire_dist(std::get<BairePoint>(a), std::get<BairePoint>(b));
    case SpaceKind::CantorGrid:
      return grid_dist(std::get<CantorGridPoint>(a), std::get<CantorGridPoint>(b));
    case SpaceKind::FinitePoints:
      return space.metric().table[std::get<FiniteLabel>(a).index][std::get<FiniteLabel>(b).index];
    case SpaceKind::Trees:
      return tree_dist(std::get<Tree>(a), std::get<Tree>(b));
  }
  throw std::logic_error("unreachable");
}

std::string point_str(const Point& p) {
  struct V {
    std::string operator()(const Rational& r) const { return r.str(); }
    std::string operator()(const BairePoint& b) const { return to_string(b); }
    std::string operator()(const CantorGridPoint& g) const { return grid_str(g); }
    std::string operator()(const FiniteLabel& f) const { return "#" + std::to_string(f.index); }
    std::string operator()(const Tree& t) const { return t.str(); }
  };
  return std::visit(V{}, p);
}

// ---- rational enumerations ----

namespace {

struct Frac {
  BigNat p, q;
};

Frac mediant(const Frac& a, const Frac& b) { return {a.p + b.p, a.q + b.q}; }

// Walk a Stern-Brocot subtree whose root is the mediant of lo and hi.
Rational sb_walk(const BigNat& j, Frac lo, Frac hi) {
  if (j < 1) throw std::invalid_argument("Stern-Brocot index starts at 1");
  Frac cur = mediant(lo, hi);
  const std::size_t bits = mpz_sizeinbase(j.get_mpz_t(), 2);
  for (std::size_t b = bits - 1; b-- > 0;) {
    if (mpz_tstbit(j.get_mpz_t(), b)) {
      lo = cur;
    } else {
      hi = cur;
    }
    cur = mediant(lo, hi);
  }
  return Rational(cur.p, cur.q);
}

BigNat sb_locate(const Rational& q, Frac lo, Frac hi) {
  BigNat j = 1;
  Frac cur = mediant(lo, hi);
  while (true) {
    Rational c(cur.p, cur.q);
    if (c == q) return j;
    j *= 2;
    if (q < c) {
      hi = cur;
    } else {
      lo = cur;
      j += 1;
    }
    cur = mediant(lo, hi);
  }
}

const Frac kZero{0, 1}, kOne{1, 1}, kInf{1, 0};

Rational floor_grid(const Rational& x, Nat k) {
  BigNat den = static_cast<unsigned long>(k + 1);
  return Rational((x * Rational(den)).floor(), den);
}

BigNat signed_slot(const Rational& r, const std::function<BigNat(const Rational&)>& index) {
  if (r.sign() == 0) return 0;
  BigNat j = index(abs(r));
  return r.sign() > 0 ? BigNat(2 * j - 1) : BigNat(2 * j);
}

Rational signed_at(Nat s, const std::function<Rational(const BigNat&)>& at) {
  if (s == 0) return Rational(0);
  BigNat j = static_cast<unsigned long>((s + 1) / 2);
  Rational q = at(j);
  return (s % 2 == 1) ? q : -q;
}

Nat euler_phi(Nat n) {
  Nat r = 0;
  for (Nat p = 1; p < n; ++p) r += std::gcd(p, n) == 1;
  return r;
}

}  // namespace

Rational stern_brocot_at(const BigNat& j) { return sb_walk(j, kZero, kInf); }

BigNat stern_brocot_index(const Rational& q) {
  if (q.sign() <= 0) throw std::invalid_argument("Stern-Brocot order covers positive rationals");
  return sb_locate(q, kZero, kInf);
}

Rational calkin_wilf_at(const BigNat& j) {
  if (j < 1) throw std::invalid_argument("Calkin-Wilf index starts at 1");
  BigNat a = 1, b = 1;
  const std::size_t bits = mpz_sizeinbase(j.get_mpz_t(), 2);
  for (std::size_t i = bits - 1; i-- > 0;) {
    if (mpz_tstbit(j.get_mpz_t(), i)) {
      a = a + b;
    } else {
      b = a + b;
    }
  }
  return Rational(a, b);
}

BigNat calkin_wilf_index(const Rational& q) {
  if (q.sign() <= 0) throw std::invalid_argument("Calkin-Wilf order covers positive rationals");
  BigNat a = q.num(), b = q.den();
  std::vector<bool> path;
  while (!(a == 1 && b == 1)) {
    if (a < b) {
      b -= a;
      path.push_back(false);
    } else {
      a -= b;
      path.push_back(true);
    }
  }
  BigNat j = 1;
  for (auto it = path.rbegin(); it != path.rend(); ++it) j = 2 * j + (*it ? 1 : 0);
  return j;
}

BairePoint eventually_zero_at(Nat s) {
  if (s == 0) return BairePoint::constant(0);
  Nat seen = 1;
  for (Nat w = 2;; ++w) {
    Nat count = Nat{1} << (w - 2);  // canonical words of weight w
    if (s < seen + count) {
      for (const auto& u : nodes_of_weight(w)) {
        if (u.back() == 0) continue;
        if (seen == s) return pad(u);
        ++seen;
      }
    }
    seen += count;
  }
}

namespace {

BairePoint eventually_zero_alt_at(Nat s) {
  if (s == 0) return BairePoint::constant(0);
  Nat seen = 1;
  for (Nat w = 2;; ++w) {
    Nat count = Nat{1} << (w - 2);
    if (s < seen + count) {
      auto nodes = nodes_of_weight(w);
      for (auto it = nodes.rbegin(); it != nodes.rend(); ++it) {
        if (it->back() == 0) continue;
        if (seen == s) return pad(*it);
        ++seen;
      }
    }
    seen += count;
  }
}

BigNat eventually_zero_bound(const Point& x, Nat k) {
  Seq u = std::get<BairePoint>(x).take(k + 1);
  while (!u.empty() && u.back() == 0) u.pop_back();
  Nat w = node_weight(u);
  if (w == 0) return 0;
  BigNat b;
  mpz_ui_pow_ui(b.get_mpz_t(), 2, w - 1);
  return b;
}

CantorGridPoint grid_from_bits(const BigNat& v) {
  std::map<Nat, std::vector<Bit>> rows;
  const std::size_t bits = v == 0 ? 0 : mpz_sizeinbase(v.get_mpz_t(), 2);
  for (std::size_t i = 0; i < bits; ++i) {
    if (!mpz_tstbit(v.get_mpz_t(), i)) continue;
    auto [m, s] = unpair_index(i);
    auto& row = rows[m];
    if (row.size() <= s) row.resize(s + 1, 0);
    row[s] = 1;
  }
  std::map<Nat, RowSpec> spec;
  for (auto& [m, bitsv] : rows) spec.emplace(m, RowSpec(bitsv, {0}));
  return CantorGridPoint(std::move(spec), RowSpec::constant(0));
}

BigNat grid_bits(const Point& x, Nat k) {
  const auto& g = std::get<CantorGridPoint>(x);
  BigNat v = 0;
  for (Nat i = 0; i <= k; ++i) {
    auto [m, s] = unpair_index(i);
    if (g.entry(m, s)) mpz_setbit(v.get_mpz_t(), i);
  }
  return v;
}

BigNat gray_inverse(BigNat v) {
  BigNat r = v, sh = v >> 1;
  while (sh != 0) {
    r ^= sh;
    sh >>= 1;
  }
  return r;
}

}  // namespace

DenseSequence dense_sequence(const PointSpace& space) {
  switch (space.kind()) {
    case SpaceKind::RealLine:
      return {"stern_brocot",
              [](Nat s) -> Point { return signed_at(s, stern_brocot_at); },
              [](const Point& x, Nat k) {
                return signed_slot(floor_grid(std::get<Rational>(x), k), stern_brocot_index);
              }};
    case SpaceKind::UnitInterval:
      return {"stern_brocot_unit",
              [](Nat s) -> Point {
                if (s <= 1) return Rational(static_cast<long>(s));
                return sb_walk(BigNat(static_cast<unsigned long>(s - 1)), kZero, kOne);
              },
              [](const Point& x, Nat k) -> BigNat {
                Rational r = floor_grid(std::get<Rational>(x), k);
                if (r.sign() == 0) return 0;
                if (r == Rational(1)) return 1;
                return sb_locate(r, kZero, kOne) + 1;
              }};
    case SpaceKind::Baire:
      return {"eventually_zero", [](Nat s) -> Point { return eventually_zero_at(s); },
              eventually_zero_bound};
    case SpaceKind::CantorGrid:
      return {"finite_support",
              [](Nat s) -> Point { return grid_from_bits(BigNat(static_cast<unsigned long>(s))); },
              grid_bits};
    case SpaceKind::FinitePoints: {
      const std::size_t n = space.metric().size();
      return {"labels", [n](Nat s) -> Point { return FiniteLabel{s % n}; },
              [](const Point& x, Nat) { return BigNat(static_cast<unsigned long>(std::get<FiniteLabel>(x).index)); }};
    }
    case SpaceKind::Trees:
      break;
  }
  throw std::invalid_argument("no dense sequence for the " + space.name() + " space");
}

DenseSequence alternative_dense_sequence(const PointSpace& space) {
  switch (space.kind()) {
    case SpaceKind::RealLine:
      return {"calkin_wilf",
              [](Nat s) -> Point { return signed_at(s, calkin_wilf_at); },
              [](const Point& x, Nat k) {
                return signed_slot(floor_grid(std::get<Rational>(x), k), calkin_wilf_index);
              }};
    case SpaceKind::UnitInterval:
      return {"farey",
              [](Nat s) -> Point {
                if (s <= 1) return Rational(static_cast<long>(s));
                Nat seen = 2;
                for (Nat q = 2;; ++q) {
                  for (Nat p = 1; p < q; ++p) {
                    if (std::gcd(p, q) != 1) continue;
                    if (seen == s) return Rational(static_cast<long>(p), static_cast<long>(q));
                    ++seen;
                  }
                }
              },
              [](const Point& x, Nat k) -> BigNat {
                Rational r = floor_grid(std::get<Rational>(x), k);
                if (r.sign() == 0) return 0;
                if (r == Rational(1)) return 1;
                Nat p = r.num().get_ui(), q = r.den().get_ui();
                Nat idx = 2;
                for (Nat d = 2; d < q; ++d) idx += euler_phi(d);
                for (Nat a = 1; a < p; ++a) idx += std::gcd(a, q) == 1;
                return BigNat(static_cast<unsigned long>(idx));
              }};
    case SpaceKind::Baire:
      return {"eventually_zero_reversed", [](Nat s) -> Point { return eventually_zero_alt_at(s); },
              eventually_zero_bound};
    case SpaceKind::CantorGrid:
      return {"finite_support_gray",
              [](Nat s) -> Point { return grid_from_bits(BigNat(static_cast<unsigned long>(s ^ (s >> 1)))); },
              [](const Point& x, Nat k) { return gray_inverse(grid_bits(x, k)); }};
    case SpaceKind::FinitePoints: {
      const std::size_t n = space.metric().size();
      return {"labels_reversed", [n](Nat s) -> Point { return FiniteLabel{n - 1 - s % n}; },
              [n](const Point& x, Nat) {
                return BigNat(static_cast<unsigned long>(n - 1 - std::get<FiniteLabel>(x).index));
              }};
    }
    case SpaceKind::Trees:
      break;
  }
  throw std::invalid_argument("no dense sequence for the " + space.name() + " space");
}

Point dense_point(const PointSpace& space, Nat s) { return dense_sequence(space).at(s); }

}  // namespace baire
