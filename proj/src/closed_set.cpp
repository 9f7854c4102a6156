#include "baire/closed_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace baire {

ClosedSet finite_real(std::vector<Rational> pts) {
  if (pts.empty()) throw std::invalid_argument("finite real set must be nonempty");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return FiniteRealSet{std::move(pts)};
}

ClosedSet closed_intervals(std::vector<Interval> iv) {
  if (iv.empty()) throw std::invalid_argument("interval union must be nonempty");
  for (const auto& i : iv) {
    if (i.hi < i.lo) throw std::invalid_argument("closed interval needs lo <= hi");
  }
  std::sort(iv.begin(), iv.end());
  std::vector<Interval> merged;
  for (auto& i : iv) {
    if (!merged.empty() && i.lo <= merged.back().hi) {
      merged.back().hi = max(merged.back().hi, i.hi);
    } else {
      merged.push_back(std::move(i));
    }
  }
  return ClosedIntervalUnion{std::move(merged)};
}

ClosedSet open_intervals(std::vector<Interval> iv) {
  if (iv.empty()) throw std::invalid_argument("interval union must be nonempty");
  for (const auto& i : iv) {
    if (!(i.lo < i.hi)) throw std::invalid_argument("open interval needs lo < hi");
  }
  std::sort(iv.begin(), iv.end());
  std::vector<Interval> merged;
  for (auto& i : iv) {
    if (!merged.empty() && i.lo < merged.back().hi) {
      merged.back().hi = max(merged.back().hi, i.hi);
    } else {
      merged.push_back(std::move(i));
    }
  }
  return OpenIntervalUnion{std::move(merged)};
}

ClosedSet finite_baire(std::vector<BairePoint> pts) {
  if (pts.empty()) throw std::invalid_argument("finite Baire set must be nonempty");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return FiniteBaireSet{std::move(pts)};
}

ClosedSet tree_body(Tree t) { return TreeBody{std::move(t)}; }

ClosedSet finite_points(std::vector<std::size_t> idx) {
  if (idx.empty()) throw std::invalid_argument("finite point set must be nonempty");
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return FinitePointSet{std::move(idx)};
}

ClosedSet empty_set() { return EmptySet{}; }

bool is_empty(const ClosedSet& s) { return std::holds_alternative<EmptySet>(s); }

const char* kind_name(const ClosedSet& s) {
  static constexpr const char* names[] = {"finite_real", "closed_intervals", "open_intervals",
                                          "finite_baire", "tree_body", "finite_points", "empty"};
  return names[s.index()];
}

std::vector<BairePoint> baire_members(const ClosedSet& s) {
  if (auto* f = std::get_if<FiniteBaireSet>(&s)) return f->points;
  if (auto* t = std::get_if<TreeBody>(&s)) {
    Tree shifted = tree_shift(t->tree);
    std::vector<BairePoint> out = shifted.branches();
    for (const auto& u : terminals(shifted)) out.push_back(pad(u));
    std::sort(out.begin(), out.end());
    return out;
  }
  if (is_empty(s)) return {};
  throw std::invalid_argument(std::string("not a Baire-space set: ") + kind_name(s));
}

namespace {

Rational interval_gap(const Rational& y, const Interval& i) {
  if (y < i.lo) return i.lo - y;
  if (i.hi < y) return y - i.hi;
  return Rational(0);
}

[[noreturn]] void mismatch(const PointSpace& space, const ClosedSet& s) {
  throw std::invalid_argument(std::string("a ") + kind_name(s) + " set does not live in the " +
                              space.name() + " space");
}

}  // namespace

Rational dist_to_set(const PointSpace& space, const Point& y, const ClosedSet& s) {
  require_member(space, y, "point");
  if (is_empty(s)) return Rational(1);
  if (auto* f = std::get_if<FiniteRealSet>(&s)) {
    if (!space.is_real()) mismatch(space, s);
    const auto& r = std::get<Rational>(y);
    Rational best = abs(r - f->points.front());
    for (const auto& p : f->points) best = min(best, abs(r - p));
    return best;
  }
  if (std::holds_alternative<ClosedIntervalUnion>(s) || std::holds_alternative<OpenIntervalUnion>(s)) {
    if (!space.is_real()) mismatch(space, s);
    const auto& iv = std::holds_alternative<ClosedIntervalUnion>(s)
                         ? std::get<ClosedIntervalUnion>(s).intervals
                         : std::get<OpenIntervalUnion>(s).intervals;
    const auto& r = std::get<Rational>(y);
    Rational best = interval_gap(r, iv.front());
    for (const auto& i : iv) best = min(best, interval_gap(r, i));
    return best;
  }
  if (auto* f = std::get_if<FinitePointSet>(&s)) {
    if (space.kind() != SpaceKind::FinitePoints) mismatch(space, s);
    const auto& row = space.metric().table[std::get<FiniteLabel>(y).index];
    Rational best = row[f->indices.front()];
    for (auto i : f->indices) {
      if (i >= row.size()) throw std::invalid_argument("finite point set index out of range");
      best = min(best, row[i]);
    }
    return best;
  }
  if (space.kind() != SpaceKind::Baire) mismatch(space, s);
  const auto& a = std::get<BairePoint>(y);
  // d_N only takes values 1/(n+1), so the least one over a finite set is exact.
  std::optional<Rational> best;
  for (const auto& p : baire_members(s)) {
    Rational d = baire_dist(a, p);
    if (!best || d < *best) best = d;
  }
  return *best;
}

bool member(const PointSpace& space, const Point& y, const ClosedSet& s) {
  if (std::holds_alternative<OpenIntervalUnion>(s)) {
    const auto& r = std::get<Rational>(y);
    for (const auto& i : std::get<OpenIntervalUnion>(s).intervals) {
      if (i.lo < r && r < i.hi) return true;
    }
    return false;
  }
  if (is_empty(s)) return false;
  return dist_to_set(space, y, s).sign() == 0;
}

std::vector<Point> eps_net(const ClosedSet& s, const Rational& eps) {
  if (eps.sign() <= 0) throw std::invalid_argument("eps_net needs eps > 0");
  std::vector<Point> out;
  const Rational step = eps / Rational(2);
  if (auto* f = std::get_if<FiniteRealSet>(&s)) {
    for (const auto& p : f->points) out.emplace_back(p);
  } else if (auto* c = std::get_if<ClosedIntervalUnion>(&s)) {
    for (const auto& i : c->intervals) {
      for (Rational t = i.lo; t < i.hi; t += step) out.emplace_back(t);
      out.emplace_back(i.hi);
    }
  } else if (auto* o = std::get_if<OpenIntervalUnion>(&s)) {
    for (const auto& i : o->intervals) {
      if (i.hi - i.lo <= step) {
        out.emplace_back((i.lo + i.hi) / Rational(2));
        continue;
      }
      for (Rational t = i.lo + step; t < i.hi; t += step) out.emplace_back(t);
    }
  } else if (auto* p = std::get_if<FinitePointSet>(&s)) {
    for (auto i : p->indices) out.emplace_back(FiniteLabel{i});
  } else if (!is_empty(s)) {
    for (auto& b : baire_members(s)) out.emplace_back(std::move(b));
  }
  return out;
}

ClosedSet closure(const ClosedSet& s) {
  if (auto* o = std::get_if<OpenIntervalUnion>(&s)) return closed_intervals(o->intervals);
  return s;
}

bool meets_open_ball(const PointSpace& space, const ClosedSet& s, const Point& center,
                     const Rational& radius) {
  if (radius.sign() <= 0) throw std::invalid_argument("ball radius must be positive");
  if (is_empty(s)) return false;
  return dist_to_set(space, center, s) < radius;
}

ClosedSet intersect_interval(const ClosedSet& s, const Rational& lo, const Rational& hi) {
  if (is_empty(s)) return s;
  if (auto* f = std::get_if<FiniteRealSet>(&s)) {
    std::vector<Rational> kept;
    for (const auto& p : f->points) {
      if (lo <= p && p <= hi) kept.push_back(p);
    }
    return kept.empty() ? empty_set() : finite_real(std::move(kept));
  }
  const bool open = std::holds_alternative<OpenIntervalUnion>(s);
  if (!open && !std::holds_alternative<ClosedIntervalUnion>(s)) {
    throw std::invalid_argument(std::string("cannot clip a ") + kind_name(s) + " set to an interval");
  }
  const auto& iv = open ? std::get<OpenIntervalUnion>(s).intervals : std::get<ClosedIntervalUnion>(s).intervals;
  std::vector<Interval> kept;
  for (const auto& i : iv) {
    Rational l = max(i.lo, lo), h = min(i.hi, hi);
    bool nonempty = open ? (l < h || (l == h && i.lo < l && l < i.hi)) : (l <= h);
    if (nonempty) kept.push_back({l, h});
  }
  return kept.empty() ? empty_set() : closed_intervals(std::move(kept));
}

ClosedSet whole_space(const PointSpace& space) {
  if (space.kind() == SpaceKind::UnitInterval) return closed_intervals({{Rational(0), Rational(1)}});
  if (space.kind() == SpaceKind::FinitePoints) {
    std::vector<std::size_t> all(space.metric().size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    return finite_points(std::move(all));
  }
  throw std::invalid_argument("the " + space.name() +
                              " space has no finite whole-space representation");
}

}  // namespace baire
