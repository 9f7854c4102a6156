#pragma once

#include <variant>
#include <vector>

#include "baire/space.hpp"

namespace baire {

struct Interval {
  Rational lo, hi;
  friend bool operator==(const Interval&, const Interval&) = default;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

struct FiniteRealSet {
  std::vector<Rational> points;  // sorted, distinct
  friend bool operator==(const FiniteRealSet&, const FiniteRealSet&) = default;
};
struct ClosedIntervalUnion {
  std::vector<Interval> intervals;  // lo <= hi
  friend bool operator==(const ClosedIntervalUnion&, const ClosedIntervalUnion&) = default;
};
struct OpenIntervalUnion {
  std::vector<Interval> intervals;  // lo < hi
  friend bool operator==(const OpenIntervalUnion&, const OpenIntervalUnion&) = default;
};
struct FiniteBaireSet {
  std::vector<BairePoint> points;
  friend bool operator==(const FiniteBaireSet&, const FiniteBaireSet&) = default;
};
// Denotes the shifted body together with the zero-padded shifted terminals.
struct TreeBody {
  Tree tree;
  friend bool operator==(const TreeBody&, const TreeBody&) = default;
};
// A subset of a FinitePoints codomain, by label index.
struct FinitePointSet {
  std::vector<std::size_t> indices;
  friend bool operator==(const FinitePointSet&, const FinitePointSet&) = default;
};
struct EmptySet {
  friend bool operator==(const EmptySet&, const EmptySet&) = default;
};

using ClosedSet = std::variant<FiniteRealSet, ClosedIntervalUnion, OpenIntervalUnion, FiniteBaireSet,
                               TreeBody, FinitePointSet, EmptySet>;

// Normalizing constructors; the non-Empty ones reject empty input.
ClosedSet finite_real(std::vector<Rational> pts);
ClosedSet closed_intervals(std::vector<Interval> iv);
ClosedSet open_intervals(std::vector<Interval> iv);
ClosedSet finite_baire(std::vector<BairePoint> pts);
ClosedSet tree_body(Tree t);
ClosedSet finite_points(std::vector<std::size_t> idx);
ClosedSet empty_set();

bool is_empty(const ClosedSet& s);
const char* kind_name(const ClosedSet& s);

// Exact infimum distance; 1 for the empty set. Throws on a space mismatch.
Rational dist_to_set(const PointSpace& space, const Point& y, const ClosedSet& s);
bool member(const PointSpace& space, const Point& y, const ClosedSet& s);

// Finite list inside the denotation; every member lies within eps of it.
std::vector<Point> eps_net(const ClosedSet& s, const Rational& eps);

// For finite variants, the whole denotation.
std::vector<BairePoint> baire_members(const ClosedSet& s);

ClosedSet closure(const ClosedSet& s);
bool meets_open_ball(const PointSpace& space, const ClosedSet& s, const Point& center,
                     const Rational& radius);

// Closure of s intersected with [lo, hi]; Empty if the intersection is empty.
// Only distances to the result are meaningful for open input.
ClosedSet intersect_interval(const ClosedSet& s, const Rational& lo, const Rational& hi);

// The whole codomain as a set, where representable.
ClosedSet whole_space(const PointSpace& space);

}  // namespace baire
