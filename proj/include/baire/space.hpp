#pragma once

#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "baire/grid.hpp"
#include "baire/rational.hpp"
#include "baire/sequence.hpp"
#include "baire/tree.hpp"

namespace baire {

struct FiniteLabel {
  std::size_t index = 0;
  friend bool operator==(const FiniteLabel&, const FiniteLabel&) = default;
  friend auto operator<=>(const FiniteLabel&, const FiniteLabel&) = default;
};

using Point = std::variant<Rational, BairePoint, CantorGridPoint, FiniteLabel, Tree>;

// Labeled points with an exact metric table, validated on construction.
struct FiniteMetric {
  std::vector<std::string> labels;
  std::vector<std::vector<Rational>> table;

  FiniteMetric(std::vector<std::string> labels, std::vector<std::vector<Rational>> table);
  std::size_t size() const { return labels.size(); }
  std::size_t index_of(const std::string& label) const;
};

enum class SpaceKind { RealLine, UnitInterval, Baire, CantorGrid, FinitePoints, Trees };

class PointSpace {
 public:
  static PointSpace real_line() { return PointSpace(SpaceKind::RealLine); }
  static PointSpace unit_interval() { return PointSpace(SpaceKind::UnitInterval); }
  static PointSpace baire() { return PointSpace(SpaceKind::Baire); }
  static PointSpace cantor_grid() { return PointSpace(SpaceKind::CantorGrid); }
  static PointSpace trees() { return PointSpace(SpaceKind::Trees); }
  static PointSpace finite(FiniteMetric m);

  SpaceKind kind() const { return kind_; }
  const FiniteMetric& metric() const;
  bool is_real() const { return kind_ == SpaceKind::RealLine || kind_ == SpaceKind::UnitInterval; }
  bool contains(const Point& p) const;
  std::string name() const;

  friend bool operator==(const PointSpace& a, const PointSpace& b);

 private:
  explicit PointSpace(SpaceKind k) : kind_(k) {}
  SpaceKind kind_;
  std::shared_ptr<const FiniteMetric> finite_;
};

// Throws std::invalid_argument when a point does not belong to the space.
Rational dist(const PointSpace& space, const Point& a, const Point& b);
void require_member(const PointSpace& space, const Point& p, const char* what);
std::string point_str(const Point& p);

// A countable dense sequence together with its index bound: for every point x
// and k there is s <= bound(x, k) with dist(at(s), x) < 1/(k+1).
struct DenseSequence {
  std::string name;
  std::function<Point(Nat s)> at;
  std::function<BigNat(const Point& x, Nat k)> bound;
};

DenseSequence dense_sequence(const PointSpace& space);
DenseSequence alternative_dense_sequence(const PointSpace& space);
Point dense_point(const PointSpace& space, Nat s);

// Stern-Brocot breadth-first order on the positive rationals, j >= 1.
Rational stern_brocot_at(const BigNat& j);
BigNat stern_brocot_index(const Rational& q);
// Calkin-Wilf breadth-first order, j >= 1.
Rational calkin_wilf_at(const BigNat& j);
BigNat calkin_wilf_index(const Rational& q);

// Eventually-zero sequences, by the node order of their nonzero prefix.
BairePoint eventually_zero_at(Nat s);

}  // namespace baire
