#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "baire/sequence.hpp"

namespace baire {

using Bit = std::uint8_t;
using RowSpec = Eventual<Bit>;

RowSpec make_row(std::string_view prefix_bits, std::string_view period_bits);
std::string bits_string(const std::vector<Bit>& bits);

// A point of 2^(omega x omega): finitely many explicit rows, the rest equal
// to default_row.
class CantorGridPoint {
 public:
  CantorGridPoint() : default_row_(RowSpec::constant(0)) {}
  CantorGridPoint(std::map<Nat, RowSpec> rows, RowSpec default_row);

  static CantorGridPoint all_zero() { return {}; }
  static CantorGridPoint all_ones() { return CantorGridPoint({}, RowSpec::constant(1)); }

  Bit entry(Nat m, Nat s) const { return row(m).entry(s); }
  const RowSpec& row(Nat m) const;
  const std::map<Nat, RowSpec>& explicit_rows() const { return rows_; }
  const RowSpec& default_row() const { return default_row_; }

  bool row_has_infinitely_many_ones(Nat m) const;

  friend bool operator==(const CantorGridPoint&, const CantorGridPoint&) = default;
  friend auto operator<=>(const CantorGridPoint&, const CantorGridPoint&) = default;

 private:
  std::map<Nat, RowSpec> rows_;
  RowSpec default_row_;
};

// "all_zero", "all_ones", or grid{0:101;0, 3:;01, *:;0} where each row is
// prefix;period bits and * gives the default row (zeros when omitted).
CantorGridPoint parse_grid(std::string_view text);
std::string grid_str(const CantorGridPoint& g);

// Cantor diagonal enumeration of omega x omega: (m,s) -> (m+s)(m+s+1)/2 + s.
Nat pair_index(Nat m, Nat s);
std::pair<Nat, Nat> unpair_index(Nat i);

// Least flattened index where the grids differ.
std::optional<Nat> grid_first_difference(const CantorGridPoint& a, const CantorGridPoint& b);
Rational grid_dist(const CantorGridPoint& a, const CantorGridPoint& b);

}  // namespace baire
