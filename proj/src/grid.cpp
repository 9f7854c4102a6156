#include "baire/grid.hpp"

#include <algorithm>

namespace baire {

namespace {

std::vector<Bit> parse_bits(std::string_view s) {
  std::vector<Bit> out;
  for (char c : s) {
    if (c == '0' || c == '1') {
      out.push_back(static_cast<Bit>(c - '0'));
    } else if (c != ',' && c != ' ') {
      throw std::invalid_argument("row bits must be 0/1: " + std::string(s));
    }
  }
  return out;
}

}  // namespace

RowSpec make_row(std::string_view prefix_bits, std::string_view period_bits) {
  return RowSpec(parse_bits(prefix_bits), parse_bits(period_bits));
}

std::string bits_string(const std::vector<Bit>& bits) {
  std::string out;
  for (Bit b : bits) out += static_cast<char>('0' + b);
  return out;
}

CantorGridPoint::CantorGridPoint(std::map<Nat, RowSpec> rows, RowSpec default_row)
    : default_row_(std::move(default_row)) {
  auto check = [](const RowSpec& r) {
    for (Bit b : r.prefix()) if (b > 1) throw std::invalid_argument("grid entries must be 0/1");
    for (Bit b : r.period()) if (b > 1) throw std::invalid_argument("grid entries must be 0/1");
  };
  check(default_row_);
  for (auto& [m, r] : rows) {
    check(r);
    if (!(r == default_row_)) rows_.emplace(m, std::move(r));
  }
}

const RowSpec& CantorGridPoint::row(Nat m) const {
  auto it = rows_.find(m);
  return it == rows_.end() ? default_row_ : it->second;
}

bool CantorGridPoint::row_has_infinitely_many_ones(Nat m) const {
  const auto& p = row(m).period();
  return std::find(p.begin(), p.end(), Bit{1}) != p.end();
}

Nat pair_index(Nat m, Nat s) {
  Nat d = m + s;
  return d * (d + 1) / 2 + s;
}

std::pair<Nat, Nat> unpair_index(Nat i) {
  Nat d = 0;
  while ((d + 1) * (d + 2) / 2 <= i) ++d;
  Nat s = i - d * (d + 1) / 2;
  return {d - s, s};
}

std::optional<Nat> grid_first_difference(const CantorGridPoint& a, const CantorGridPoint& b) {
  std::optional<Nat> best;
  auto consider = [&](Nat m) {
    if (auto s = first_difference(a.row(m), b.row(m))) {
      Nat idx = pair_index(m, *s);
      if (!best || idx < *best) best = idx;
    }
  };
  for (const auto& [m, r] : a.explicit_rows()) consider(m);
  for (const auto& [m, r] : b.explicit_rows()) consider(m);
  // Rows that are default in both: only the first such row can be minimal.
  Nat m = 0;
  while (a.explicit_rows().count(m) || b.explicit_rows().count(m)) ++m;
  consider(m);
  return best;
}

Rational grid_dist(const CantorGridPoint& a, const CantorGridPoint& b) {
  auto d = grid_first_difference(a, b);
  return d ? inv_succ(*d) : Rational(0);
}

CantorGridPoint parse_grid(std::string_view text) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
    while (!v.empty() && v.back() == ' ') v.remove_suffix(1);
    return v;
  };
  text = trim(text);
  if (text == "all_zero") return CantorGridPoint::all_zero();
  if (text == "all_ones") return CantorGridPoint::all_ones();
  if (text.substr(0, 5) != "grid{" || text.back() != '}') {
    throw std::invalid_argument("grid literal must be all_zero, all_ones or grid{...}: " + std::string(text));
  }
  std::string_view body = text.substr(5, text.size() - 6);
  std::map<Nat, RowSpec> rows;
  RowSpec def = RowSpec::constant(0);
  while (!trim(body).empty()) {
    auto comma = body.find(',');
    std::string_view entry = trim(body.substr(0, comma));
    body = comma == std::string_view::npos ? std::string_view{} : body.substr(comma + 1);
    auto colon = entry.find(':');
    auto semi = entry.find(';');
    if (colon == std::string_view::npos || semi == std::string_view::npos || semi < colon) {
      throw std::invalid_argument("grid row must look like m:prefix;period, got " + std::string(entry));
    }
    RowSpec row = make_row(entry.substr(colon + 1, semi - colon - 1), entry.substr(semi + 1));
    std::string_view key = trim(entry.substr(0, colon));
    if (key == "*") {
      def = row;
    } else {
      auto m = parse_nat_list(key);
      if (m.size() != 1) throw std::invalid_argument("bad grid row index: " + std::string(key));
      if (!rows.emplace(m[0], row).second) throw std::invalid_argument("grid row given twice: " + std::string(key));
    }
  }
  return CantorGridPoint(std::move(rows), std::move(def));
}

std::string grid_str(const CantorGridPoint& g) {
  std::string out = "grid{";
  for (const auto& [m, r] : g.explicit_rows()) {
    out += std::to_string(m) + ":" + bits_string(r.prefix()) + ";" + bits_string(r.period()) + ",";
  }
  return out + "*:" + bits_string(g.default_row().prefix()) + ";" + bits_string(g.default_row().period()) + "}";
}

}  // namespace baire
