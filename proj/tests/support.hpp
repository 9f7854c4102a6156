// Corpora and independent oracles shared by the unit tests and the acceptance binary.
#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "baire/io.hpp"

namespace baire::testing {

using Rng = std::mt19937_64;

inline Rational R(long n, long d = 1) { return Rational(n, d); }

// Random ultrametric on n points: clusters merge at nondecreasing levels.
inline FiniteMetric random_ultrametric(Rng& rng, std::size_t n, const std::vector<Rational>& levels,
                                       const std::string& prefix = "p") {
  std::vector<std::vector<Rational>> d(n, std::vector<Rational>(n, Rational(0)));
  std::vector<std::vector<std::size_t>> clusters;
  for (std::size_t i = 0; i < n; ++i) clusters.push_back({i});
  std::size_t level = 0;
  while (clusters.size() > 1) {
    std::uniform_int_distribution<std::size_t> pick(0, clusters.size() - 1);
    std::size_t a = pick(rng), b = pick(rng);
    while (b == a) b = pick(rng);
    level = std::uniform_int_distribution<std::size_t>(level, levels.size() - 1)(rng);
    for (auto i : clusters[a]) {
      for (auto j : clusters[b]) d[i][j] = d[j][i] = levels[level];
    }
    clusters[a].insert(clusters[a].end(), clusters[b].begin(), clusters[b].end());
    clusters.erase(clusters.begin() + static_cast<std::ptrdiff_t>(b));
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return FiniteMetric(std::move(labels), std::move(d));
}

// Levels below the smallest default delta tie points together at every schedule radius.
inline std::vector<Rational> domain_levels() { return {R(1, 512), R(1, 64), R(1, 8), R(1, 2), R(1)}; }

struct TabularCase {
  PointSpace domain;
  PointSpace codomain;
  std::vector<ClosedSet> values;
  MultiMap map() const { return tabular(domain, codomain, values); }
  std::vector<Point> points() const {
    std::vector<Point> out;
    for (std::size_t i = 0; i < domain.metric().size(); ++i) out.emplace_back(FiniteLabel{i});
    return out;
  }
};

// Finite-valued random tabular map: finite codomain or finite real sets on multiples of 1/8.
inline TabularCase random_tabular(Rng& rng, std::size_t max_points = 5, bool allow_empty = true) {
  const std::size_t n = std::uniform_int_distribution<std::size_t>(1, max_points)(rng);
  PointSpace dom = PointSpace::finite(random_ultrametric(rng, n, domain_levels()));
  const bool finite_cod = rng() % 2 == 0;
  PointSpace cod = finite_cod ? PointSpace::finite(random_ultrametric(rng, 4, {R(1, 8), R(1, 2), R(1)}, "c"))
                              : PointSpace::real_line();
  std::vector<ClosedSet> values;
  for (std::size_t i = 0; i < n; ++i) {
    if (allow_empty && rng() % 10 == 0) {
      values.push_back(empty_set());
      continue;
    }
    const std::size_t k = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    if (finite_cod) {
      std::vector<std::size_t> idx;
      for (std::size_t j = 0; j < k; ++j) idx.push_back(rng() % 4);
      values.push_back(finite_points(idx));
    } else {
      std::vector<Rational> pts;
      for (std::size_t j = 0; j < k; ++j) pts.push_back(R(static_cast<long>(rng() % 17), 8));
      values.push_back(finite_real(pts));
    }
  }
  return {dom, cod, values};
}

// The finite value set as codomain points.
inline std::vector<Point> oracle_members(const ClosedSet& s) {
  std::vector<Point> out;
  if (auto* f = std::get_if<FiniteRealSet>(&s)) {
    for (const auto& q : f->points) out.emplace_back(q);
  } else if (auto* p = std::get_if<FinitePointSet>(&s)) {
    for (auto i : p->indices) out.emplace_back(FiniteLabel{i});
  } else if (!std::holds_alternative<EmptySet>(s)) {
    throw std::invalid_argument("oracle handles finite values only");
  }
  return out;
}

// d(y, S) by enumeration, with d(y, empty) = 1.
inline Rational oracle_dist(const PointSpace& cod, const Point& y, const ClosedSet& s) {
  auto members = oracle_members(s);
  if (members.empty()) return Rational(1);
  Rational best;
  bool first = true;
  for (const auto& z : members) {
    Rational d;
    if (cod.kind() == SpaceKind::FinitePoints) {
      d = cod.metric().table[std::get<FiniteLabel>(y).index][std::get<FiniteLabel>(z).index];
    } else {
      d = abs(std::get<Rational>(y) - std::get<Rational>(z));
    }
    if (first || d < best) best = d;
    first = false;
  }
  return best;
}

// Definition quantifiers over all y, all eps and delta in the schedules, and all x'.
inline bool oracle_y_continuous(const TabularCase& t, std::size_t x, const Point& y, const CheckConfig& cfg) {
  const auto& dm = t.domain.metric();
  for (const auto& eps : cfg.eps_schedule) {
    bool some_delta = false;
    for (const auto& delta : cfg.delta_schedule) {
      bool all = true;
      for (std::size_t xp = 0; xp < dm.size() && all; ++xp) {
        if (dm.table[x][xp] < delta && !(oracle_dist(t.codomain, y, t.values[xp]) < eps)) all = false;
      }
      if (all) {
        some_delta = true;
        break;
      }
    }
    if (!some_delta) return false;
  }
  return true;
}

inline bool oracle_plain(const TabularCase& t, std::size_t x, const CheckConfig& cfg) {
  for (const auto& y : oracle_members(t.values[x])) {
    if (oracle_y_continuous(t, x, y, cfg)) return true;
  }
  return false;
}

inline bool oracle_strong(const TabularCase& t, std::size_t x, const CheckConfig& cfg) {
  for (const auto& y : oracle_members(t.values[x])) {
    if (!oracle_y_continuous(t, x, y, cfg)) return false;
  }
  return true;
}

inline VerdictKind kind_of(const Witness& w) {
  return std::holds_alternative<DiscontinuityWitness>(w) ? VerdictKind::Discontinuous : VerdictKind::Continuous;
}

// ---- grid corpus ----

inline CantorGridPoint grid_with_rows(std::map<Nat, RowSpec> rows, Bit default_bit = 0) {
  return CantorGridPoint(std::move(rows), RowSpec::constant(default_bit));
}

inline RowSpec single_one(Nat p) {
  std::vector<Bit> bits(p + 1, 0);
  bits[p] = 1;
  return RowSpec(bits, {0});
}

// At least 50 points: extremes, single-1 rows, periodic rows, mixtures, rows past the window.
inline std::vector<CantorGridPoint> f1_corpus() {
  std::vector<CantorGridPoint> out{CantorGridPoint::all_zero(), CantorGridPoint::all_ones()};
  for (Nat m = 0; m <= 8; ++m) {
    for (Nat p : {0, 2, 5}) out.push_back(grid_with_rows({{m, single_one(p)}}));
  }
  for (Nat m = 0; m <= 8; ++m) out.push_back(grid_with_rows({{m, RowSpec({}, {0, 1})}}));
  for (Nat m : {0, 4, 8}) out.push_back(grid_with_rows({{m, RowSpec({1}, {0, 0, 1})}}));
  out.push_back(grid_with_rows({{0, single_one(0)}}, 1));
  out.push_back(grid_with_rows({{3, RowSpec::constant(0)}}, 1));
  out.push_back(grid_with_rows({{9, RowSpec::constant(1)}}));
  out.push_back(grid_with_rows({{12, RowSpec({}, {1, 0})}, {2, single_one(3)}}));
  out.push_back(grid_with_rows({{1, single_one(1)}, {2, single_one(4)}, {6, RowSpec({0, 0, 0}, {1})}}));
  out.push_back(grid_with_rows({{0, RowSpec({1, 1, 0}, {0})}, {5, RowSpec({0, 1}, {0})}}));
  out.push_back(grid_with_rows({{7, RowSpec({0, 0, 0, 0}, {0, 0, 0, 1})}}));
  out.push_back(grid_with_rows({{8, RowSpec({}, {1, 1, 0})}}, 1));
  out.push_back(grid_with_rows({{2, single_one(6)}, {4, single_one(0)}}));
  out.push_back(grid_with_rows({{0, RowSpec({1, 0, 1}, {0})}, {1, RowSpec({0, 1, 1}, {0})}, {2, RowSpec({1}, {0})}}));
  out.push_back(grid_with_rows({{5, RowSpec({1, 1, 1, 1}, {0})}, {10, RowSpec::constant(1)}}));
  return out;
}

inline bool f1_in_r(const CantorGridPoint& g, Nat M = 8) {
  for (Nat m = 0; m <= M; ++m) {
    if (r_membership(g, m)) return true;
  }
  return false;
}

// ---- tree corpus ----

// All prefix-closed subsets of {0,1,2}^{<=3} containing the root, indexed by
// three child states in [0, 730): 0 = absent, k = 1 + index of a depth-2 subtree.
class TernaryTrees {
 public:
  TernaryTrees() {
    // depth-1 subtrees below a node: subsets of {0,1,2}
    std::vector<std::vector<Node>> d1;
    for (unsigned mask = 0; mask < 8; ++mask) {
      std::vector<Node> nodes{{}};
      for (Nat c = 0; c < 3; ++c) {
        if (mask >> c & 1) nodes.push_back({c});
      }
      d1.push_back(nodes);
    }
    for (unsigned a = 0; a < 9; ++a) {
      for (unsigned b = 0; b < 9; ++b) {
        for (unsigned c = 0; c < 9; ++c) {
          std::vector<Node> nodes{{}};
          const unsigned st[3] = {a, b, c};
          for (Nat k = 0; k < 3; ++k) {
            if (st[k] == 0) continue;
            for (const auto& u : d1[st[k] - 1]) {
              Node v{k};
              v.insert(v.end(), u.begin(), u.end());
              nodes.push_back(v);
            }
          }
          sub_.push_back(nodes);
        }
      }
    }
  }

  static constexpr std::uint64_t kStates = 730;
  static constexpr std::uint64_t size() { return kStates * kStates * kStates; }

  Tree at(std::uint64_t i) const {
    std::set<Node> nodes{{}};
    for (Nat k = 0; k < 3; ++k) {
      const std::uint64_t st = i % kStates;
      i /= kStates;
      if (st == 0) continue;
      for (const auto& u : sub_[st - 1]) {
        Node v{k};
        v.insert(v.end(), u.begin(), u.end());
        nodes.insert(v);
      }
    }
    return Tree(nodes, {});
  }

 private:
  std::vector<std::vector<Node>> sub_;  // 729 subtrees of depth <= 2, rooted at ()
};

inline std::vector<Tree> branch_trees() {
  std::vector<std::string> lits = {
      R"(tree{nodes:[()],branches:[";0"]})",
      R"(tree{nodes:[()],branches:[";1"]})",
      R"(tree{nodes:[(),(1)],branches:[";0"]})",
      R"(tree{nodes:[(),(2),(2,0)],branches:["1;0"]})",
      R"(tree{nodes:[()],branches:[";0,1"]})",
      R"(tree{nodes:[(),(0),(0,2)],branches:["0;1"]})",
      R"(tree{nodes:[()],branches:["2;0","0;1"]})",
      R"(tree{nodes:[(),(1),(1,1)],branches:["1,0;0"]})",
      R"(tree{nodes:[()],branches:[";1,0"]})",
      R"(tree{nodes:[(),(0),(1),(2)],branches:["2,2;0"]})",
  };
  std::vector<Tree> out;
  for (const auto& l : lits) out.push_back(Tree::parse(l));
  return out;
}

}  // namespace baire::testing
