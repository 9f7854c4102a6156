#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "baire/sequence.hpp"

namespace baire {

using Node = Seq;

bool is_prefix(const Node& u, const Node& v);
std::string node_str(const Node& u);  // "(1,2)" or "ε"
Node parse_node(std::string_view text);  // accepts "(1,2)", "()", "ε"

// A tree on omega: a finite prefix-closed node set plus finitely many
// eventually periodic infinite branches. Membership is "in finite_part or a
// prefix of some branch", so the body is exactly the branch set.
class Tree {
 public:
  Tree();  // {ε}
  Tree(std::set<Node> finite_part, std::vector<BairePoint> branches);

  // tree{ nodes: [(),(0)], branches: [";0"] }
  static Tree parse(std::string_view text);
  std::string str() const;

  bool contains(const Node& u) const;
  const std::set<Node>& finite_part() const { return nodes_; }
  const std::vector<BairePoint>& branches() const { return branches_; }
  std::size_t max_finite_length() const;

  friend bool operator==(const Tree&, const Tree&) = default;
  friend auto operator<=>(const Tree&, const Tree&) = default;

 private:
  std::set<Node> nodes_;
  std::vector<BairePoint> branches_;
};

Tree generated_by(const std::vector<Node>& s);
Tree tree_shift(const Tree& t);
std::set<Node> terminals(const Tree& t);
bool is_ill_founded(const Tree& t);
std::set<Node> body_prefixes(const Tree& t, std::size_t depth);

// Fixed enumeration of omega*: by weight len(u) + sum(u), then length, then
// lexicographically. Exactly 2^k nodes have weight <= k.
Nat node_weight(const Node& u);
bool node_key_less(const Node& u, const Node& v);
BigNat node_index(const Node& u);
std::vector<Node> nodes_of_weight(Nat w);

// Tree metric: d_N on characteristic functions flattened by node_index.
std::optional<Node> tree_first_difference(const Tree& a, const Tree& b);
Rational tree_dist(const Tree& a, const Tree& b);

// Number of enumeration slots a ball of this radius pins down: trees within
// distance < radius agree on every node of index < floor(1/radius).
BigNat pinned_slots(const Rational& radius);
// The nodes of t whose index is below n; always a tree.
Tree truncate_below(const Tree& t, const BigNat& n);
// Least natural exceeding every entry of the nodes of index below n.
Nat fresh_entry(const BigNat& n);

}  // namespace baire
