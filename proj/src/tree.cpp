#include "baire/tree.hpp"

#include <algorithm>
#include <cctype>

namespace baire {

bool is_prefix(const Node& u, const Node& v) {
  return u.size() <= v.size() && std::equal(u.begin(), u.end(), v.begin());
}

std::string node_str(const Node& u) {
  if (u.empty()) return "ε";
  return "(" + join_nats(u) + ")";
}

Node parse_node(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text == "ε" || text == "e") return {};
  if (text.size() < 2 || text.front() != '(' || text.back() != ')') {
    throw std::invalid_argument("bad node: " + std::string(text));
  }
  return parse_nat_list(text.substr(1, text.size() - 2));
}

namespace {

bool is_branch_prefix(const Node& u, const std::vector<BairePoint>& branches) {
  for (const auto& b : branches) {
    if (basic_nbhd_contains(u, b)) return true;
  }
  return false;
}

}  // namespace

Tree::Tree() : nodes_{Node{}} {}

Tree::Tree(std::set<Node> finite_part, std::vector<BairePoint> branches) {
  if (!finite_part.count(Node{})) throw std::invalid_argument("tree must contain the empty node");
  for (const auto& u : finite_part) {
    if (!u.empty() && !finite_part.count(Node(u.begin(), u.end() - 1))) {
      throw std::invalid_argument("node set not closed under initial segments at " + node_str(u));
    }
  }
  std::sort(branches.begin(), branches.end());
  branches.erase(std::unique(branches.begin(), branches.end()), branches.end());
  branches_ = std::move(branches);
  // Canonical finite part: prefix closure of the nodes lying off every branch.
  nodes_.insert(Node{});
  for (const auto& u : finite_part) {
    if (is_branch_prefix(u, branches_)) continue;
    for (std::size_t l = 0; l <= u.size(); ++l) nodes_.insert(Node(u.begin(), u.begin() + l));
  }
}

bool Tree::contains(const Node& u) const {
  return nodes_.count(u) || is_branch_prefix(u, branches_);
}

std::size_t Tree::max_finite_length() const {
  std::size_t m = 0;
  for (const auto& u : nodes_) m = std::max(m, u.size());
  return m;
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t pos = 0;

  void ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) {
      throw std::invalid_argument("tree literal: expected '" + std::string(1, c) + "' at offset " +
                                  std::to_string(pos));
    }
  }
  bool eat_word(std::string_view w) {
    ws();
    if (s.substr(pos, w.size()) == w) {
      pos += w.size();
      return true;
    }
    return false;
  }
};

}  // namespace

Tree Tree::parse(std::string_view text) {
  Cursor c{text};
  if (!c.eat_word("tree")) throw std::invalid_argument("tree literal must start with 'tree{'");
  c.expect('{');
  std::set<Node> nodes;
  std::vector<BairePoint> branches;
  bool first = true;
  while (!c.eat('}')) {
    if (!first) c.expect(',');
    first = false;
    if (c.eat_word("nodes")) {
      c.expect(':');
      c.expect('[');
      bool first_node = true;
      while (!c.eat(']')) {
        if (!first_node) c.expect(',');
        first_node = false;
        c.ws();
        if (c.eat_word("ε")) {
          nodes.insert(Node{});
          continue;
        }
        c.expect('(');
        auto close = c.s.find(')', c.pos);
        if (close == std::string_view::npos) throw std::invalid_argument("tree literal: unclosed node");
        nodes.insert(parse_nat_list(c.s.substr(c.pos, close - c.pos)));
        c.pos = close + 1;
      }
    } else if (c.eat_word("branches")) {
      c.expect(':');
      c.expect('[');
      bool first_branch = true;
      while (!c.eat(']')) {
        if (!first_branch) c.expect(',');
        first_branch = false;
        c.expect('"');
        auto close = c.s.find('"', c.pos);
        if (close == std::string_view::npos) throw std::invalid_argument("tree literal: unclosed branch");
        branches.push_back(parse_baire(c.s.substr(c.pos, close - c.pos)));
        c.pos = close + 1;
      }
    } else {
      throw std::invalid_argument("tree literal: unknown field at offset " + std::to_string(c.pos));
    }
  }
  c.ws();
  if (c.pos != text.size()) throw std::invalid_argument("tree literal: trailing input");
  nodes.insert(Node{});
  return Tree(std::move(nodes), std::move(branches));
}

std::string Tree::str() const {
  std::string out = "tree{nodes:[";
  bool first = true;
  for (const auto& u : nodes_) {
    if (!first) out += ',';
    first = false;
    out += "(" + join_nats(u) + ")";
  }
  out += "]";
  if (!branches_.empty()) {
    out += ",branches:[";
    for (std::size_t i = 0; i < branches_.size(); ++i) {
      if (i) out += ',';
      out += "\"" + to_string(branches_[i]) + "\"";
    }
    out += "]";
  }
  return out + "}";
}

Tree generated_by(const std::vector<Node>& s) {
  if (s.empty()) throw std::invalid_argument("generated_by: the generating set must be nonempty");
  std::set<Node> nodes;
  for (const auto& w : s) {
    for (std::size_t l = 0; l <= w.size(); ++l) nodes.insert(Node(w.begin(), w.begin() + l));
  }
  return Tree(std::move(nodes), {});
}

Tree tree_shift(const Tree& t) {
  std::set<Node> nodes;
  for (Node u : t.finite_part()) {
    for (auto& v : u) ++v;
    nodes.insert(std::move(u));
  }
  std::vector<BairePoint> branches;
  for (const auto& b : t.branches()) branches.push_back(shift_up(b));
  return Tree(std::move(nodes), std::move(branches));
}

std::set<Node> terminals(const Tree& t) {
  std::set<Node> out;
  const auto& nodes = t.finite_part();
  for (auto it = nodes.begin(); it != nodes.end(); ++it) {
    // Extensions of u sort directly after u.
    auto next = std::next(it);
    if (next != nodes.end() && is_prefix(*it, *next)) continue;
    if (is_branch_prefix(*it, t.branches())) continue;
    out.insert(*it);
  }
  return out;
}

bool is_ill_founded(const Tree& t) { return !t.branches().empty(); }

std::set<Node> body_prefixes(const Tree& t, std::size_t depth) {
  std::set<Node> out;
  for (const auto& b : t.branches()) out.insert(b.take(depth));
  return out;
}

Nat node_weight(const Node& u) {
  Nat w = u.size();
  for (Nat v : u) w += v;
  return w;
}

bool node_key_less(const Node& u, const Node& v) {
  Nat wu = node_weight(u), wv = node_weight(v);
  if (wu != wv) return wu < wv;
  if (u.size() != v.size()) return u.size() < v.size();
  return u < v;
}

namespace {

BigNat binom(Nat n, Nat k) {
  BigNat r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

BigNat node_index(const Node& u) {
  const Nat w = node_weight(u);
  if (w == 0) return 0;
  BigNat idx;
  mpz_ui_pow_ui(idx.get_mpz_t(), 2, w - 1);  // nodes of weight < w
  for (Nat l = 1; l < u.size(); ++l) idx += binom(w - 1, l - 1);
  // Rank among length-L compositions of w into parts u(i)+1.
  Nat rem = w;
  const Nat len = u.size();
  for (Nat i = 0; i < len; ++i) {
    const Nat k = len - i - 1;  // parts still to place after position i
    if (k > 0 && u[i] > 0) {
      // sum over v < u[i] of C(rem - v - 2, k - 1) by the hockey-stick identity
      idx += binom(rem - 1, k) - binom(rem - u[i] - 1, k);
    }
    rem -= u[i] + 1;
  }
  return idx;
}

std::vector<Node> nodes_of_weight(Nat w) {
  std::vector<Node> out;
  if (w == 0) {
    out.push_back({});
    return out;
  }
  Node cur;
  // parts are entries + 1; enumerate compositions of w by length, then lex
  auto rec = [&](auto&& self, Nat rem, Nat parts_left) -> void {
    if (parts_left == 0) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    if (rem < parts_left) return;
    Nat max_part = rem - (parts_left - 1);
    for (Nat p = 1; p <= max_part; ++p) {
      cur.push_back(p - 1);
      self(self, rem - p, parts_left - 1);
      cur.pop_back();
    }
  };
  for (Nat len = 1; len <= w; ++len) rec(rec, w, len);
  return out;
}

std::optional<Node> tree_first_difference(const Tree& a, const Tree& b) {
  std::optional<Node> best;
  auto consider = [&](const Node& u) {
    if (!best || node_key_less(u, *best)) best = u;
  };
  for (const auto* t : {&a, &b}) {
    const Tree& other = (t == &a) ? b : a;
    for (const auto& u : t->finite_part()) {
      if (!other.contains(u)) consider(u);
    }
    for (const auto& br : t->branches()) {
      if (std::find(other.branches().begin(), other.branches().end(), br) != other.branches().end()) {
        continue;
      }
      std::size_t bound = other.max_finite_length() + 1;
      for (const auto& ob : other.branches()) bound = std::max(bound, *first_difference(br, ob) + 1);
      for (std::size_t l = 0; l <= bound; ++l) {
        Node p = br.take(l);
        if (!other.contains(p)) {
          consider(p);
          break;
        }
      }
    }
  }
  return best;
}

Rational tree_dist(const Tree& a, const Tree& b) {
  auto d = tree_first_difference(a, b);
  return d ? inv_succ(node_index(*d)) : Rational(0);
}

BigNat pinned_slots(const Rational& radius) {
  if (radius.sign() <= 0) throw std::invalid_argument("radius must be positive");
  return (Rational(1) / radius).floor();
}

Tree truncate_below(const Tree& t, const BigNat& n) {
  std::set<Node> nodes{Node{}};
  for (const auto& u : t.finite_part()) {
    if (node_index(u) < n) nodes.insert(u);
  }
  for (const auto& br : t.branches()) {
    for (std::size_t l = 1;; ++l) {
      Node p = br.take(l);
      if (!(node_index(p) < n)) break;
      nodes.insert(std::move(p));
    }
  }
  return Tree(std::move(nodes), {});
}

Nat fresh_entry(const BigNat& n) {
  if (n <= 1) return 0;
  // the node (e) is the first node of weight e+1, at index 2^e
  BigNat m = n - 1;
  return static_cast<Nat>(mpz_sizeinbase(m.get_mpz_t(), 2));
}

}  // namespace baire
