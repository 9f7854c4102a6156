#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "baire/rational.hpp"

namespace baire {

using Nat = std::uint64_t;
using Seq = std::vector<Nat>;

// An eventually periodic omega-sequence: prefix followed by period repeated
// forever. Kept canonical (shortest period, then shortest prefix) so that
// equal sequences have equal representations.
template <class T>
class Eventual {
 public:
  Eventual() : period_{T{0}} {}
  Eventual(std::vector<T> prefix, std::vector<T> period)
      : prefix_(std::move(prefix)), period_(std::move(period)) {
    if (period_.empty()) throw std::invalid_argument("period must be nonempty");
    canonicalize();
  }

  static Eventual constant(T v) { return Eventual({}, {v}); }

  T entry(std::size_t n) const {
    if (n < prefix_.size()) return prefix_[n];
    return period_[(n - prefix_.size()) % period_.size()];
  }

  std::vector<T> take(std::size_t n) const {
    std::vector<T> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = entry(i);
    return out;
  }

  const std::vector<T>& prefix() const { return prefix_; }
  const std::vector<T>& period() const { return period_; }

  // Past this index the sequence is purely periodic.
  std::size_t stem() const { return prefix_.size(); }

  friend bool operator==(const Eventual&, const Eventual&) = default;
  friend auto operator<=>(const Eventual&, const Eventual&) = default;

 private:
  void canonicalize() {
    const std::size_t n = period_.size();
    for (std::size_t d = 1; d < n; ++d) {
      if (n % d != 0) continue;
      bool ok = true;
      for (std::size_t i = d; i < n && ok; ++i) ok = period_[i] == period_[i - d];
      if (ok) {
        period_.resize(d);
        break;
      }
    }
    while (!prefix_.empty() && prefix_.back() == period_.back()) {
      prefix_.pop_back();
      T last = period_.back();
      period_.pop_back();
      period_.insert(period_.begin(), last);
    }
  }

  std::vector<T> prefix_;
  std::vector<T> period_;
};

// Least index where a and b disagree, or nullopt when equal.
template <class T>
std::optional<std::size_t> first_difference(const Eventual<T>& a, const Eventual<T>& b) {
  if (a == b) return std::nullopt;
  const std::size_t bound =
      std::max(a.stem(), b.stem()) + std::lcm(a.period().size(), b.period().size());
  for (std::size_t i = 0; i < bound; ++i) {
    if (a.entry(i) != b.entry(i)) return i;
  }
  return std::nullopt;  // unreachable for canonical values
}

using BairePoint = Eventual<Nat>;

// Text form "prefix;period", e.g. "0,1;0".
BairePoint parse_baire(std::string_view text);
std::string to_string(const BairePoint& a);

Rational baire_dist(const BairePoint& a, const BairePoint& b);
bool basic_nbhd_contains(const Seq& u, const BairePoint& a);

// u followed by the constant sequence c.
BairePoint pad(const Seq& u, Nat c = 0);
BairePoint shift_up(const BairePoint& a);

Seq parse_nat_list(std::string_view text);
std::string join_nats(const Seq& s);

}  // namespace baire
