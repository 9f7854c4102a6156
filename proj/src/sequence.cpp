#include "baire/sequence.hpp"

#include <charconv>

namespace baire {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Seq parse_nat_list(std::string_view text) {
  Seq out;
  text = trim(text);
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    auto piece = trim(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start));
    Nat v = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), v);
    if (piece.empty() || ec != std::errc() || ptr != piece.data() + piece.size()) {
      throw std::invalid_argument("bad natural: '" + std::string(piece) + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string join_nats(const Seq& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out;
}

BairePoint parse_baire(std::string_view text) {
  auto semi = text.find(';');
  if (semi == std::string_view::npos) {
    throw std::invalid_argument("Baire literal needs 'prefix;period': " + std::string(text));
  }
  Seq period = parse_nat_list(text.substr(semi + 1));
  if (period.empty()) throw std::invalid_argument("empty period in: " + std::string(text));
  return BairePoint(parse_nat_list(text.substr(0, semi)), std::move(period));
}

std::string to_string(const BairePoint& a) {
  return join_nats(a.prefix()) + ";" + join_nats(a.period());
}

Rational baire_dist(const BairePoint& a, const BairePoint& b) {
  auto d = first_difference(a, b);
  if (!d) return Rational(0);
  return inv_succ(static_cast<Nat>(*d));
}

bool basic_nbhd_contains(const Seq& u, const BairePoint& a) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (a.entry(i) != u[i]) return false;
  }
  return true;
}

BairePoint pad(const Seq& u, Nat c) { return BairePoint(u, {c}); }

BairePoint shift_up(const BairePoint& a) {
  Seq p = a.prefix(), q = a.period();
  for (auto& v : p) ++v;
  for (auto& v : q) ++v;
  return BairePoint(std::move(p), std::move(q));
}

}  // namespace baire
