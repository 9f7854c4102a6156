#include "baire/rational.hpp"

#include <stdexcept>

namespace baire {

Rational::Rational(long n) : v_(n) {}

Rational::Rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  v_ = mpq_class(mpz_class(num), mpz_class(den));
  v_.canonicalize();
}

Rational::Rational(const mpz_class& n) : v_(n) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

mpz_class to_mpz(std::string_view s) {
  if (s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_integer(text)) throw std::invalid_argument("bad rational: " + std::string(text));
    return Rational(to_mpz(text));
  }
  auto n = text.substr(0, slash);
  auto d = text.substr(slash + 1);
  if (!valid_integer(n) || !valid_integer(d) || d[0] == '-') {
    throw std::invalid_argument("bad rational: " + std::string(text));
  }
  mpz_class den = to_mpz(d);
  if (den == 0) throw std::invalid_argument("zero denominator: " + std::string(text));
  return Rational(to_mpz(n), den);
}

std::string Rational::str() const { return v_.get_str(10); }

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

mpz_class Rational::ceil() const {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
  return q;
}

Rational& Rational::operator+=(const Rational& o) {
  v_ += o.v_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  v_ -= o.v_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  v_ *= o.v_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.v_ == 0) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }
const Rational& min(const Rational& a, const Rational& b) { return b < a ? b : a; }
const Rational& max(const Rational& a, const Rational& b) { return a < b ? b : a; }

Rational pow2_neg(unsigned long k) {
  mpz_class d;
  mpz_ui_pow_ui(d.get_mpz_t(), 2, k);
  return Rational(mpz_class(1), d);
}

Rational inv_succ(const mpz_class& n) { return Rational(mpz_class(1), n + 1); }
Rational inv_succ(std::uint64_t n) { return inv_succ(mpz_class(static_cast<unsigned long>(n))); }

}  // namespace baire
