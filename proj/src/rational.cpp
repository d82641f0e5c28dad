#include "deltaforge/rational.hpp"

#include <cctype>
#include <functional>
#include <stdexcept>

#include "deltaforge/errors.hpp"

namespace deltaforge {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

namespace {

bool valid_integer(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

mpz_class to_mpz(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  auto t = trim(text);
  auto slash = t.find('/');
  if (slash == std::string_view::npos) {
    if (!valid_integer(t)) throw ParseError("bad rational: '" + std::string(text) + "'");
    return Rational(to_mpz(t));
  }
  auto n = trim(t.substr(0, slash));
  auto d = trim(t.substr(slash + 1));
  if (!valid_integer(n) || !valid_integer(d) || d[0] == '-')
    throw ParseError("bad rational: '" + std::string(text) + "'");
  mpz_class den = to_mpz(d);
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  mpq_class q(to_mpz(n), den);
  q.canonicalize();
  return Rational(q);
}

std::string Rational::str() const { return v_.get_str(); }

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return Rational(mpq_class(1) / v_);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational Rational::pow(unsigned e) const {
  Rational r(1);
  for (unsigned i = 0; i < e; ++i) r *= *this;
  return r;
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

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
  if (o.is_zero()) throw std::domain_error("division by zero");
  v_ /= o.v_;
  return *this;
}

std::size_t Rational::hash() const {
  return std::hash<std::string>{}(v_.get_str(16));
}

}  // namespace deltaforge
