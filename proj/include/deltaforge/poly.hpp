#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "deltaforge/rational.hpp"

namespace deltaforge {

// polynomial in the formal parameter δ, coefficients lowest degree first,
// never stored with a trailing zero
class DeltaPoly {
 public:
  DeltaPoly() = default;
  DeltaPoly(const Rational& c);
  template <std::integral T>
  DeltaPoly(T c) : DeltaPoly(Rational(c)) {}
  explicit DeltaPoly(std::vector<Rational> coeffs);

  static DeltaPoly delta();
  static DeltaPoly monomial(const Rational& c, std::size_t degree);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const;

  Rational eval(const Rational& x) const;
  DeltaPoly monic() const;
  DeltaPoly derivative() const;

  DeltaPoly operator-() const;
  DeltaPoly& operator+=(const DeltaPoly& o);
  DeltaPoly& operator-=(const DeltaPoly& o);
  DeltaPoly& operator*=(const DeltaPoly& o);
  DeltaPoly& operator*=(const Rational& s);
  friend DeltaPoly operator+(DeltaPoly a, const DeltaPoly& b) { return a += b; }
  friend DeltaPoly operator-(DeltaPoly a, const DeltaPoly& b) { return a -= b; }
  friend DeltaPoly operator*(DeltaPoly a, const DeltaPoly& b) { return a *= b; }
  friend DeltaPoly operator*(DeltaPoly a, const Rational& s) { return a *= s; }

  // exact Euclidean division; b nonzero
  static std::pair<DeltaPoly, DeltaPoly> divmod(const DeltaPoly& a, const DeltaPoly& b);
  // monic gcd; gcd(0, 0) = 0
  static DeltaPoly gcd(DeltaPoly a, DeltaPoly b);

  std::string str(const char* var = "d") const;

  friend bool operator==(const DeltaPoly&, const DeltaPoly&) = default;

 private:
  void trim();
  std::vector<Rational> c_;
};

// element of Q(δ): num/den with gcd 1 and den monic
class DeltaRational {
 public:
  DeltaRational() : den_(1) {}
  DeltaRational(const Rational& c) : num_(c), den_(1) {}
  template <std::integral T>
  DeltaRational(T c) : DeltaRational(Rational(c)) {}
  DeltaRational(const DeltaPoly& p) : num_(p), den_(1) {}
  DeltaRational(DeltaPoly num, DeltaPoly den);

  static DeltaRational delta() { return DeltaRational(DeltaPoly::delta()); }

  const DeltaPoly& num() const { return num_; }
  const DeltaPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  Rational constant_value() const;  // requires is_constant()
  int complexity() const { return num_.degree() + den_.degree(); }

  // value at a concrete δ; ForbiddenDelta when den vanishes there
  Rational eval(const Rational& x) const;
  // substitute δ := f
  DeltaRational compose(const DeltaRational& f) const;
  DeltaRational inverse() const;

  DeltaRational operator-() const;
  DeltaRational& operator+=(const DeltaRational& o);
  DeltaRational& operator-=(const DeltaRational& o);
  DeltaRational& operator*=(const DeltaRational& o);
  DeltaRational& operator/=(const DeltaRational& o);
  friend DeltaRational operator+(DeltaRational a, const DeltaRational& b) { return a += b; }
  friend DeltaRational operator-(DeltaRational a, const DeltaRational& b) { return a -= b; }
  friend DeltaRational operator*(DeltaRational a, const DeltaRational& b) { return a *= b; }
  friend DeltaRational operator/(DeltaRational a, const DeltaRational& b) { return a /= b; }

  std::string str() const;
  // "[num coeffs] ; [den coeffs]" with JSON arrays of rational strings
  std::string text() const;
  static DeltaRational parse_text(const std::string& text);

  friend bool operator==(const DeltaRational&, const DeltaRational&) = default;

 private:
  void normalize();
  DeltaPoly num_, den_;
};

struct RootReport {
  std::vector<Rational> roots;  // distinct, ascending
  bool nonrational_factor = false;
};

RootReport rational_roots(const DeltaPoly& p);
std::vector<Rational> denominator_roots(const DeltaRational& x);

}  // namespace deltaforge
