#pragma once

#include <string>
#include <variant>
#include <vector>

#include "deltaforge/poly.hpp"
#include "deltaforge/rational.hpp"

namespace deltaforge {

enum class Field { Q, QDelta };

const char* field_name(Field f);

// scalar tagged with its field. Mixing Q and Q(δ) throws FieldMismatch;
// promote() is the only bridge. Rational scalars may act on either field.
class FieldElement {
 public:
  FieldElement() : v_(Rational(0)) {}
  FieldElement(const Rational& r) : v_(r) {}
  FieldElement(const DeltaRational& r) : v_(r) {}

  static FieldElement zero(Field f);
  static FieldElement one(Field f);
  static FieldElement from(const Rational& r, Field f);
  static FieldElement delta() { return FieldElement(DeltaRational::delta()); }

  Field field() const { return v_.index() == 0 ? Field::Q : Field::QDelta; }
  bool is_zero() const;
  bool is_one() const;
  // nonzero element of Q, or nonzero constant of Q(δ)
  bool is_unit_constant() const;
  int complexity() const;

  const Rational& q() const;
  const DeltaRational& qd() const;

  FieldElement promote() const;  // Q -> Q(δ)
  FieldElement to(Field f) const;  // promote or identity; never demotes
  FieldElement specialize(const Rational& delta) const;  // Q(δ) -> Q at a value
  FieldElement inverse() const;

  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  FieldElement& operator/=(const FieldElement& o);
  FieldElement& operator*=(const Rational& s);
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
  friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }
  friend FieldElement operator*(FieldElement a, const Rational& s) { return a *= s; }
  friend FieldElement operator*(const Rational& s, FieldElement a) { return a *= s; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.v_ == b.v_; }

  std::string str() const;

 private:
  std::variant<Rational, DeltaRational> v_;
};

using Vec = std::vector<FieldElement>;

Vec zero_vec(std::size_t n, Field f);
Vec unit_vec(std::size_t n, std::size_t i, Field f);
bool is_zero_vec(const Vec& v);
Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Vec& a, const FieldElement& s);
void vec_axpy(Vec& y, const FieldElement& a, const Vec& x);  // y += a x
Vec vec_to(const Vec& v, Field f);
Vec vec_specialize(const Vec& v, const Rational& delta);
std::string vec_str(const Vec& v);

}  // namespace deltaforge
