#include "deltaforge/field.hpp"

#include "deltaforge/errors.hpp"

namespace deltaforge {

const char* field_name(Field f) { return f == Field::Q ? "Q" : "Q(delta)"; }

FieldElement FieldElement::zero(Field f) {
  return f == Field::Q ? FieldElement(Rational(0)) : FieldElement(DeltaRational());
}

FieldElement FieldElement::one(Field f) { return from(Rational(1), f); }

FieldElement FieldElement::from(const Rational& r, Field f) {
  return f == Field::Q ? FieldElement(r) : FieldElement(DeltaRational(r));
}

bool FieldElement::is_zero() const {
  return v_.index() == 0 ? std::get<0>(v_).is_zero() : std::get<1>(v_).is_zero();
}

bool FieldElement::is_one() const {
  if (v_.index() == 0) return std::get<0>(v_).is_one();
  const auto& d = std::get<1>(v_);
  return d.is_constant() && d.constant_value().is_one();
}

bool FieldElement::is_unit_constant() const {
  if (v_.index() == 0) return !std::get<0>(v_).is_zero();
  const auto& d = std::get<1>(v_);
  return !d.is_zero() && d.is_constant();
}

int FieldElement::complexity() const { return v_.index() == 0 ? 0 : std::get<1>(v_).complexity(); }

const Rational& FieldElement::q() const {
  if (v_.index() != 0) throw FieldMismatch("expected an element of Q");
  return std::get<0>(v_);
}

const DeltaRational& FieldElement::qd() const {
  if (v_.index() != 1) throw FieldMismatch("expected an element of Q(delta)");
  return std::get<1>(v_);
}

FieldElement FieldElement::promote() const {
  if (v_.index() == 1) return *this;
  return FieldElement(DeltaRational(std::get<0>(v_)));
}

FieldElement FieldElement::to(Field f) const {
  if (f == field()) return *this;
  if (f == Field::QDelta) return promote();
  throw FieldMismatch("cannot demote Q(delta) to Q without a value for delta");
}

FieldElement FieldElement::specialize(const Rational& delta) const {
  if (v_.index() == 0) return *this;
  return FieldElement(std::get<1>(v_).eval(delta));
}

FieldElement FieldElement::inverse() const {
  if (v_.index() == 0) return FieldElement(std::get<0>(v_).inverse());
  return FieldElement(std::get<1>(v_).inverse());
}

FieldElement FieldElement::operator-() const {
  if (v_.index() == 0) return FieldElement(-std::get<0>(v_));
  return FieldElement(-std::get<1>(v_));
}

namespace {
[[noreturn]] void mismatch(const char* op) {
  throw FieldMismatch(std::string("mixed Q and Q(delta) operands in ") + op);
}
}  // namespace

FieldElement& FieldElement::operator+=(const FieldElement& o) {
  if (v_.index() != o.v_.index()) mismatch("+");
  if (v_.index() == 0)
    std::get<0>(v_) += std::get<0>(o.v_);
  else
    std::get<1>(v_) += std::get<1>(o.v_);
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
  if (v_.index() != o.v_.index()) mismatch("-");
  if (v_.index() == 0)
    std::get<0>(v_) -= std::get<0>(o.v_);
  else
    std::get<1>(v_) -= std::get<1>(o.v_);
  return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
  if (v_.index() != o.v_.index()) mismatch("*");
  if (v_.index() == 0)
    std::get<0>(v_) *= std::get<0>(o.v_);
  else
    std::get<1>(v_) *= std::get<1>(o.v_);
  return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
  if (v_.index() != o.v_.index()) mismatch("/");
  if (v_.index() == 0)
    std::get<0>(v_) /= std::get<0>(o.v_);
  else
    std::get<1>(v_) /= std::get<1>(o.v_);
  return *this;
}

FieldElement& FieldElement::operator*=(const Rational& s) {
  if (v_.index() == 0)
    std::get<0>(v_) *= s;
  else
    std::get<1>(v_) *= DeltaRational(s);
  return *this;
}

std::string FieldElement::str() const {
  return v_.index() == 0 ? std::get<0>(v_).str() : std::get<1>(v_).str();
}

Vec zero_vec(std::size_t n, Field f) { return Vec(n, FieldElement::zero(f)); }

Vec unit_vec(std::size_t n, std::size_t i, Field f) {
  Vec v = zero_vec(n, f);
  v.at(i) = FieldElement::one(f);
  return v;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec vec_add(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b.at(i);
  return r;
}

Vec vec_sub(const Vec& a, const Vec& b) {
  Vec r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b.at(i);
  return r;
}

Vec vec_scale(const Vec& a, const FieldElement& s) {
  Vec r = a;
  for (auto& x : r) x *= s;
  return r;
}

void vec_axpy(Vec& y, const FieldElement& a, const Vec& x) {
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += a * x[i];
}

Vec vec_to(const Vec& v, Field f) {
  Vec r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(x.to(f));
  return r;
}

Vec vec_specialize(const Vec& v, const Rational& delta) {
  Vec r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(x.specialize(delta));
  return r;
}

std::string vec_str(const Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + "]";
}

}  // namespace deltaforge
