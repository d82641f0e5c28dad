#include "deltaforge/poly.hpp"

#include <algorithm>
#include <json.hpp>
#include <set>
#include <sstream>

#include "deltaforge/errors.hpp"

namespace deltaforge {

DeltaPoly::DeltaPoly(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

DeltaPoly::DeltaPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

DeltaPoly DeltaPoly::delta() { return monomial(Rational(1), 1); }

DeltaPoly DeltaPoly::monomial(const Rational& c, std::size_t degree) {
  if (c.is_zero()) return {};
  std::vector<Rational> v(degree + 1, Rational(0));
  v[degree] = c;
  return DeltaPoly(std::move(v));
}

void DeltaPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& DeltaPoly::leading() const {
  static const Rational zero(0);
  return c_.empty() ? zero : c_.back();
}

Rational DeltaPoly::eval(const Rational& x) const {
  Rational r(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

DeltaPoly DeltaPoly::monic() const {
  if (is_zero()) return {};
  DeltaPoly r = *this;
  Rational inv = leading().inverse();
  for (auto& c : r.c_) c *= inv;
  return r;
}

DeltaPoly DeltaPoly::derivative() const {
  std::vector<Rational> v;
  for (std::size_t i = 1; i < c_.size(); ++i) v.push_back(c_[i] * Rational(static_cast<long>(i)));
  return DeltaPoly(std::move(v));
}

DeltaPoly DeltaPoly::operator-() const {
  DeltaPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

DeltaPoly& DeltaPoly::operator+=(const DeltaPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

DeltaPoly& DeltaPoly::operator-=(const DeltaPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

DeltaPoly& DeltaPoly::operator*=(const DeltaPoly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

DeltaPoly& DeltaPoly::operator*=(const Rational& s) {
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

std::pair<DeltaPoly, DeltaPoly> DeltaPoly::divmod(const DeltaPoly& a, const DeltaPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {DeltaPoly(), a};
  std::vector<Rational> rem = a.c_;
  std::vector<Rational> q(a.c_.size() - b.c_.size() + 1, Rational(0));
  Rational inv = b.leading().inverse();
  for (int i = static_cast<int>(rem.size()) - 1; i >= b.degree(); --i) {
    if (rem[i].is_zero()) continue;
    Rational f = rem[i] * inv;
    std::size_t shift = static_cast<std::size_t>(i - b.degree());
    q[shift] = f;
    for (std::size_t j = 0; j < b.c_.size(); ++j) rem[shift + j] -= f * b.c_[j];
  }
  return {DeltaPoly(std::move(q)), DeltaPoly(std::move(rem))};
}

DeltaPoly DeltaPoly::gcd(DeltaPoly a, DeltaPoly b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

std::string DeltaPoly::str(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[i];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    bool show = i == 0 || !mag.is_one();
    if (show) {
      if (mag.is_integer() || i == 0)
        os << mag.str();
      else
        os << "(" << mag.str() << ")";
    }
    if (i >= 1) {
      if (show) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------

DeltaRational::DeltaRational(DeltaPoly num, DeltaPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator in Q(d)");
  normalize();
}

void DeltaRational::normalize() {
  if (num_.is_zero()) {
    den_ = DeltaPoly(Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    DeltaPoly g = DeltaPoly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = DeltaPoly::divmod(num_, g).first;
      den_ = DeltaPoly::divmod(den_, g).first;
    }
  }
  if (!den_.leading().is_one()) {
    Rational inv = den_.leading().inverse();
    num_ *= inv;
    den_ *= inv;
  }
}

Rational DeltaRational::constant_value() const {
  if (!is_constant()) throw std::logic_error("not a constant in Q(d)");
  return num_.coeff(0);
}

Rational DeltaRational::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d.is_zero())
    throw ForbiddenDelta("rational function " + str() + " undefined at d = " + x.str());
  return num_.eval(x) / d;
}

DeltaRational DeltaRational::compose(const DeltaRational& f) const {
  auto horner = [&f](const DeltaPoly& p) {
    DeltaRational r;
    const auto& c = p.coeffs();
    for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * f + DeltaRational(*it);
    return r;
  };
  return horner(num_) / horner(den_);
}

DeltaRational DeltaRational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in Q(d)");
  return DeltaRational(den_, num_);
}

DeltaRational DeltaRational::operator-() const {
  DeltaRational r = *this;
  r.num_ = -r.num_;
  return r;
}

DeltaRational& DeltaRational::operator+=(const DeltaRational& o) {
  if (o.is_zero()) return *this;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (den_.is_constant() || num_.is_zero()) {
      if (num_.is_zero()) den_ = DeltaPoly(Rational(1));
      return *this;
    }
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

DeltaRational& DeltaRational::operator-=(const DeltaRational& o) { return *this += -o; }

DeltaRational& DeltaRational::operator*=(const DeltaRational& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = DeltaRational();
  num_ *= o.num_;
  bool plain = den_.is_constant() && o.den_.is_constant();
  den_ *= o.den_;
  if (!plain) normalize();
  return *this;
}

DeltaRational& DeltaRational::operator/=(const DeltaRational& o) { return *this *= o.inverse(); }

std::string DeltaRational::str() const {
  if (den_.is_constant()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

namespace {
std::string coeff_array(const DeltaPoly& p) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.str());
  return a.dump();
}

DeltaPoly parse_array(const std::string& s) {
  nlohmann::json a;
  try {
    a = nlohmann::json::parse(s);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad coefficient array: ") + e.what());
  }
  if (!a.is_array()) throw ParseError("coefficient list must be an array");
  std::vector<Rational> v;
  for (const auto& x : a) {
    if (x.is_string())
      v.push_back(Rational::parse(x.get<std::string>()));
    else if (x.is_number_integer())
      v.push_back(Rational(x.get<long>()));
    else
      throw ParseError("coefficient must be a rational string");
  }
  return DeltaPoly(std::move(v));
}
}  // namespace

std::string DeltaRational::text() const { return coeff_array(num_) + " ; " + coeff_array(den_); }

DeltaRational DeltaRational::parse_text(const std::string& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos) return DeltaRational(parse_array(text));
  DeltaPoly den = parse_array(text.substr(semi + 1));
  if (den.is_zero()) throw ParseError("zero denominator");
  return DeltaRational(parse_array(text.substr(0, semi)), den);
}

// ---------------------------------------------------------------------------

namespace {

std::vector<mpz_class> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// integer-coefficient primitive multiple of p
std::vector<mpz_class> integer_coeffs(const DeltaPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) {
    mpz_class d = c.denominator();
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  std::vector<mpz_class> out;
  mpz_class g = 0;
  for (const auto& c : p.coeffs()) {
    mpq_class v = c.raw() * l;
    out.push_back(v.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g != 0)
    for (auto& x : out) x /= g;
  return out;
}

}  // namespace

RootReport rational_roots(const DeltaPoly& p) {
  RootReport rep;
  if (p.degree() <= 0) return rep;
  DeltaPoly q = p;
  std::set<Rational> found;
  // strip the factor δ^m first
  if (q.coeff(0).is_zero()) {
    found.insert(Rational(0));
    std::size_t m = 0;
    while (q.coeff(m).is_zero()) ++m;
    std::vector<Rational> rest(q.coeffs().begin() + static_cast<long>(m), q.coeffs().end());
    q = DeltaPoly(std::move(rest));
  }
  while (q.degree() > 0) {
    auto ints = integer_coeffs(q);
    bool hit = false;
    for (const auto& num : divisors(ints.front())) {
      for (const auto& den : divisors(ints.back())) {
        for (int s : {1, -1}) {
          mpq_class cand(num * s, den);
          cand.canonicalize();
          Rational r(cand);
          if (!q.eval(r).is_zero()) continue;
          found.insert(r);
          q = DeltaPoly::divmod(q, DeltaPoly(std::vector<Rational>{-r, Rational(1)})).first;
          hit = true;
          break;
        }
        if (hit) break;
      }
      if (hit) break;
    }
    if (!hit) {
      rep.nonrational_factor = true;
      break;
    }
  }
  rep.roots.assign(found.begin(), found.end());
  return rep;
}

std::vector<Rational> denominator_roots(const DeltaRational& x) { return rational_roots(x.den()).roots; }

}  // namespace deltaforge
