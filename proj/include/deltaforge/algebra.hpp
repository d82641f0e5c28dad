#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "deltaforge/subspace.hpp"

namespace deltaforge {

using Tensor = std::vector<FieldElement>;  // n^3 entries, index (i*n + j)*n + k

// e_i e_j = sum_k c(i,j,k) e_k, indices 0-based here (files use 1-based)
class Algebra {
 public:
  Algebra() = default;
  Algebra(std::string name, std::size_t dim, Field f);

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  std::size_t dim() const { return n_; }
  Field field() const { return field_; }
  const std::optional<Rational>& delta() const { return delta_; }
  void set_delta(std::optional<Rational> d) { delta_ = std::move(d); }
  const std::vector<std::string>& basis_labels() const { return labels_; }
  void set_basis_labels(std::vector<std::string> l) { labels_ = std::move(l); }

  const FieldElement& c(std::size_t i, std::size_t j, std::size_t k) const { return t_[idx(i, j, k)]; }
  void set(std::size_t i, std::size_t j, std::size_t k, const FieldElement& v);
  const Tensor& structure() const { return t_; }

  bool has_second() const { return second_.has_value(); }
  const FieldElement& c2(std::size_t i, std::size_t j, std::size_t k) const;
  void set_second(std::size_t i, std::size_t j, std::size_t k, const FieldElement& v);
  const std::optional<Tensor>& second_structure() const { return second_; }
  void clear_second() { second_.reset(); }

  Algebra specialize(const Rational& delta) const;
  Algebra to(Field f) const;
  bool product_is_zero() const;

  friend bool operator==(const Algebra&, const Algebra&) = default;

 private:
  std::size_t idx(std::size_t i, std::size_t j, std::size_t k) const { return (i * n_ + j) * n_ + k; }
  std::string name_;
  std::size_t n_ = 0;
  Field field_ = Field::Q;
  std::optional<Rational> delta_;
  std::vector<std::string> labels_;
  Tensor t_;
  std::optional<Tensor> second_;
};

// 1-based convenience constructor for tables: {left, right, {{k, "coef"}, ...}}
struct ProductRule {
  std::size_t left, right;
  std::vector<std::pair<std::size_t, Rational>> result;
};
Algebra make_algebra(const std::string& name, std::size_t dim, const std::vector<ProductRule>& rules);
Algebra zero_algebra(std::size_t dim, Field f = Field::Q);

enum class Which { First, Second };
enum class Side { Left, Right, TwoSided };
enum class SeriesKind { LowerCentral, Derived, LeftOrdered, RightOrdered };
enum class ElementSide { BothSides, RightOnly };

const char* series_name(SeriesKind k);

Vec basis_product(const Algebra& a, std::size_t i, std::size_t j, Which w = Which::First);
Vec multiply(const Algebra& a, const Vec& x, const Vec& y, Which w = Which::First);
Subspace subspace_product(const Algebra& a, const Subspace& u, const Subspace& v);

struct SeriesResult {
  std::vector<Subspace> chain;   // L^1, L^2, ... up to the first zero or the stable term
  std::optional<std::size_t> index;  // nullopt = NotTerminating
  std::vector<std::size_t> dims() const;
};
SeriesResult series(const Algebra& a, SeriesKind kind);

Subspace annihilator(const Algebra& a, Side side);
Subspace element_annihilator(const Algebra& a, const Vec& x, ElementSide kind);
Subspace ideal_closure(const Algebra& a, const Subspace& seed);
bool is_ideal(const Algebra& a, const Subspace& s);

// A/I on the complement spanned by the non-pivot standard basis vectors of I
Algebra quotient(const Algebra& a, const Subspace& ideal);
Vec quotient_coordinates(const Subspace& ideal, const Vec& v);

ExactMatrix mult_operator(const Algebra& a, const Vec& x, Side side);

struct Eigenpair {
  Rational value;
  Subspace space;
  std::size_t multiplicity = 0;  // algebraic
};
struct EigenReport {
  std::vector<Eigenpair> pairs;  // ascending eigenvalues
  std::size_t irrational_count = 0;
  DeltaPoly charpoly;  // variable printed as d, but it is the spectral variable
};
EigenReport rational_eigenpairs(const ExactMatrix& m);
DeltaPoly characteristic_polynomial(const ExactMatrix& m);

struct ZinbielEigenReport {
  bool pass = true;
  std::size_t checked = 0;
  std::size_t vacuous = 0;
  std::vector<std::string> failures;
};
ZinbielEigenReport zinbiel_eigen_check(const Algebra& z, const Rational& delta);

struct PowerProfile {
  bool nil3 = false;
  bool third_power_symmetric = false;
  bool albert_pair = false;
  bool fourth_powers_zero = false;
};
PowerProfile power_profile(const Algebra& a);

std::size_t generating_length(const Algebra& a, const std::vector<Vec>& gens);

struct GeneratedSubalgebra {
  Subspace space;
  std::vector<Vec> adapted_basis;
  Algebra table;
};
GeneratedSubalgebra subalgebra_generated(const Algebra& a, const std::vector<Vec>& gens);

// dimension of the derivation algebra (extra invariant for table distinction)
std::size_t derivation_dim(const Algebra& a);

struct Fingerprint {
  std::size_t dim = 0;
  std::vector<std::size_t> lower_central_dims;
  std::vector<std::size_t> derived_dims;
  std::optional<std::size_t> nilpotency_index;
  std::optional<std::size_t> solvability_index;
  std::size_t ann_left = 0, ann_right = 0, ann = 0;
  bool commutative = false;
  bool anticommutative = false;
  std::size_t square_span = 0;
  bool basis_idempotent = false;
  std::size_t derivations = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};
Fingerprint fingerprint(const Algebra& a);

}  // namespace deltaforge
