#pragma once

#include <cstddef>
#include <vector>

#include "deltaforge/matrix.hpp"

namespace deltaforge {

// subspace of F^n held as its reduced row-echelon basis, so == is equality of spaces
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(std::size_t n, Field f);
  static Subspace whole(std::size_t n, Field f);
  static Subspace span(const std::vector<Vec>& vectors, std::size_t n, Field f);

  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient_dim() const { return n_; }
  Field field() const { return field_; }
  const ExactMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Vec> basis_vectors() const { return basis_.row_vectors(); }
  bool is_zero() const { return dim() == 0; }
  bool is_whole() const { return dim() == n_; }

  // v minus its components along the pivot rows; zero iff v is inside
  Vec reduce(const Vec& v) const;
  bool contains(const Vec& v) const;
  bool contains(const Subspace& o) const;

  Subspace operator+(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  // { f : f·u = 0 for all u } in coordinates of the standard dual basis
  Subspace annihilator() const;
  Subspace specialize(const Rational& delta) const;
  Subspace to(Field f) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t n_ = 0;
  Field field_ = Field::Q;
  ExactMatrix basis_;
  std::vector<std::size_t> pivots_;
};

}  // namespace deltaforge
