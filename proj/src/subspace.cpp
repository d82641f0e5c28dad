#include "deltaforge/subspace.hpp"

#include <stdexcept>

namespace deltaforge {

Subspace Subspace::zero(std::size_t n, Field f) {
  Subspace s;
  s.n_ = n;
  s.field_ = f;
  s.basis_ = ExactMatrix(0, n, f);
  return s;
}

Subspace Subspace::whole(std::size_t n, Field f) {
  Subspace s;
  s.n_ = n;
  s.field_ = f;
  s.basis_ = ExactMatrix::identity(n, f);
  for (std::size_t i = 0; i < n; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::span(const std::vector<Vec>& vectors, std::size_t n, Field f) {
  std::vector<Vec> nz;
  for (const auto& v : vectors) {
    if (v.size() != n) throw std::invalid_argument("spanning vector has wrong length");
    if (!is_zero_vec(v)) nz.push_back(v);
  }
  if (nz.empty()) return zero(n, f);
  auto rr = rref(ExactMatrix::from_rows(nz, n, f));
  Subspace s;
  s.n_ = n;
  s.field_ = f;
  s.basis_ = ExactMatrix(rr.rank, n, f);
  for (std::size_t r = 0; r < rr.rank; ++r)
    for (std::size_t c = 0; c < n; ++c) s.basis_.at(r, c) = rr.reduced.at(r, c);
  s.pivots_ = rr.pivot_cols;
  return s;
}

Vec Subspace::reduce(const Vec& v) const {
  if (v.size() != n_) throw std::invalid_argument("vector length differs from ambient dimension");
  Vec r = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    if (r[pivots_[i]].is_zero()) continue;
    FieldElement c = -r[pivots_[i]];
    for (std::size_t j = 0; j < n_; ++j)
      if (!basis_.at(i, j).is_zero()) r[j] += c * basis_.at(i, j);
  }
  return r;
}

bool Subspace::contains(const Vec& v) const { return is_zero_vec(reduce(v)); }

bool Subspace::contains(const Subspace& o) const {
  for (std::size_t r = 0; r < o.dim(); ++r)
    if (!contains(o.basis_.row(r))) return false;
  return true;
}

Subspace Subspace::operator+(const Subspace& o) const {
  if (o.n_ != n_) throw std::invalid_argument("subspace sum across ambient dimensions");
  auto vs = basis_vectors();
  for (auto& v : o.basis_vectors()) vs.push_back(std::move(v));
  return span(vs, n_, field_);
}

Subspace Subspace::annihilator() const {
  if (dim() == 0) return whole(n_, field_);
  return span(kernel(basis_), n_, field_);
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (o.n_ != n_) throw std::invalid_argument("subspace intersection across ambient dimensions");
  return (annihilator() + o.annihilator()).annihilator();
}

Subspace Subspace::specialize(const Rational& delta) const {
  std::vector<Vec> vs;
  for (const auto& v : basis_vectors()) vs.push_back(vec_specialize(v, delta));
  return span(vs, n_, Field::Q);
}

Subspace Subspace::to(Field f) const {
  std::vector<Vec> vs;
  for (const auto& v : basis_vectors()) vs.push_back(vec_to(v, f));
  return span(vs, n_, f);
}

}  // namespace deltaforge
