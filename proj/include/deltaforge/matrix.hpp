#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "deltaforge/field.hpp"

namespace deltaforge {

class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols, Field f);
  static ExactMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols, Field f);
  static ExactMatrix identity(std::size_t n, Field f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }

  FieldElement& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const FieldElement& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  std::vector<Vec> row_vectors() const;

  ExactMatrix transpose() const;
  ExactMatrix specialize(const Rational& delta) const;
  ExactMatrix to(Field f) const;
  Vec apply(const Vec& v) const;
  ExactMatrix operator*(const ExactMatrix& o) const;
  ExactMatrix operator-(const ExactMatrix& o) const;

  // throws FieldMismatch if an entry lives in the other field
  void check_field() const;
  bool is_zero() const;

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Field field_ = Field::Q;
  std::vector<FieldElement> data_;
};

struct RrefResult {
  ExactMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

RrefResult rref(const ExactMatrix& m);
std::size_t rank(const ExactMatrix& m);
std::vector<Vec> kernel(const ExactMatrix& m);
// coefficients c with sum c_i * row_i = v, or nullopt when v is outside the row span
std::optional<Vec> span_membership(const ExactMatrix& span_rows, const Vec& v);

}  // namespace deltaforge
