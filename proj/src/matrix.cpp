#include "deltaforge/matrix.hpp"

#include <limits>
#include <stdexcept>

#include "deltaforge/errors.hpp"

namespace deltaforge {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, Field f)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, FieldElement::zero(f)) {}

ExactMatrix ExactMatrix::from_rows(const std::vector<Vec>& rows, std::size_t cols, Field f) {
  ExactMatrix m(rows.size(), cols, f);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row width mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  m.check_field();
  return m;
}

ExactMatrix ExactMatrix::identity(std::size_t n, Field f) {
  ExactMatrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = FieldElement::one(f);
  return m;
}

Vec ExactMatrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<long>(r * cols_), data_.begin() + static_cast<long>((r + 1) * cols_));
}

Vec ExactMatrix::col(std::size_t c) const {
  Vec v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

std::vector<Vec> ExactMatrix::row_vectors() const {
  std::vector<Vec> out;
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

ExactMatrix ExactMatrix::specialize(const Rational& delta) const {
  ExactMatrix m(rows_, cols_, Field::Q);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i].specialize(delta);
  return m;
}

ExactMatrix ExactMatrix::to(Field f) const {
  ExactMatrix m(rows_, cols_, f);
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] = data_[i].to(f);
  return m;
}

Vec ExactMatrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector width mismatch");
  Vec out = zero_vec(rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!at(r, c).is_zero() && !v[c].is_zero()) out[r] += at(r, c) * v[c];
  return out;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
  ExactMatrix m(rows_, o.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      if (at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (!o.at(k, j).is_zero()) m.at(i, j) += at(i, k) * o.at(k, j);
    }
  return m;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
  ExactMatrix m = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] -= o.data_[i];
  return m;
}

void ExactMatrix::check_field() const {
  for (const auto& x : data_)
    if (x.field() != field_)
      throw FieldMismatch(std::string("matrix declared over ") + field_name(field_) +
                          " holds an entry of " + field_name(x.field()));
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------

namespace {

// row-level helpers operating on a vector-of-rows working copy
void scale_row(Vec& row, const FieldElement& s) {
  for (auto& x : row)
    if (!x.is_zero()) x *= s;
}

void eliminate(Vec& target, const Vec& pivot_row, std::size_t col) {
  if (target[col].is_zero()) return;
  FieldElement f = -target[col];
  for (std::size_t c = 0; c < target.size(); ++c)
    if (!pivot_row[c].is_zero()) target[c] += f * pivot_row[c];
}

}  // namespace

RrefResult rref(const ExactMatrix& m) {
  m.check_field();
  std::vector<Vec> rows = m.row_vectors();
  const std::size_t nr = m.rows(), nc = m.cols();
  RrefResult res;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < nc && lead < nr; ++c) {
    // pick the simplest nonzero entry in this column; the reduced form is unique
    // whatever we choose, this only limits growth of rational functions
    std::size_t best = nr;
    int best_cost = std::numeric_limits<int>::max();
    for (std::size_t r = lead; r < nr; ++r) {
      if (rows[r][c].is_zero()) continue;
      int cost = rows[r][c].complexity();
      if (cost < best_cost) {
        best = r;
        best_cost = cost;
        if (cost == 0) break;
      }
    }
    if (best == nr) continue;
    std::swap(rows[lead], rows[best]);
    scale_row(rows[lead], rows[lead][c].inverse());
    for (std::size_t r = 0; r < nr; ++r)
      if (r != lead) eliminate(rows[r], rows[lead], c);
    res.pivot_cols.push_back(c);
    ++lead;
  }
  res.rank = lead;
  res.reduced = ExactMatrix(nr, nc, m.field());
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) res.reduced.at(r, c) = rows[r][c];
  return res;
}

std::size_t rank(const ExactMatrix& m) { return rref(m).rank; }

std::vector<Vec> kernel(const ExactMatrix& m) {
  auto rr = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : rr.pivot_cols) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v = zero_vec(m.cols(), m.field());
    v[f] = FieldElement::one(m.field());
    for (std::size_t i = 0; i < rr.pivot_cols.size(); ++i) v[rr.pivot_cols[i]] = -rr.reduced.at(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> span_membership(const ExactMatrix& span_rows, const Vec& v) {
  span_rows.check_field();
  const std::size_t k = span_rows.rows(), w = span_rows.cols();
  if (v.size() != w) throw std::invalid_argument("span_membership width mismatch");
  const Field f = span_rows.field();
  for (const auto& x : v)
    if (x.field() != f) throw FieldMismatch("target vector field differs from span field");

  // system A c = v with A = span_rowsᵀ, augmented; full pivoting that prefers
  // constant pivots so denominators only appear where they are forced
  std::vector<Vec> sys(w, Vec(k + 1, FieldElement::zero(f)));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < w; ++c) sys[c][r] = span_rows.at(r, c);
  for (std::size_t c = 0; c < w; ++c) sys[c][k] = v[c];

  std::vector<bool> row_used(w, false), col_used(k, false);
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  for (;;) {
    std::size_t br = w, bc = k;
    long best = std::numeric_limits<long>::max();
    for (std::size_t r = 0; r < w; ++r) {
      if (row_used[r]) continue;
      long nnz = 0;
      for (std::size_t c = 0; c < k; ++c)
        if (!col_used[c] && !sys[r][c].is_zero()) ++nnz;
      if (nnz == 0) continue;
      for (std::size_t c = 0; c < k; ++c) {
        if (col_used[c] || sys[r][c].is_zero()) continue;
        long score = static_cast<long>(sys[r][c].complexity()) * 1000000L +
                     (sys[r][c].is_unit_constant() ? 0 : 500000L) + nnz;
        if (score < best) {
          best = score;
          br = r;
          bc = c;
        }
      }
    }
    if (br == w) break;
    row_used[br] = true;
    col_used[bc] = true;
    scale_row(sys[br], sys[br][bc].inverse());
    for (std::size_t r = 0; r < w; ++r)
      if (r != br) eliminate(sys[r], sys[br], bc);
    pivots.emplace_back(br, bc);
  }
  for (std::size_t r = 0; r < w; ++r)
    if (!row_used[r] && !sys[r][k].is_zero()) return std::nullopt;

  Vec coeffs = zero_vec(k, f);
  for (auto [r, c] : pivots) coeffs[c] = sys[r][k];

  // reconstruction must be exact
  Vec check = zero_vec(w, f);
  for (std::size_t r = 0; r < k; ++r)
    if (!coeffs[r].is_zero()) vec_axpy(check, coeffs[r], span_rows.row(r));
  if (check != v) throw std::logic_error("span_membership reconstruction mismatch");
  return coeffs;
}

}  // namespace deltaforge
