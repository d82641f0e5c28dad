#include "deltaforge/algebra.hpp"

#include <stdexcept>

#include "deltaforge/errors.hpp"

namespace deltaforge {

Algebra::Algebra(std::string name, std::size_t dim, Field f)
    : name_(std::move(name)), n_(dim), field_(f), t_(dim * dim * dim, FieldElement::zero(f)) {}

void Algebra::set(std::size_t i, std::size_t j, std::size_t k, const FieldElement& v) {
  if (i >= n_ || j >= n_ || k >= n_) throw std::out_of_range("structure index out of range");
  if (v.field() != field_) throw FieldMismatch("structure constant in the wrong field");
  t_[idx(i, j, k)] = v;
}

const FieldElement& Algebra::c2(std::size_t i, std::size_t j, std::size_t k) const {
  if (!second_) throw MissingSecondProduct("algebra '" + name_ + "' has no second product");
  return (*second_)[idx(i, j, k)];
}

void Algebra::set_second(std::size_t i, std::size_t j, std::size_t k, const FieldElement& v) {
  if (i >= n_ || j >= n_ || k >= n_) throw std::out_of_range("structure index out of range");
  if (v.field() != field_) throw FieldMismatch("structure constant in the wrong field");
  if (!second_) second_ = Tensor(n_ * n_ * n_, FieldElement::zero(field_));
  (*second_)[idx(i, j, k)] = v;
}

Algebra Algebra::specialize(const Rational& delta) const {
  Algebra r = *this;
  r.field_ = Field::Q;
  for (auto& x : r.t_) x = x.specialize(delta);
  if (r.second_)
    for (auto& x : *r.second_) x = x.specialize(delta);
  return r;
}

Algebra Algebra::to(Field f) const {
  Algebra r = *this;
  r.field_ = f;
  for (auto& x : r.t_) x = x.to(f);
  if (r.second_)
    for (auto& x : *r.second_) x = x.to(f);
  return r;
}

bool Algebra::product_is_zero() const {
  for (const auto& x : t_)
    if (!x.is_zero()) return false;
  return true;
}

Algebra make_algebra(const std::string& name, std::size_t dim, const std::vector<ProductRule>& rules) {
  Algebra a(name, dim, Field::Q);
  for (const auto& r : rules)
    for (const auto& [k, coef] : r.result) a.set(r.left - 1, r.right - 1, k - 1, FieldElement(a.c(r.left - 1, r.right - 1, k - 1).q() + coef));
  return a;
}

Algebra zero_algebra(std::size_t dim, Field f) { return Algebra("zero" + std::to_string(dim), dim, f); }

const char* series_name(SeriesKind k) {
  switch (k) {
    case SeriesKind::LowerCentral: return "lower_central";
    case SeriesKind::Derived: return "derived";
    case SeriesKind::LeftOrdered: return "left_ordered";
    case SeriesKind::RightOrdered: return "right_ordered";
  }
  return "?";
}

Vec basis_product(const Algebra& a, std::size_t i, std::size_t j, Which w) {
  const std::size_t n = a.dim();
  Vec v;
  v.reserve(n);
  for (std::size_t k = 0; k < n; ++k) v.push_back(w == Which::First ? a.c(i, j, k) : a.c2(i, j, k));
  return v;
}

Vec multiply(const Algebra& a, const Vec& x, const Vec& y, Which w) {
  const std::size_t n = a.dim();
  if (x.size() != n || y.size() != n) throw std::invalid_argument("element length differs from algebra dimension");
  if (w == Which::Second && !a.has_second())
    throw MissingSecondProduct("algebra '" + a.name() + "' has no second product");
  Vec out = zero_vec(n, a.field());
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) continue;
      FieldElement s = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        const FieldElement& c = w == Which::First ? a.c(i, j, k) : a.c2(i, j, k);
        if (!c.is_zero()) out[k] += s * c;
      }
    }
  }
  return out;
}

Subspace subspace_product(const Algebra& a, const Subspace& u, const Subspace& v) {
  std::vector<Vec> prods;
  auto ub = u.basis_vectors(), vb = v.basis_vectors();
  for (const auto& x : ub)
    for (const auto& y : vb) prods.push_back(multiply(a, x, y));
  return Subspace::span(prods, a.dim(), a.field());
}

std::vector<std::size_t> SeriesResult::dims() const {
  std::vector<std::size_t> d;
  for (const auto& s : chain) d.push_back(s.dim());
  return d;
}

SeriesResult series(const Algebra& a, SeriesKind kind) {
  const std::size_t n = a.dim();
  const Subspace whole = Subspace::whole(n, a.field());
  SeriesResult res;
  std::vector<Subspace> terms{Subspace(), whole};  // 1-based
  if (whole.is_zero()) {
    res.chain = {whole};
    res.index = 1;
    return res;
  }
  constexpr std::size_t cap = 512;
  for (std::size_t k = 2; k < cap; ++k) {
    Subspace next;
    switch (kind) {
      case SeriesKind::LowerCentral: {
        next = Subspace::zero(n, a.field());
        for (std::size_t i = 1; i < k; ++i) next = next + subspace_product(a, terms[i], terms[k - i]);
        break;
      }
      case SeriesKind::Derived: next = subspace_product(a, terms[k - 1], terms[k - 1]); break;
      case SeriesKind::LeftOrdered: next = subspace_product(a, terms[k - 1], whole); break;
      case SeriesKind::RightOrdered: next = subspace_product(a, whole, terms[k - 1]); break;
    }
    terms.push_back(next);
    if (next.is_zero()) {
      res.chain.assign(terms.begin() + 1, terms.end());
      res.index = k;
      return res;
    }
    // plateau start s: terms[s..k] all equal
    std::size_t s = k;
    while (s > 1 && terms[s - 1] == next) --s;
    if (s == k) continue;
    bool stable = kind != SeriesKind::LowerCentral || k >= std::max(2 * s - 1, s + 1);
    // lower central: L^s = ... = L^{2s-1} forces every later term to agree,
    // a shorter plateau can still drop afterwards
    if (stable) {
      res.chain.assign(terms.begin() + 1, terms.begin() + static_cast<long>(s) + 1);
      return res;
    }
  }
  throw std::logic_error("series did not settle within the iteration cap");
}

namespace {

ExactMatrix stack(const std::vector<ExactMatrix>& ms, std::size_t n, Field f) {
  std::vector<Vec> rows;
  for (const auto& m : ms)
    for (auto& r : m.row_vectors()) rows.push_back(std::move(r));
  if (rows.empty()) return ExactMatrix(0, n, f);
  return ExactMatrix::from_rows(rows, n, f);
}

Subspace kernel_space(const ExactMatrix& m, std::size_t n, Field f) {
  if (m.rows() == 0) return Subspace::whole(n, f);
  return Subspace::span(kernel(m), n, f);
}

}  // namespace

ExactMatrix mult_operator(const Algebra& a, const Vec& x, Side side) {
  const std::size_t n = a.dim();
  ExactMatrix m(n, n, a.field());
  for (std::size_t j = 0; j < n; ++j) {
    Vec ej = unit_vec(n, j, a.field());
    Vec col = side == Side::Left ? multiply(a, x, ej) : multiply(a, ej, x);
    for (std::size_t k = 0; k < n; ++k) m.at(k, j) = col[k];
  }
  return m;
}

Subspace annihilator(const Algebra& a, Side side) {
  const std::size_t n = a.dim();
  std::vector<ExactMatrix> ops;
  for (std::size_t i = 0; i < n; ++i) {
    Vec ei = unit_vec(n, i, a.field());
    // x in Ann_left  <=>  x e_i = 0 for all i  <=>  x in ker R_{e_i}
    if (side != Side::Right) ops.push_back(mult_operator(a, ei, Side::Right));
    if (side != Side::Left) ops.push_back(mult_operator(a, ei, Side::Left));
  }
  return kernel_space(stack(ops, n, a.field()), n, a.field());
}

Subspace element_annihilator(const Algebra& a, const Vec& x, ElementSide kind) {
  std::vector<ExactMatrix> ops{mult_operator(a, x, Side::Left)};
  if (kind == ElementSide::BothSides) ops.push_back(mult_operator(a, x, Side::Right));
  return kernel_space(stack(ops, a.dim(), a.field()), a.dim(), a.field());
}

bool is_ideal(const Algebra& a, const Subspace& s) {
  const Subspace whole = Subspace::whole(a.dim(), a.field());
  return s.contains(subspace_product(a, whole, s)) && s.contains(subspace_product(a, s, whole));
}

Subspace ideal_closure(const Algebra& a, const Subspace& seed) {
  const Subspace whole = Subspace::whole(a.dim(), a.field());
  Subspace cur = seed;
  for (;;) {
    Subspace next = cur + subspace_product(a, whole, cur) + subspace_product(a, cur, whole);
    if (next == cur) break;
    cur = next;
  }
  if (!is_ideal(a, cur)) throw std::logic_error("ideal closure is not an ideal");
  return cur;
}

Vec quotient_coordinates(const Subspace& ideal, const Vec& v) {
  Vec r = ideal.reduce(v);
  std::vector<bool> piv(v.size(), false);
  for (auto p : ideal.pivots()) piv[p] = true;
  Vec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!piv[i]) out.push_back(r[i]);
  return out;
}

Algebra quotient(const Algebra& a, const Subspace& ideal) {
  const std::size_t n = a.dim();
  auto ib = ideal.basis_vectors();
  for (std::size_t i = 0; i < n; ++i) {
    Vec ei = unit_vec(n, i, a.field());
    for (std::size_t r = 0; r < ib.size(); ++r) {
      for (int side = 0; side < 2; ++side) {
        Vec p = side == 0 ? multiply(a, ei, ib[r]) : multiply(a, ib[r], ei);
        if (!ideal.contains(p))
          throw NotAnIdeal("subspace is not an ideal: " + std::string(side == 0 ? "e" : "u") +
                           std::to_string(side == 0 ? i + 1 : r + 1) + " * " +
                           std::string(side == 0 ? "u" : "e") + std::to_string(side == 0 ? r + 1 : i + 1) +
                           " leaves it (u = ideal basis vector)");
      }
    }
  }
  std::vector<bool> piv(n, false);
  for (auto p : ideal.pivots()) piv[p] = true;
  std::vector<std::size_t> comp;
  for (std::size_t i = 0; i < n; ++i)
    if (!piv[i]) comp.push_back(i);
  Algebra q(a.name() + "/I", comp.size(), a.field());
  q.set_delta(a.delta());
  for (std::size_t x = 0; x < comp.size(); ++x)
    for (std::size_t y = 0; y < comp.size(); ++y) {
      Vec coords = quotient_coordinates(ideal, basis_product(a, comp[x], comp[y]));
      for (std::size_t k = 0; k < comp.size(); ++k)
        if (!coords[k].is_zero()) q.set(x, y, k, coords[k]);
    }
  if (!a.basis_labels().empty()) {
    std::vector<std::string> labels;
    for (auto i : comp) labels.push_back(a.basis_labels().at(i));
    q.set_basis_labels(labels);
  }
  return q;
}

GeneratedSubalgebra subalgebra_generated(const Algebra& a, const std::vector<Vec>& gens) {
  const std::size_t n = a.dim();
  const Field f = a.field();
  std::vector<Vec> basis;
  std::vector<std::size_t> degree;
  Subspace span = Subspace::zero(n, f);
  auto try_add = [&](const Vec& v, std::size_t d) {
    if (span.contains(v)) return;
    basis.push_back(v);
    degree.push_back(d);
    span = span + Subspace::span({v}, n, f);
  };
  for (const auto& g : gens) try_add(g, 1);
  for (std::size_t d = 2;; ++d) {
    std::size_t maxdeg = 0;
    for (auto x : degree) maxdeg = std::max(maxdeg, x);
    if (d > 2 * maxdeg) break;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = 0; j < basis.size(); ++j)
        if (degree[i] + degree[j] == d) try_add(multiply(a, basis[i], basis[j]), d);
  }
  GeneratedSubalgebra out;
  out.space = span;
  out.adapted_basis = basis;
  const std::size_t m = basis.size();
  out.table = Algebra(a.name() + "<gens>", m, f);
  if (m > 0) {
    ExactMatrix bm = ExactMatrix::from_rows(basis, n, f);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        auto coeffs = span_membership(bm, multiply(a, basis[i], basis[j]));
        if (!coeffs) throw std::logic_error("generated subspace not closed");
        for (std::size_t k = 0; k < m; ++k)
          if (!(*coeffs)[k].is_zero()) out.table.set(i, j, k, (*coeffs)[k]);
      }
  }
  return out;
}

std::size_t generating_length(const Algebra& a, const std::vector<Vec>& gens) {
  const std::size_t n = a.dim();
  const Field f = a.field();
  if (!subalgebra_generated(a, gens).space.is_whole())
    throw NotGenerating("the given set does not generate the algebra");
  std::vector<Subspace> p{Subspace(), Subspace::span(gens, n, f)};
  Subspace cumulative = p[1];
  for (std::size_t k = 1;; ++k) {
    if (cumulative.is_whole()) return k;
    if (k > 4096) throw std::logic_error("length search exceeded its cap");
    Subspace next = Subspace::zero(n, f);
    for (std::size_t j = 1; j <= k; ++j) next = next + subspace_product(a, p[j], p[k + 1 - j]);
    p.push_back(next);
    cumulative = cumulative + next;
  }
}

std::size_t derivation_dim(const Algebra& a) {
  const std::size_t n = a.dim();
  if (n == 0) return 0;
  const Field f = a.field();
  // unknown d(k,l) = coefficient of e_k in D(e_l), column k*n + l
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec r = zero_vec(n * n, f);
        for (std::size_t m = 0; m < n; ++m) {
          if (!a.c(i, j, m).is_zero()) r[k * n + m] += a.c(i, j, m);
          if (!a.c(m, j, k).is_zero()) r[m * n + i] -= a.c(m, j, k);
          if (!a.c(i, m, k).is_zero()) r[m * n + j] -= a.c(i, m, k);
        }
        if (!is_zero_vec(r)) rows.push_back(std::move(r));
      }
  if (rows.empty()) return n * n;
  return n * n - rank(ExactMatrix::from_rows(rows, n * n, f));
}

Fingerprint fingerprint(const Algebra& a) {
  const std::size_t n = a.dim();
  const Field f = a.field();
  Fingerprint fp;
  fp.dim = n;
  auto lc = series(a, SeriesKind::LowerCentral);
  auto dv = series(a, SeriesKind::Derived);
  fp.lower_central_dims = lc.dims();
  fp.derived_dims = dv.dims();
  fp.nilpotency_index = lc.index;
  fp.solvability_index = dv.index;
  fp.ann_left = annihilator(a, Side::Left).dim();
  fp.ann_right = annihilator(a, Side::Right).dim();
  fp.ann = annihilator(a, Side::TwoSided).dim();
  fp.commutative = fp.anticommutative = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (a.c(i, j, k) != a.c(j, i, k)) fp.commutative = false;
        if (a.c(i, j, k) != -a.c(j, i, k)) fp.anticommutative = false;
      }
  std::vector<Vec> squares;
  for (std::size_t i = 0; i < n; ++i) {
    Vec ei = unit_vec(n, i, f);
    Vec sq = multiply(a, ei, ei);
    if (sq == ei) fp.basis_idempotent = true;
    squares.push_back(sq);
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec s = vec_add(ei, unit_vec(n, j, f));
      squares.push_back(multiply(a, s, s));
    }
  }
  fp.square_span = Subspace::span(squares, n, f).dim();
  fp.derivations = derivation_dim(a);
  return fp;
}

}  // namespace deltaforge
