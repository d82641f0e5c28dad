#include "deltaforge/extensions.hpp"

#include <sstream>

#include "deltaforge/errors.hpp"

namespace deltaforge {

namespace {

Vec eval_word(const Algebra& a, const Monomial& m, const std::vector<std::size_t>& tuple) {
  if (m.is_leaf()) return unit_vec(a.dim(), tuple[static_cast<std::size_t>(m.var())], a.field());
  return multiply(a, eval_word(a, m.left(), tuple), eval_word(a, m.right(), tuple));
}

void check_signature(const IdentityDef& id) {
  for (auto op : id.signature)
    if (op != Op::Mul && op != Op::Bullet && op != Op::Star)
      throw SignatureMismatch("central extensions only carry one product; '" + id.name + "' uses another");
}

}  // namespace

Cocycle Cocycle::zero(std::size_t n, Field f) { return {ExactMatrix(n, n, f)}; }

std::string Cocycle::str() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < omega.rows(); ++i)
    for (std::size_t j = 0; j < omega.cols(); ++j)
      if (!omega.at(i, j).is_zero()) {
        os << (first ? "" : ", ") << "w(e" << i + 1 << ",e" << j + 1 << ")=" << omega.at(i, j).str();
        first = false;
      }
  return first ? "0" : os.str();
}

Algebra central_extension(const Algebra& a, const Cocycle& w) {
  const std::size_t n = a.dim();
  if (w.omega.rows() != n || w.omega.cols() != n) throw PreconditionFailed("cocycle size does not match the algebra");
  const Field f = (a.field() == Field::QDelta || w.omega.field() == Field::QDelta) ? Field::QDelta : Field::Q;
  Algebra e(a.name() + "+c", n + 1, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k)
        if (!a.c(i, j, k).is_zero()) e.set(i, j, k, a.c(i, j, k).to(f));
      if (!w.omega.at(i, j).is_zero()) e.set(i, j, n, w.omega.at(i, j).to(f));
    }
  if (!a.basis_labels().empty()) {
    auto l = a.basis_labels();
    l.push_back("c");
    e.set_basis_labels(l);
  }
  return e;
}

std::vector<Cocycle> solve_cocycles(const Algebra& a, const std::vector<IdentityDef>& ids, std::optional<Rational> delta) {
  const std::size_t n = a.dim();
  const Field f = a.field();
  for (const auto& id : ids) {
    check_signature(id);
    if (id.has_delta() && !delta) throw DeltaRequired("'" + id.name + "' needs a value of delta");
    auto r = evaluate_identity(a, id, delta);
    if (!r.pass) {
      std::ostringstream os;
      os << "base algebra fails " << id.name << " (component " << r.component + 1 << ") at (";
      for (std::size_t i = 0; i < r.witness.size(); ++i) os << (i ? "," : "") << "e" << r.witness[i] + 1;
      os << ")";
      throw BaseFailsIdentities(os.str());
    }
  }

  // c-coordinate of a word is ω(left value, right value): linear in the n² unknowns
  std::vector<Vec> rows;
  for (const auto& id : ids) {
    const auto spec = delta && id.has_delta() ? id.specialize(*delta) : id;
    for (const auto& comp : spec.components) {
      const int d = comp.degree();
      std::vector<std::size_t> t(static_cast<std::size_t>(d), 0);
      while (true) {
        Vec row(n * n, FieldElement::zero(f));
        for (const auto& [m, coeff] : comp.terms()) {
          if (m.is_leaf()) continue;
          Vec l = eval_word(a, m.left(), t), r = eval_word(a, m.right(), t);
          for (std::size_t i = 0; i < n; ++i) {
            if (l[i].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
              if (!r[j].is_zero()) row[i * n + j] += coeff.to(f) * l[i] * r[j];
          }
        }
        if (!is_zero_vec(row)) rows.push_back(row);
        std::size_t p = 0;
        while (p < t.size() && ++t[p] == n) t[p++] = 0;
        if (p == t.size()) break;
      }
    }
  }
  std::vector<Vec> ker;
  if (rows.empty()) {
    for (std::size_t i = 0; i < n * n; ++i) ker.push_back(unit_vec(n * n, i, f));
  } else {
    ker = kernel(ExactMatrix::from_rows(rows, n * n, f));
  }
  std::vector<Cocycle> out;
  for (const auto& v : ker) {
    Cocycle c = Cocycle::zero(n, f);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) c.omega.at(i, j) = v[i * n + j];
    out.push_back(c);
  }
  return out;
}

std::size_t ScanReport::flagged() const {
  std::size_t k = 0;
  for (const auto& e : entries) k += e.non_two_step ? 1 : 0;
  return k;
}

ScanReport extension_nilpotency_scan(const Algebra& a, const std::vector<Cocycle>& basis,
                                     std::optional<std::vector<std::vector<Rational>>> combinations) {
  ScanReport rep;
  const std::size_t b = basis.size();
  std::vector<std::vector<Rational>> combos;
  if (combinations) {
    combos = *combinations;
    rep.grid = std::to_string(combos.size()) + " user combinations";
  } else {
    combos.push_back(std::vector<Rational>(b, Rational(0)));
    for (std::size_t i = 0; i < b; ++i)
      for (int si : {1, -1}) {
        std::vector<Rational> c(b, Rational(0));
        c[i] = Rational(si);
        combos.push_back(c);
        for (std::size_t j = i + 1; j < b; ++j)
          for (int sj : {1, -1}) {
            auto d = c;
            d[j] = Rational(sj);
            combos.push_back(d);
          }
      }
    rep.grid = "0/±1 combinations with at most two nonzero coefficients (" + std::to_string(combos.size()) + ")";
  }
  for (const auto& cf : combos) {
    if (cf.size() != b) throw PreconditionFailed("combination length does not match the cocycle basis");
    Cocycle w = Cocycle::zero(a.dim(), a.field());
    for (std::size_t k = 0; k < b; ++k)
      if (!cf[k].is_zero())
        for (std::size_t i = 0; i < a.dim(); ++i)
          for (std::size_t j = 0; j < a.dim(); ++j)
            w.omega.at(i, j) += FieldElement::from(cf[k], a.field()) * basis[k].omega.at(i, j);
    auto s = series(central_extension(a, w), SeriesKind::LowerCentral);
    ScanEntry e;
    e.coefficients = cf;
    e.lower_central_dims = s.dims();
    e.nilpotency_index = s.index;
    e.non_two_step = !s.index || *s.index > 3;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

CentralSplit split_central(const Algebra& a, std::size_t k) {
  const std::size_t n = a.dim();
  if (k >= n) throw PreconditionFailed("basis index out of range");
  if (!annihilator(a, Side::TwoSided).contains(unit_vec(n, k, a.field())))
    throw PreconditionFailed("e" + std::to_string(k + 1) + " is not central");
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (i != k) keep.push_back(i);
  CentralSplit s{Algebra(a.name() + "/e" + std::to_string(k + 1), n - 1, a.field()), Cocycle::zero(n - 1, a.field())};
  for (std::size_t x = 0; x < keep.size(); ++x)
    for (std::size_t y = 0; y < keep.size(); ++y) {
      for (std::size_t z = 0; z < keep.size(); ++z)
        if (!a.c(keep[x], keep[y], keep[z]).is_zero()) s.base.set(x, y, z, a.c(keep[x], keep[y], keep[z]));
      s.cocycle.omega.at(x, y) = a.c(keep[x], keep[y], k);
    }
  return s;
}

}  // namespace deltaforge
