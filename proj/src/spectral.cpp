#include <stdexcept>

#include "deltaforge/algebra.hpp"
#include "deltaforge/errors.hpp"

namespace deltaforge {

// Faddeev-LeVerrier; exact over Q, so the 1/k divisions are harmless
DeltaPoly characteristic_polynomial(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("characteristic polynomial of a non-square matrix");
  if (m.field() != Field::Q) throw FieldMismatch("eigen computations need a matrix over Q");
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = Rational(1);
  ExactMatrix mk(n, n, Field::Q);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    ExactMatrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next.at(i, i) += FieldElement(c[n - k + 1]);
    mk = next;
    ExactMatrix am = m * mk;
    Rational tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += am.at(i, i).q();
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return DeltaPoly(c);
}

EigenReport rational_eigenpairs(const ExactMatrix& m) {
  EigenReport rep;
  rep.charpoly = characteristic_polynomial(m);
  const std::size_t n = m.rows();
  DeltaPoly rest = rep.charpoly;
  for (const auto& lam : rational_roots(rep.charpoly).roots) {
    Eigenpair ep;
    ep.value = lam;
    DeltaPoly lin(std::vector<Rational>{-lam, Rational(1)});
    for (;;) {
      auto [q, r] = DeltaPoly::divmod(rest, lin);
      if (!r.is_zero()) break;
      rest = q;
      ++ep.multiplicity;
    }
    ExactMatrix shifted = m;
    for (std::size_t i = 0; i < n; ++i) shifted.at(i, i) -= FieldElement(lam);
    ep.space = Subspace::span(kernel(shifted), n, Field::Q);
    rep.pairs.push_back(std::move(ep));
  }
  rep.irrational_count = static_cast<std::size_t>(std::max(rest.degree(), 0));
  return rep;
}

}  // namespace deltaforge
