#include <algorithm>

#include "deltaforge/algebra.hpp"
#include "deltaforge/errors.hpp"
#include "deltaforge/identities.hpp"

namespace deltaforge {

namespace {

MultilinearElement word(std::initializer_list<std::pair<int, const char*>> terms) {
  MultilinearElement e;
  for (const auto& [c, m] : terms) e.add(m, Rational(c));
  return e;
}

// "≡ 0" for a one-variable element, decided on its full linearization
bool vanishes(const Algebra& a, const MultilinearElement& one_var) {
  auto id = make_identity("power_check", "", {linearize(one_var)});
  return evaluate_identity(a, id).pass;
}

}  // namespace

PowerProfile power_profile(const Algebra& a) {
  // characteristic 0 is assumed: linearization recovers the one-variable identity
  // x2x = (xx)x, xx2 = x(xx), x3 := x2x
  const auto x2x = word({{1, "(xx)x"}});
  const auto xx2 = word({{1, "x(xx)"}});
  const auto x2x2 = word({{1, "(xx)(xx)"}});
  const auto x3x = word({{1, "((xx)x)x"}});
  const auto xx3 = word({{1, "x((xx)x)"}});

  PowerProfile p;
  p.nil3 = vanishes(a, x2x) && vanishes(a, xx2);
  p.third_power_symmetric = vanishes(a, x2x - xx2);
  p.albert_pair = p.third_power_symmetric && vanishes(a, x2x2 - x3x);
  p.fourth_powers_zero = vanishes(a, x2x2) && vanishes(a, x3x) && vanishes(a, xx3);
  return p;
}

ZinbielEigenReport zinbiel_eigen_check(const Algebra& z, const Rational& delta) {
  if (delta.is_zero() || delta == Rational(-1))
    throw PreconditionFailed("eigenvalue check needs delta outside {-1, 0}");
  if (z.field() != Field::Q) throw FieldMismatch("eigenvalue check needs an algebra over Q");
  if (!evaluate_identity(z, lookup_identity("delta_zinbiel"), delta).pass)
    throw PreconditionFailed("algebra '" + z.name() + "' is not delta-Zinbiel at delta = " + delta.str());

  const std::size_t n = z.dim();
  const Rational factor = delta / (delta + Rational(1));
  ZinbielEigenReport rep;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec a = unit_vec(n, i, Field::Q);
    const auto eig = rational_eigenpairs(mult_operator(z, a, Side::Left));
    for (const auto& pair : eig.pairs) {
      // the claim is quadratic in v, so try basis vectors of the eigenspace and their pairwise sums
      auto bs = pair.space.basis_vectors();
      std::vector<Vec> cands = bs;
      for (std::size_t s = 0; s < bs.size(); ++s)
        for (std::size_t t = s + 1; t < bs.size(); ++t) cands.push_back(vec_add(bs[s], bs[t]));
      for (const auto& v : cands) {
        const Vec vv = multiply(z, v, v);
        if (is_zero_vec(vv)) {
          ++rep.vacuous;
          continue;
        }
        ++rep.checked;
        const Vec lhs = multiply(z, a, vv);
        const Vec rhs = vec_scale(vv, FieldElement(pair.value * factor));
        if (lhs != rhs) {
          rep.pass = false;
          rep.failures.push_back("e" + std::to_string(i + 1) + ", mu = " + pair.value.str() + ", v = " + vec_str(v));
        }
      }
    }
  }
  return rep;
}

}  // namespace deltaforge
