#include <doctest.h>

#include "deltaforge/corpus.hpp"
#include "deltaforge/errors.hpp"
#include "deltaforge/operad.hpp"

using namespace deltaforge;

namespace {

using R = Rational;
const IdentityDef& id(const char* n) { return lookup_identity(n); }

QuadraticPresentation pres(const char* name, std::vector<IdentityDef> ids) {
  return QuadraticPresentation::from_identities(name, ids);
}

int perm_sign(std::vector<int> p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

// classical oracle: R! is the orthogonal of R under <m,m> = sgn for (ab)c and -sgn for a(bc)
Subspace pairing_dual(const Subspace& rel) {
  MonomialSpace sp(3, {Op::Mul});
  const Field f = rel.field();
  std::vector<Vec> twisted;
  for (auto v : rel.basis_vectors()) {
    for (std::size_t m = 0; m < sp.size(); ++m) {
      int s = perm_sign(sp.basis()[m].leaves());
      if (sp.basis()[m].right().is_leaf()) s = s;  // (ab)c
      else s = -s;
      v[m] = v[m] * FieldElement::from(R(s), f);
    }
    twisted.push_back(v);
  }
  return Subspace::span(twisted, sp.size(), f).annihilator();
}

// (a⊗x)(b⊗y) = ab⊗xy, then the commutator; checks anticommutativity and Jacobi on basis triples
bool tensor_is_lie(const Algebra& a, const Algebra& b) {
  const std::size_t n = a.dim(), m = b.dim(), N = n * m;
  Algebra t("tensor", N, Field::Q);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < m; ++p)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t q = 0; q < m; ++q)
          for (std::size_t k = 0; k < n; ++k)
            for (std::size_t r = 0; r < m; ++r) {
              auto v = a.c(i, j, k) * b.c(p, q, r) - a.c(j, i, k) * b.c(q, p, r);
              if (!v.is_zero()) t.set(i * m + p, j * m + q, k * m + r, v);
            }
  auto br = [&](const Vec& u, const Vec& v) { return multiply(t, u, v); };
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = 0; k < N; ++k) {
        auto x = unit_vec(N, i, Field::Q), y = unit_vec(N, j, Field::Q), z = unit_vec(N, k, Field::Q);
        auto s = vec_add(vec_add(br(br(x, y), z), br(br(y, z), x)), br(br(z, x), y));
        if (!is_zero_vec(s)) return false;
      }
  return true;
}

std::vector<Algebra> corpus_instances() {
  std::vector<Algebra> out;
  for (const auto& e : corpus())
    for (const auto& p : e.samples()) out.push_back(e.instance(p));
  return out;
}

}  // namespace

TEST_CASE("dual dimensions and the pairing oracle") {
  std::vector<QuadraticPresentation> ps = {
      pres("associative", {id("associative")}),
      pres("leibniz", {id("delta_leibniz_right")}),
      pres("zinbiel", {id("delta_zinbiel")}),
      pres("aar", {id("antiassociative"), id("anti_right_commutative")}),
      pres("anticommutative", {id("anticommutative")}),
      pres("free", {}),
      pres("leibniz@2", {id("delta_leibniz_right").specialize(R(2))}),
  };
  for (const auto& p : ps) {
    auto rep = dual_via_tensor_jacobi(p);
    CHECK_MESSAGE(rep.dual_relations.dim() + p.rel.relations.dim() == 12, p.name);
    CHECK_MESSAGE(rep.dual_relations == pairing_dual(p.rel.relations), p.name);
    CHECK(rep.reduced_jacobiator.size() == rep.dual_relations.dim());
    // double dual gives back the presentation
    CHECK_MESSAGE(dual_presentation(dual_presentation(p)).rel.relations == p.rel.relations, p.name);
  }
}

TEST_CASE("named dualities") {
  CHECK(dual_via_tensor_jacobi(pres("associative", {id("associative")})).matched_variety == "associative");
  CHECK(dual_via_tensor_jacobi(pres("leibniz", {id("delta_leibniz_right")})).matched_variety == "delta_zinbiel");
  CHECK(dual_via_tensor_jacobi(pres("zinbiel", {id("delta_zinbiel")})).matched_variety == "delta_leibniz_right");
  auto aar = dual_via_tensor_jacobi(pres("aar", {id("antiassociative"), id("anti_right_commutative")}));
  CHECK(aar.matched_variety == "anti_right_alternative");
  CHECK(dual_via_tensor_jacobi(pres("ara", {id("anti_right_alternative")})).matched_variety == "aar");
  // magmatic dual: every degree-3 word vanishes
  CHECK(dual_via_tensor_jacobi(pres("free", {})).matched_variety == "two_step_nilpotent");
  CHECK(match_variety(Subspace::zero(12, Field::Q)) == "free");

  auto leib1 = pres("leibniz@1", {id("delta_leibniz_right").specialize(R(1))});
  CHECK(dual_via_tensor_jacobi(leib1).matched_variety == std::nullopt);
  CHECK(dual_via_tensor_jacobi(leib1, R(1)).matched_variety == "delta_zinbiel@1");

  // one surviving group of the aar Jacobiator, written with the dual product
  MultilinearElement g;
  g.add("(y.x).z", FieldElement(R(1))).add("(y.z).x", FieldElement(R(1)));
  g.add("y.(z.x)", FieldElement(R(1))).add("y.(x.z)", FieldElement(R(1)));
  bool found = false;
  for (const auto& grp : aar.reduced_jacobiator)
    found = found || grp.b_side == g || grp.b_side == g.scaled(FieldElement(R(-1)));
  CHECK(found);
}

TEST_CASE("presentations must be relabeling-closed") {
  MonomialSpace sp(3, {Op::Mul});
  auto one = Subspace::span({sp.to_vec(MultilinearElement(Monomial::parse("(xy)z"), FieldElement(R(1))), Field::Q)}, 12, Field::Q);
  CHECK_THROWS_AS(QuadraticPresentation::from_relations("bad", one), InvalidPresentation);
  CHECK_THROWS_AS(QuadraticPresentation::from_relations("bad", Subspace::zero(5, Field::Q)), InvalidPresentation);
  CHECK_NOTHROW(QuadraticPresentation::from_relations("whole", Subspace::whole(12, Field::Q)));
}

TEST_CASE("tensor products with the dual are Lie") {
  auto all = corpus_instances();
  int leib_pairs = 0, aar_pairs = 0, assoc_pairs = 0;
  for (const R& d : {R(1), R(2), R(-1, 2), R(1, 2)}) {
    std::vector<const Algebra*> ls, zs;
    for (const auto& a : all) {
      if (a.dim() > 3) continue;
      if (evaluate_identity(a, id("delta_leibniz_right"), d).pass && !a.product_is_zero()) ls.push_back(&a);
      if (evaluate_identity(a, id("delta_zinbiel"), d).pass && !a.product_is_zero()) zs.push_back(&a);
    }
    for (auto* a : ls)
      for (auto* b : zs) {
        if (a->dim() * b->dim() > 6) continue;
        CHECK_MESSAGE(tensor_is_lie(*a, *b), a->name() << " (x) " << b->name() << " at " << d.str());
        ++leib_pairs;
      }
  }
  std::vector<const Algebra*> aars, aras, assoc;
  for (const auto& a : all) {
    if (a.product_is_zero()) continue;
    if (evaluate_identity(a, id("antiassociative")).pass && evaluate_identity(a, id("anti_right_commutative")).pass)
      aars.push_back(&a);
    if (a.dim() <= 3 && evaluate_identity(a, id("anti_right_alternative")).pass) aras.push_back(&a);
    if (a.dim() <= 3 && evaluate_identity(a, id("associative")).pass) assoc.push_back(&a);
  }
  for (auto* a : aars)
    for (auto* b : aras)
      if (a->dim() * b->dim() <= 9) {
        CHECK_MESSAGE(tensor_is_lie(*a, *b), a->name() << " (x) " << b->name());
        ++aar_pairs;
      }
  for (auto* a : assoc)
    for (auto* b : assoc) {
      if (a->dim() * b->dim() > 6) continue;
      CHECK(tensor_is_lie(*a, *b));
      ++assoc_pairs;
    }
  CHECK(leib_pairs > 0);
  CHECK(aar_pairs > 0);
  CHECK(assoc_pairs > 0);
  MESSAGE("pairs: leibniz/zinbiel " << leib_pairs << ", aar/ara " << aar_pairs << ", assoc " << assoc_pairs);
}

TEST_CASE("Jacobi-Jordan admissibility bridge") {
  auto c = jj_admissibility_bridge();
  CHECK(c.verify(id("jj_admissible_sum")));
  CHECK(c.excluded_deltas.empty());
}
