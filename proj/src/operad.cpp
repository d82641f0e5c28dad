#include "deltaforge/operad.hpp"

#include <numeric>

#include "deltaforge/errors.hpp"

namespace deltaforge {

namespace {

const std::vector<Op> kPlain{Op::Mul};

bool s3_closed(const ConsequenceSpace& cs) {
  std::vector<int> p{0, 1, 2};
  for (const auto& row : cs.relations.basis_vectors()) {
    auto e = cs.space.from_vec(row);
    std::vector<int> q = p;
    do {
      if (!cs.relations.contains(cs.space.to_vec(e.relabel(q), cs.field))) return false;
    } while (std::next_permutation(q.begin(), q.end()));
  }
  return true;
}

struct Named {
  std::string name;
  std::vector<std::string> ids;
};

// candidate varieties in a fixed order; first match wins
std::vector<Named> candidates() {
  std::vector<Named> out{{"free", {}}, {"aar", {"antiassociative", "anti_right_commutative"}}};
  for (const auto& id : identity_registry()) {
    if (id.degree() > 3 || id.degree() < 2) continue;
    if (id.signature != std::vector<Op>{Op::Mul}) continue;
    out.push_back({id.name, {id.name}});
  }
  return out;
}

}  // namespace

QuadraticPresentation QuadraticPresentation::from_identities(const std::string& name, const std::vector<IdentityDef>& ids) {
  QuadraticPresentation p;
  p.name = name;
  p.rel = consequence_space(ids, 3, kPlain);
  return p;
}

QuadraticPresentation QuadraticPresentation::from_relations(const std::string& name, const Subspace& relations) {
  QuadraticPresentation p;
  p.name = name;
  p.rel.space = MonomialSpace(3, kPlain);
  if (relations.ambient_dim() != p.rel.space.size())
    throw InvalidPresentation("relation space must live in the 12-dim degree-3 space");
  p.rel.field = relations.field();
  p.rel.relations = relations;
  if (!s3_closed(p.rel)) throw InvalidPresentation("relations of '" + name + "' are not closed under relabeling");
  for (const auto& row : relations.basis_vectors()) p.rel.spanning.push_back({"relation", p.rel.space.from_vec(row)});
  return p;
}

QuadraticPresentation QuadraticPresentation::specialize(const Rational& delta) const {
  if (rel.field == Field::Q) return *this;
  return from_relations(name + "@" + delta.str(), rel.relations.specialize(delta));
}

DualReport dual_via_tensor_jacobi(const QuadraticPresentation& p, std::optional<Rational> delta) {
  const auto& space = p.rel.space;
  const Field f = p.rel.field;
  const std::size_t n = space.size();

  // Jacobiator of (a⊗x)(b⊗y) = ab⊗x•y under the commutator: every degree-3
  // monomial shows up once, with the same word on both sides
  std::vector<FieldElement> sign(n, FieldElement::zero(f));
  const int cyc[3][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  auto L = [](int v) { return Monomial::leaf(v); };
  for (const auto& c : cyc) {
    const int u = c[0], v = c[1], w = c[2];
    auto put = [&](const Monomial& m, int s) { sign[space.index(m)] += FieldElement::from(Rational(s), f); };
    put(Monomial::node(Op::Mul, Monomial::node(Op::Mul, L(u), L(v)), L(w)), 1);
    put(Monomial::node(Op::Mul, Monomial::node(Op::Mul, L(v), L(u)), L(w)), -1);
    put(Monomial::node(Op::Mul, L(w), Monomial::node(Op::Mul, L(u), L(v))), -1);
    put(Monomial::node(Op::Mul, L(w), Monomial::node(Op::Mul, L(v), L(u))), 1);
  }

  // A side: normal form of each word modulo the relations
  std::vector<Vec> nf(n);
  for (std::size_t m = 0; m < n; ++m)
    nf[m] = p.rel.relations.reduce(unit_vec(n, m, f));

  std::vector<bool> pivot(n, false);
  for (auto c : p.rel.relations.pivots()) pivot[c] = true;

  DualReport rep;
  rep.presentation = p.name;
  rep.field = f;
  std::vector<Vec> dual_rows;
  for (std::size_t word = 0; word < n; ++word) {
    if (pivot[word]) continue;
    Vec b(n, FieldElement::zero(f));
    for (std::size_t m = 0; m < n; ++m)
      if (!nf[m][word].is_zero()) b[m] = sign[m] * nf[m][word];
    dual_rows.push_back(b);
    rep.reduced_jacobiator.push_back({space.basis()[word], space.from_vec(b).with_ops(Op::Mul, Op::Bullet)});
  }
  rep.dual_relations = Subspace::span(dual_rows, n, f);
  if (rep.dual_relations.dim() + p.rel.relations.dim() != n)
    throw InvalidPresentation("surviving A-side words of '" + p.name + "' are dependent; dual would be wrong");
  rep.matched_variety = match_variety(rep.dual_relations, delta);
  return rep;
}

QuadraticPresentation dual_presentation(const QuadraticPresentation& p) {
  auto rep = dual_via_tensor_jacobi(p);
  return QuadraticPresentation::from_relations(p.name + "!", rep.dual_relations);
}

std::optional<std::string> match_variety(const Subspace& relations, std::optional<Rational> delta) {
  if (relations.ambient_dim() != 12) throw InvalidPresentation("match_variety expects the 12-dim degree-3 space");
  const Field f = relations.field();
  for (const auto& c : candidates()) {
    std::vector<IdentityDef> ids;
    bool has_delta = false;
    for (const auto& n : c.ids) {
      ids.push_back(lookup_identity(n));
      has_delta = has_delta || ids.back().has_delta();
    }
    // a Q(δ) span is only compared with δ-families; Q spans with constant varieties,
    // or with specialized families when a δ is supplied
    if (f == Field::QDelta) {
      if (!has_delta) continue;
    } else if (has_delta) {
      if (!delta) continue;
      bool forbidden = false;
      for (auto& d : ids) {
        for (const auto& c0 : d.delta_constraints) forbidden = forbidden || c0 == *delta;
        d = d.specialize(*delta);
      }
      if (forbidden) continue;
    }
    auto cs = consequence_space(ids, 3, kPlain, f);
    if (cs.relations == relations) return has_delta && f == Field::Q ? c.name + "@" + delta->str() : c.name;
  }
  return std::nullopt;
}

ConsequenceCertificate jj_admissibility_bridge() {
  auto r = implies({lookup_identity("anti_right_alternative")}, lookup_identity("jj_admissible_sum"));
  if (!r.holds) throw PreconditionFailed("anti-right-alternative does not imply the Jacobi-Jordan admissibility sum");
  return *r.certificate;
}

}  // namespace deltaforge
