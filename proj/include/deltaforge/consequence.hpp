#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "deltaforge/algebra.hpp"
#include "deltaforge/identities.hpp"
#include "deltaforge/subspace.hpp"
#include "deltaforge/terms.hpp"

namespace deltaforge {

// multilinear monomials of one degree over a signature. Order: shapes with
// the left comb first, then node labels (lexicographic in signature order),
// then leaf permutations in lexicographic order.
class MonomialSpace {
 public:
  MonomialSpace() = default;
  MonomialSpace(int degree, std::vector<Op> signature);

  int degree() const { return degree_; }
  const std::vector<Op>& signature() const { return sig_; }
  const std::vector<Monomial>& basis() const { return basis_; }
  std::size_t size() const { return basis_.size(); }
  std::size_t index(const Monomial& m) const;  // throws SignatureMismatch if absent

  Vec to_vec(const MultilinearElement& e, Field f) const;
  MultilinearElement from_vec(const Vec& v) const;

 private:
  int degree_ = 0;
  std::vector<Op> sig_;
  std::vector<Monomial> basis_;
  std::map<Monomial, std::size_t> index_;
};

// one element of the T-ideal slice together with how it was obtained
struct Lift {
  std::string description;
  MultilinearElement element;
};

struct ConsequenceSpace {
  MonomialSpace space;
  Field field = Field::Q;
  Subspace relations;
  std::vector<Lift> spanning;  // independent lifts, in the order they raised the rank
};

// the degree-`degree` multilinear slice of the T-ideal generated by hyps
ConsequenceSpace consequence_space(const std::vector<IdentityDef>& hyps, int degree, const std::vector<Op>& signature,
                                   std::optional<Field> field = std::nullopt);

// span of the S_d-orbits of the given elements (no lifting); used for quadratic presentations
Subspace relabel_closure(const MonomialSpace& space, const std::vector<MultilinearElement>& gens, Field f);

struct CertificateTerm {
  std::string lift;
  FieldElement coefficient;
  MultilinearElement element;
};

struct ComponentCertificate {
  std::size_t component = 0;
  std::vector<CertificateTerm> terms;
};

struct ConsequenceCertificate {
  std::string conclusion;
  std::vector<std::string> hypotheses;
  std::vector<ComponentCertificate> parts;
  std::vector<Rational> excluded_deltas;  // denominator roots of the coefficients
  bool nonrational_exclusions = false;    // some denominator has an irreducible factor of degree > 1

  // substitute the combination back and compare with the conclusion, term by term
  bool verify(const IdentityDef& conclusion) const;
};

struct Refutation {
  std::size_t component = 0;
  MonomialSpace space;
  Vec functional;  // kills every relation, not the conclusion
  bool verify(const ConsequenceSpace& cs, const MultilinearElement& conclusion) const;
};

struct ImplicationResult {
  bool holds = false;
  std::optional<ConsequenceCertificate> certificate;
  std::optional<Refutation> refutation;
  Field field = Field::Q;
};

// degree defaults to the conclusion's; every conclusion component is tested at its own degree
ImplicationResult implies(const std::vector<IdentityDef>& hyps, const IdentityDef& conclusion,
                          std::optional<int> degree = std::nullopt, std::optional<std::vector<Op>> signature = std::nullopt);

// same question after substituting a concrete δ everywhere (runs over Q)
ImplicationResult implies_at(const std::vector<IdentityDef>& hyps, const IdentityDef& conclusion, const Rational& delta,
                             std::optional<int> degree = std::nullopt);

// ---- normal forms ------------------------------------------------------------

// monomials for which `eliminate_first` is true are solved for before the rest
MultilinearElement normal_form(const MultilinearElement& e, const ConsequenceSpace& rel,
                               const std::function<bool(const Monomial&)>& eliminate_first = nullptr);

// free antiassociative anti-right-commutative algebra on k generators
class FreeAar {
 public:
  explicit FreeAar(std::size_t k);
  std::size_t generators() const { return k_; }
  // x_i, x_i x_j, x_i (x_j1 x_j2) with j1 < j2
  const std::vector<Monomial>& basis() const { return basis_; }
  // any word (variables may repeat) as a combination of basis words
  MultilinearElement rewrite(const Monomial& word) const;
  const std::map<Monomial, MultilinearElement>& degree3_rules() const { return rules_; }
  // structure constants on basis()
  Algebra algebra() const;

 private:
  std::size_t k_;
  std::vector<Monomial> basis_;
  std::map<Monomial, MultilinearElement> rules_;  // multilinear degree-3 monomial -> normal form
};

bool prefer_aar_elimination(const Monomial& m);       // left combs and a(cb) with c > b
bool prefer_right_comb_elimination(const Monomial& m);  // right combs

// ---- bracket expansion --------------------------------------------------------

enum class BracketRecipe {
  Commutator,        // [u,v] = u v - δ v u in the plain product
  DialgebraBracket,  // [[u,v]] = u ⊣ v - δ v ⊢ u
};
MultilinearElement mutation_expand(const MultilinearElement& bracket_expr, BracketRecipe recipe, const FieldElement& delta);

}  // namespace deltaforge
