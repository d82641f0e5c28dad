#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deltaforge/algebra.hpp"
#include "deltaforge/terms.hpp"

namespace deltaforge {

// a named identity; several components when the variety is cut out by more
// than one relation (possibly of different degrees)
struct IdentityDef {
  std::string name;
  std::string description;
  std::vector<Op> signature;
  std::vector<MultilinearElement> components;
  std::vector<Rational> delta_constraints;  // denominator roots of all coefficients
  Field field = Field::Q;

  int degree() const;  // largest component degree
  bool has_delta() const { return field == Field::QDelta; }
  IdentityDef specialize(const Rational& delta) const;
  // substitute the parameter: delta := f(delta)
  IdentityDef substitute_delta(const DeltaRational& f, const std::string& new_name) const;
  IdentityDef renamed(const std::string& n) const;
};

IdentityDef make_identity(std::string name, std::string description, std::vector<MultilinearElement> components);

const std::vector<IdentityDef>& identity_registry();
const IdentityDef& lookup_identity(const std::string& name);  // hyphens or underscores
std::string canonical_identity_name(const std::string& name);  // underscores
std::string display_name(const std::string& name);             // hyphens

// ---- evaluation -------------------------------------------------------------

struct EvalResult {
  bool pass = true;
  std::size_t component = 0;
  std::vector<std::size_t> witness;  // 0-based basis indices
  Vec value;
};

// which tensor each op reads: Mul -> product, Star -> second product if any
// else product, Dashv -> product, Vdash -> second product
Vec evaluate_monomial(const Algebra& a, const Monomial& m, const std::vector<Vec>& args);
Vec evaluate_element(const Algebra& a, const MultilinearElement& e, const std::vector<Vec>& args);

EvalResult evaluate_identity(const Algebra& a, const IdentityDef& id, std::optional<Rational> delta = std::nullopt);

struct DeltaSet {
  bool all = false;                 // every δ except `excluded`
  std::vector<Rational> values;     // when !all
  bool nonrational = false;         // some irrational/complex roots besides `values`
  std::vector<Rational> excluded;   // forbidden by the identity's own coefficients
  bool contains(const Rational& d) const;
  std::string str() const;
  friend bool operator==(const DeltaSet&, const DeltaSet&) = default;
};
DeltaSet evaluate_identity_all_delta(const Algebra& a, const IdentityDef& id);

// full linearization of a one-variable element (all leaves variable 0)
MultilinearElement linearize(const MultilinearElement& e);
std::vector<IdentityDef> linearize(const IdentityDef& one_variable);

Algebra mutate_commutator(const Algebra& a, const FieldElement& delta);

// phi acts on columns: phi(e_j) = column j
EvalResult check_delta_derivation(const Algebra& a, const ExactMatrix& phi, const FieldElement& delta);

struct BdCrossCheck {
  bool by_identities = false;
  bool by_derivations = false;
  bool agree() const { return by_identities == by_derivations; }
};
BdCrossCheck bd_check_via_derivations(const Algebra& a, const Rational& delta);

}  // namespace deltaforge
