#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deltaforge/consequence.hpp"

namespace deltaforge {

// binary quadratic presentation: an S3-closed relation space in the 12-dim
// degree-3 space of one product
struct QuadraticPresentation {
  std::string name;
  ConsequenceSpace rel;

  static QuadraticPresentation from_identities(const std::string& name, const std::vector<IdentityDef>& ids);
  // throws InvalidPresentation when the span is not closed under relabeling
  static QuadraticPresentation from_relations(const std::string& name, const Subspace& relations);
  QuadraticPresentation specialize(const Rational& delta) const;
};

struct JacobiatorGroup {
  Monomial a_word;               // surviving normal word on the A side
  MultilinearElement b_side;     // attached B element, written with the dual product
};

struct DualReport {
  std::string presentation;
  std::vector<JacobiatorGroup> reduced_jacobiator;
  Subspace dual_relations;  // in the plain-product space, for comparison with the registry
  std::optional<std::string> matched_variety;
  Field field = Field::Q;
};

DualReport dual_via_tensor_jacobi(const QuadraticPresentation& p, std::optional<Rational> delta = std::nullopt);
QuadraticPresentation dual_presentation(const QuadraticPresentation& p);

// named degree-3 varieties of the plain product: registry entries plus "free" and "aar".
// With `delta`, a Q span is also compared against δ-families specialized there.
std::optional<std::string> match_variety(const Subspace& relations, std::optional<Rational> delta = std::nullopt);

// anti-right-alternative implies the Jacobi-Jordan admissibility sum
ConsequenceCertificate jj_admissibility_bridge();

}  // namespace deltaforge
