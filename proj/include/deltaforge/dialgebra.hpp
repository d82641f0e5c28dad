#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "deltaforge/algebra.hpp"
#include "deltaforge/consequence.hpp"
#include "deltaforge/identities.hpp"

namespace deltaforge {

// A dialgebra is an Algebra whose first tensor is ⊣ and second tensor is ⊢.
Algebra make_dialgebra(const std::string& name, std::size_t dim, const std::vector<ProductRule>& left,
                       const std::vector<ProductRule>& right);

enum class DiSystem { DeltaLie, DeltaAssoc };
const char* di_system_name(DiSystem s);
EvalResult check_di_system(const Algebra& d, DiSystem s, const Rational& delta);

enum class DiMutation {
  KpSingle,  // xy := x ⊢ y
  KpLeft,    // xy := x ⊣ y (the opposite of KpSingle up to sign on a δ-Lie dialgebra)
  Bracket,   // [[x,y]] := x ⊣ y - δ y ⊢ x
};
Algebra dialgebra_mutation(const Algebra& d, DiMutation recipe, const Rational& delta = Rational(0));

// inverse of KpSingle: x ⊢ y := xy, x ⊣ y := -yx
Algebra dialgebra_from_single(const Algebra& a);

// both products land in the span of the last `central` basis vectors and
// kill them; with lie_compatible, x ⊢ y = -y ⊣ x
Algebra random_two_step_dialgebra(std::size_t dim, std::size_t central, std::uint64_t seed, bool lie_compatible,
                                  int range = 3);

// (a,b,c) associators of the two products, with parameter g
MultilinearElement di_assoc_left(int a, int b, int c, const FieldElement& g);   // (a⊣b)⊣c - g a⊣(b⊣c)
MultilinearElement di_assoc_right(int a, int b, int c, const FieldElement& g);  // (a⊢b)⊢c - g a⊢(b⊢c)
MultilinearElement di_assoc_cross(int a, int b, int c, const FieldElement& g);  // (a⊢b)⊣c - g a⊢(b⊣c)

struct MutationTheoremReport {
  std::optional<Rational> delta;  // none = generic
  MultilinearElement defect;      // δ-Leibniz defect of the bracket, expanded in ⊣, ⊢
  MultilinearElement expected;    // δ²(z,x,y)^×_{1/δ} - δ³(z,y,x)^⊢_{1/δ}
  MultilinearElement residue;     // normal form of the defect modulo the δ-associative di-system
  bool matches = false;           // defect - expected lies in the relation span
  MultilinearElement condition;   // δ(x,y,z)^⊢_{1/δ} - (x,z,y)^×_{1/δ}; vanishing is the iff-condition
};
MutationTheoremReport mutation_theorem_check(std::optional<Rational> delta = std::nullopt);

// di-identities rewritten to one product via xy := x⊢y = -y⊣x
IdentityDef kp_single_rewrite(const IdentityDef& di);
// same with xy := x⊣y = -y⊢x
IdentityDef kp_left_rewrite(const IdentityDef& di);
// di-identities with both products collapsed to one
IdentityDef collapse_products(const IdentityDef& di);

struct LieDiTheorem {
  ImplicationResult generic;  // rewritten hypotheses imply (xy)z = 0 over Q(δ)
  bool two_step_at_zero = false;
  bool two_step_fails_at_minus_half = false;
  bool two_step_fails_at_one = false;
  // at δ = -1/2, with xy := x⊢y
  bool right_antiassociative = false;
  bool right_anti_right_commutative = false;
  // at δ = -1/2, with xy := x⊣y
  bool left_antiassociative = false;
  bool left_anti_right_commutative = false;
};
LieDiTheorem lie_di_theorem();

struct LieDiBranchCheck {
  bool hypothesis = false;  // D passes delta_lie_di at δ
  bool applicable = false;  // δ is in one of the two branches
  bool conclusion = false;
  std::string branch;
  bool kp_single_conclusion = false;  // the same conclusion read off x⊢y

};
LieDiBranchCheck check_lie_di_branch(const Algebra& d, const Rational& delta);

}  // namespace deltaforge
