#include "deltaforge/dialgebra.hpp"

#include <random>

#include "deltaforge/errors.hpp"

namespace deltaforge {

namespace {

Monomial lv(int i) { return Monomial::leaf(i); }
Monomial nd(Op o, Monomial a, Monomial b) { return Monomial::node(o, std::move(a), std::move(b)); }

MultilinearElement assoc_with(Op outer_left, Op inner_left, Op outer_right, Op inner_right, int a, int b, int c,
                              const FieldElement& g) {
  MultilinearElement e(g.field());
  e.add(nd(outer_left, nd(inner_left, lv(a), lv(b)), lv(c)), FieldElement::one(g.field()));
  e.add(nd(outer_right, lv(a), nd(inner_right, lv(b), lv(c))), -g);
  return e;
}

FieldElement dgen() { return FieldElement::delta(); }

}  // namespace

Algebra make_dialgebra(const std::string& name, std::size_t dim, const std::vector<ProductRule>& left,
                       const std::vector<ProductRule>& right) {
  Algebra d = make_algebra(name, dim, left);
  Algebra r = make_algebra(name, dim, right);
  if (r.field() != d.field()) {
    d = d.to(Field::QDelta);
    r = r.to(Field::QDelta);
  }
  // a second tensor must exist even when ⊢ is zero
  d.set_second(0, 0, 0, FieldElement::zero(d.field()));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t k = 0; k < dim; ++k)
        if (!r.c(i, j, k).is_zero()) d.set_second(i, j, k, r.c(i, j, k));
  return d;
}

const char* di_system_name(DiSystem s) { return s == DiSystem::DeltaLie ? "delta_lie_di" : "delta_assoc_di"; }

EvalResult check_di_system(const Algebra& d, DiSystem s, const Rational& delta) {
  return evaluate_identity(d, lookup_identity(di_system_name(s)), delta);
}

Algebra dialgebra_mutation(const Algebra& d, DiMutation recipe, const Rational& delta) {
  if (!d.has_second()) throw MissingSecondProduct("dialgebra '" + d.name() + "' has no right product");
  const std::size_t n = d.dim();
  const std::string tag = recipe == DiMutation::KpSingle ? "^kp" : recipe == DiMutation::KpLeft ? "^kpl" : "^[" + delta.str() + "]";
  Algebra out(d.name() + tag, n, d.field());
  const FieldElement g = FieldElement::from(delta, d.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        FieldElement v = recipe == DiMutation::KpSingle ? d.c2(i, j, k)
                         : recipe == DiMutation::KpLeft ? d.c(i, j, k)
                                                        : d.c(i, j, k) - g * d.c2(j, i, k);
        if (!v.is_zero()) out.set(i, j, k, v);
      }
  return out;
}

Algebra dialgebra_from_single(const Algebra& a) {
  Algebra d = a;
  d.set_name(a.name() + "^di");
  d.set_second(0, 0, 0, FieldElement::zero(a.field()));
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        d.set_second(i, j, k, a.c(i, j, k));
        d.set(i, j, k, -a.c(j, i, k));
      }
  return d;
}

Algebra random_two_step_dialgebra(std::size_t dim, std::size_t central, std::uint64_t seed, bool lie_compatible,
                                  int range) {
  if (central == 0 || central > dim) throw PreconditionFailed("central part must be nonempty and fit in the algebra");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> v(-range, range);
  Algebra d("random_di_" + std::to_string(seed), dim, Field::Q);
  d.set_second(0, 0, 0, FieldElement::zero(Field::Q));
  const std::size_t top = dim - central;
  for (std::size_t i = 0; i < top; ++i)
    for (std::size_t j = 0; j < top; ++j)
      for (std::size_t k = top; k < dim; ++k) {
        Rational l(v(rng));
        if (!l.is_zero()) d.set(i, j, k, FieldElement(l));
        if (!lie_compatible) {
          Rational r(v(rng));
          if (!r.is_zero()) d.set_second(i, j, k, FieldElement(r));
        }
      }
  if (lie_compatible)
    for (std::size_t i = 0; i < top; ++i)
      for (std::size_t j = 0; j < top; ++j)
        for (std::size_t k = top; k < dim; ++k)
          if (!d.c(j, i, k).is_zero()) d.set_second(i, j, k, -d.c(j, i, k));
  return d;
}

MultilinearElement di_assoc_left(int a, int b, int c, const FieldElement& g) {
  return assoc_with(Op::Dashv, Op::Dashv, Op::Dashv, Op::Dashv, a, b, c, g);
}
MultilinearElement di_assoc_right(int a, int b, int c, const FieldElement& g) {
  return assoc_with(Op::Vdash, Op::Vdash, Op::Vdash, Op::Vdash, a, b, c, g);
}
MultilinearElement di_assoc_cross(int a, int b, int c, const FieldElement& g) {
  return assoc_with(Op::Dashv, Op::Vdash, Op::Vdash, Op::Dashv, a, b, c, g);
}

MutationTheoremReport mutation_theorem_check(std::optional<Rational> delta) {
  if (delta && delta->is_zero()) throw ForbiddenDelta("the mutation theorem needs delta != 0");
  const Field f = delta ? Field::Q : Field::QDelta;
  const FieldElement d = delta ? FieldElement(*delta) : dgen();
  const FieldElement di = d.inverse();

  MutationTheoremReport rep;
  rep.delta = delta;

  // δ-Leibniz defect written with the bracket, then expanded
  MultilinearElement br(f);
  const Monomial X = lv(0), Y = lv(1), Z = lv(2);
  br.add(nd(Op::Bracket, nd(Op::Bracket, X, Y), Z), FieldElement::one(f));
  br.add(nd(Op::Bracket, nd(Op::Bracket, X, Z), Y), -d);
  br.add(nd(Op::Bracket, X, nd(Op::Bracket, Y, Z)), -d);
  rep.defect = mutation_expand(br, BracketRecipe::DialgebraBracket, d);

  rep.expected = di_assoc_cross(2, 0, 1, di).scaled(d * d) - di_assoc_right(2, 1, 0, di).scaled(d * d * d);
  rep.condition = di_assoc_right(0, 1, 2, di).scaled(d) - di_assoc_cross(0, 2, 1, di);

  auto sys = lookup_identity("delta_assoc_di");
  if (delta) sys = sys.specialize(*delta);
  auto cs = consequence_space({sys}, 3, {Op::Dashv, Op::Vdash}, f);
  rep.residue = normal_form(rep.defect, cs);
  auto diff = rep.defect - rep.expected;
  rep.matches = cs.relations.contains(cs.space.to_vec(diff, f));
  return rep;
}

namespace {

IdentityDef one_product(const IdentityDef& di, Op kept, Op swapped, const std::string& suffix) {
  const Field f = di.field;
  MultilinearElement minus_swap(f), keep(f);
  minus_swap.add(nd(Op::Mul, lv(1), lv(0)), -FieldElement::one(f));
  keep.add(nd(Op::Mul, lv(0), lv(1)), FieldElement::one(f));
  std::vector<MultilinearElement> comps;
  for (const auto& c : di.components) {
    auto e = rewrite_ops(rewrite_ops(c, swapped, minus_swap), kept, keep);
    if (!e.is_zero()) comps.push_back(e);
  }
  return make_identity(di.name + suffix, "one-product rewrite of " + di.name, comps);
}

}  // namespace

IdentityDef kp_single_rewrite(const IdentityDef& di) { return one_product(di, Op::Vdash, Op::Dashv, "_kp"); }
IdentityDef kp_left_rewrite(const IdentityDef& di) { return one_product(di, Op::Dashv, Op::Vdash, "_kpl"); }

IdentityDef collapse_products(const IdentityDef& di) {
  std::vector<MultilinearElement> comps;
  for (const auto& c : di.components) {
    auto e = c.with_ops(Op::Dashv, Op::Mul).with_ops(Op::Vdash, Op::Mul);
    if (!e.is_zero()) comps.push_back(e);
  }
  return make_identity(di.name + "_collapsed", "both products of " + di.name + " identified", comps);
}

LieDiTheorem lie_di_theorem() {
  const auto hyp = kp_single_rewrite(lookup_identity("delta_lie_di"));
  LieDiTheorem t;
  t.generic = implies({hyp}, lookup_identity("two_step_nilpotent"));
  const Rational h(-1, 2);
  const auto two = lookup_identity("two_step_nilpotent");
  const auto aa = lookup_identity("antiassociative");
  const auto arc = lookup_identity("anti_right_commutative");
  t.two_step_at_zero = implies_at({hyp}, two, Rational(0)).holds;
  t.two_step_fails_at_minus_half = !implies_at({hyp}, two, h).holds;
  t.two_step_fails_at_one = !implies_at({hyp}, two, Rational(1)).holds;
  t.right_antiassociative = implies_at({hyp}, aa, h).holds;
  t.right_anti_right_commutative = implies_at({hyp}, arc, h).holds;
  const auto left = kp_left_rewrite(lookup_identity("delta_lie_di"));
  t.left_antiassociative = implies_at({left}, aa, h).holds;
  t.left_anti_right_commutative = implies_at({left}, arc, h).holds;
  return t;
}

LieDiBranchCheck check_lie_di_branch(const Algebra& d, const Rational& delta) {
  LieDiBranchCheck c;
  c.hypothesis = check_di_system(d, DiSystem::DeltaLie, delta).pass;
  if (delta.is_zero() || delta == Rational(1)) return c;
  c.applicable = c.hypothesis;
  const auto right = dialgebra_mutation(d, DiMutation::KpSingle);
  if (delta == Rational(-1, 2)) {
    // the aar structure lives on x⊣y; x⊢y is its opposite up to sign
    c.branch = "antiassociative, anti-right-commutative";
    auto aar = [](const Algebra& m) {
      return evaluate_identity(m, lookup_identity("antiassociative")).pass &&
             evaluate_identity(m, lookup_identity("anti_right_commutative")).pass;
    };
    c.conclusion = aar(dialgebra_mutation(d, DiMutation::KpLeft));
    c.kp_single_conclusion = aar(right);
  } else {
    c.branch = "2-step nilpotent";
    c.conclusion = evaluate_identity(right, lookup_identity("two_step_nilpotent")).pass;
    c.kp_single_conclusion = c.conclusion;
  }
  return c;
}

}  // namespace deltaforge
