#include "deltaforge/identities.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <stdexcept>

#include "deltaforge/errors.hpp"

namespace deltaforge {

// ---- IdentityDef ------------------------------------------------------------

int IdentityDef::degree() const {
  int d = 0;
  for (const auto& c : components) d = std::max(d, c.degree());
  return d;
}

IdentityDef make_identity(std::string name, std::string description, std::vector<MultilinearElement> components) {
  IdentityDef id;
  id.name = std::move(name);
  id.description = std::move(description);
  bool any_delta = false;
  std::set<Rational> roots;
  std::set<Op> sig;
  for (const auto& c : components) {
    if (c.is_zero()) throw InvalidPresentation("identity '" + id.name + "' has a zero component");
    for (const auto& [m, x] : c.terms()) {
      for (Op o : m.ops()) sig.insert(o);
      if (x.field() == Field::QDelta && !x.qd().is_constant()) {
        any_delta = true;
        for (const auto& r : denominator_roots(x.qd())) roots.insert(r);
      }
    }
  }
  id.field = any_delta ? Field::QDelta : Field::Q;
  for (auto& c : components) {
    if (id.field == Field::Q && c.field() == Field::QDelta) {
      MultilinearElement q(Field::Q);
      for (const auto& [m, x] : c.terms()) q.add(m, FieldElement(x.qd().constant_value()));
      c = q;
    } else {
      c = c.to(id.field);
    }
  }
  id.components = std::move(components);
  id.signature.assign(sig.begin(), sig.end());
  id.delta_constraints.assign(roots.begin(), roots.end());
  return id;
}

IdentityDef IdentityDef::specialize(const Rational& delta) const {
  if (std::find(delta_constraints.begin(), delta_constraints.end(), delta) != delta_constraints.end())
    throw ForbiddenDelta("identity '" + name + "' is undefined at delta = " + delta.str());
  std::vector<MultilinearElement> cs;
  for (const auto& c : components) {
    MultilinearElement s = c.specialize(delta);
    if (s.is_zero()) continue;  // a component may vanish at special values (e.g. δ = 0 terms)
    cs.push_back(s);
  }
  if (cs.empty()) cs.push_back(MultilinearElement(Field::Q));
  IdentityDef out;
  out.name = name;
  out.description = description;
  out.field = Field::Q;
  out.components = std::move(cs);
  std::set<Op> sig;
  for (const auto& c : out.components)
    for (const auto& [m, x] : c.terms())
      for (Op o : m.ops()) sig.insert(o);
  out.signature.assign(sig.begin(), sig.end());
  return out;
}

IdentityDef IdentityDef::substitute_delta(const DeltaRational& f, const std::string& new_name) const {
  std::vector<MultilinearElement> cs;
  for (const auto& c : components) cs.push_back(c.compose_delta(f));
  return make_identity(new_name, description + " (parameter substituted)", cs);
}

IdentityDef IdentityDef::renamed(const std::string& n) const {
  IdentityDef o = *this;
  o.name = n;
  return o;
}

std::string canonical_identity_name(const std::string& name) {
  std::string s = name;
  std::replace(s.begin(), s.end(), '-', '_');
  return s;
}

std::string display_name(const std::string& name) {
  std::string s = name;
  std::replace(s.begin(), s.end(), '_', '-');
  return s;
}

// ---- registry ---------------------------------------------------------------

namespace {

using ME = MultilinearElement;

FieldElement q(long p, long r = 1) { return FieldElement(Rational(p, r)); }
FieldElement dd() { return FieldElement::delta(); }
FieldElement dpow(int k) {
  DeltaRational x(1);
  for (int i = 0; i < k; ++i) x *= DeltaRational::delta();
  for (int i = 0; i > k; --i) x /= DeltaRational::delta();
  return FieldElement(x);
}

ME E(std::initializer_list<std::pair<FieldElement, const char*>> ts) {
  ME e(Field::Q);
  for (const auto& [c, m] : ts) e.add(m, c);
  return e;
}

Monomial lv(int i) { return Monomial::leaf(i); }
Monomial mul(const Monomial& a, const Monomial& b) { return Monomial::node(Op::Mul, a, b); }

// (ab)c - g a(bc) on variables a, b, c
ME assoc(int a, int b, int c, const FieldElement& g) {
  ME e(Field::Q);
  e.add(mul(mul(lv(a), lv(b)), lv(c)), q(1));
  e.add(mul(lv(a), mul(lv(b), lv(c))), -g);
  return e;
}

const std::array<std::array<int, 3>, 6>& perms3() {
  static const std::array<std::array<int, 3>, 6> p{{{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
  return p;
}

int perm_sign(const std::vector<int>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

ME perm_sum(const ME& e, bool alternating) {
  ME out(e.field());
  for (const auto& p : perms3()) {
    std::vector<int> v(p.begin(), p.end());
    out += e.relabel(v).scaled(q(alternating ? perm_sign(v) : 1));
  }
  return out;
}

Monomial br(const Monomial& a, const Monomial& b) { return Monomial::node(Op::Bracket, a, b); }

ME bracket_recipe(const FieldElement& d) {
  ME r(Field::Q);
  r.add(mul(lv(0), lv(1)), q(1));
  r.add(mul(lv(1), lv(0)), -d);
  return r;
}

std::vector<IdentityDef> build_registry() {
  std::vector<IdentityDef> R;
  const FieldElement d = dd();
  auto add = [&](const char* n, const char* desc, std::vector<ME> cs) { R.push_back(make_identity(n, desc, std::move(cs))); };

  const ME anticomm = E({{q(1), "xy"}, {q(1), "yx"}});
  const ME comm = E({{q(1), "xy"}, {q(-1), "yx"}});
  const ME right_leib = E({{q(1), "(xy)z"}, {-d, "(xz)y"}, {-d, "x(yz)"}});
  const ME left_leib = E({{q(1), "x(yz)"}, {-d, "(xy)z"}, {-d, "y(xz)"}});
  const ME jacobi = E({{q(1), "(xy)z"}, {q(1), "(yz)x"}, {q(1), "(zx)y"}});

  add("delta_lie", "anticommutative with (xy)z = d((xz)y + x(yz))", {anticomm, right_leib});
  add("delta_leibniz_right", "(xy)z = d((xz)y + x(yz))", {right_leib});
  add("delta_leibniz_left", "x(yz) = d((xy)z + y(xz))", {left_leib});
  add("anti_leibniz_right", "(xy)z = -(xz)y - x(yz)", {E({{q(1), "(xy)z"}, {q(1), "(xz)y"}, {q(1), "x(yz)"}})});
  add("anti_leibniz_left", "x(yz) = -(xy)z - y(xz)", {E({{q(1), "x(yz)"}, {q(1), "(xy)z"}, {q(1), "y(xz)"}})});
  add("delta_zinbiel", "x(yz) = d((xy)z - x(zy))", {E({{q(1), "x(yz)"}, {-d, "(xy)z"}, {d, "x(zy)"}})});
  add("anti_zinbiel", "x(yz) = -(xy)z + x(zy)", {E({{q(1), "x(yz)"}, {q(1), "(xy)z"}, {q(-1), "x(zy)"}})});
  add("antiassociative", "(xy)z = -x(yz)", {assoc(0, 1, 2, q(-1))});
  add("anti_right_commutative", "(xy)z = -(xz)y", {E({{q(1), "(xy)z"}, {q(1), "(xz)y"}})});
  add("delta_associative", "(xy)z = d x(yz)", {assoc(0, 1, 2, d)});
  add("associative", "(xy)z = x(yz)", {assoc(0, 1, 2, q(1))});
  add("commutative", "xy = yx", {comm});
  add("anticommutative", "xy = -yx", {anticomm});
  add("two_step_nilpotent", "all products of three elements vanish", {E({{q(1), "(xy)z"}}), E({{q(1), "x(yz)"}})});
  add("metabelian_product", "(xy)(zt) = 0", {E({{q(1), "(xy)(zt)"}})});
  add("jacobi", "(xy)z + (yz)x + (zx)y = 0", {jacobi});
  add("jacobi_jordan", "commutative and Jacobi", {comm, jacobi});
  add("jj_admissible_sum", "sum over S3 of the (-1)-associators", {perm_sum(assoc(0, 1, 2, q(-1)), false)});
  add("lie_admissible", "the commutator satisfies Jacobi",
      {perm_sum(assoc(0, 1, 2, q(1)), true)});
  add("malcev_left_combs", "alternating sum of left combs", {perm_sum(E({{q(1), "(xy)z"}}), true)});
  add("malcev_right_combs", "alternating sum of right combs", {perm_sum(E({{q(1), "x(yz)"}}), true)});
  add("gamma_right_symmetric", "(x,y,z)_g = (x,z,y)_g with g the parameter",
      {assoc(0, 1, 2, d) - assoc(0, 2, 1, d)});

  // a = x, b = y, x = z, y = t in Kantor's identity
  auto conservative = [&](const char* ab, const char* abx_y, const char* x_aby) {
    ME e = E({{q(1), "y(x(zt))"},
              {q(-1), "y((xz)t)"},
              {q(-1), "y(z(xt))"},
              {q(-1), "x((yz)t)"},
              {q(1), "(x(yz))t"},
              {q(1), "(yz)(xt)"},
              {q(-1), "x(z(yt))"},
              {q(1), "(xz)(yt)"},
              {q(1), "z(x(yt))"}});
    e.add(std::string("(") + ab + ")(zt)", q(1));
    e.add(abx_y, q(-1));
    e.add(x_aby, q(-1));
    return e;
  };
  add("conservative_left", "Kantor's left conservative identity with the extra product equal to the product",
      {conservative("xy", "((xy)z)t", "z((xy)t)")});
  add("conservative_left_star", "Kantor's left conservative identity with a separate extra product",
      {conservative("x*y", "((x*y)z)t", "z((x*y)t)")});

  const FieldElement d2 = dpow(2), dinv = dpow(-1);
  ME sla1 = assoc(0, 1, 2, d) + assoc(2, 0, 1, dinv).scaled(d2) + assoc(1, 2, 0, d).scaled(d2) -
            (assoc(1, 0, 2, d) + assoc(0, 2, 1, d) + assoc(2, 1, 0, dinv).scaled(d2)).scaled(d);
  ME sla2 = assoc(0, 1, 2, d) + assoc(2, 0, 1, dinv) + assoc(1, 2, 0, dinv).scaled(d2) -
            (assoc(1, 0, 2, d) + assoc(0, 2, 1, dinv) + assoc(2, 1, 0, dinv)).scaled(d);
  add("sla_identity_1", "first associator identity of symmetric d-Leibniz admissible algebras", {sla1});
  add("sla_identity_2", "second associator identity of symmetric d-Leibniz admissible algebras", {sla2});

  ME bd1 = E({{q(1), "x(yz)"}, {-d, "x(zy)"}}) -
           E({{q(1), "(xy)z"}, {-d, "z(xy)"}, {q(1), "y(xz)"}, {-d, "(xz)y"}}).scaled(d);
  ME bd2 = E({{q(1), "(yz)x"}, {-d, "(zy)x"}}) -
           E({{q(1), "(yx)z"}, {-d, "z(yx)"}, {q(1), "y(zx)"}, {-d, "(zx)y"}}).scaled(d);
  add("bd_identity_1", "left multiplications are d-derivations of the d-commutator", {bd1});
  add("bd_identity_2", "right multiplications are d-derivations of the d-commutator", {bd2});
  add("anti_right_alternative", "(x,y,z)_{-1} = -(x,z,y)_{-1}", {assoc(0, 1, 2, q(-1)) + assoc(0, 2, 1, q(-1))});

  add("third_power_right", "(xx)x = 0, linearized", {linearize(E({{q(1), "(xx)x"}}))});
  add("third_power_left", "x(xx) = 0, linearized", {linearize(E({{q(1), "x(xx)"}}))});
  add("albert_fourth", "(xx)(xx) = ((xx)x)x, linearized",
      {linearize(E({{q(1), "(xx)(xx)"}, {q(-1), "((xx)x)x"}}))});

  // extras used by the theorem suite
  add("left_comb4_zero", "((xy)z)t = 0", {E({{q(1), "((xy)z)t"}})});
  add("symmetric_delta_leibniz", "left and right d-Leibniz", {right_leib, left_leib});
  add("delta_bd", "d-biderivation type: both bd identities", {bd1, bd2});

  // symmetric d-Leibniz identities of the d-commutator, expanded
  {
    const Monomial X = lv(0), Y = lv(1), Z = lv(2);
    ME rb(Field::Q), lb(Field::Q);
    rb.add(br(br(X, Y), Z), q(1));
    rb.add(br(br(X, Z), Y), -d);
    rb.add(br(X, br(Y, Z)), -d);
    lb.add(br(X, br(Y, Z)), q(1));
    lb.add(br(br(X, Y), Z), -d);
    lb.add(br(Y, br(X, Z)), -d);
    ME rec = bracket_recipe(d);
    add("sla", "the d-commutator is a symmetric d-Leibniz algebra", {rewrite_ops(rb, Op::Bracket, rec), rewrite_ops(lb, Op::Bracket, rec)});
  }

  // dialgebra systems; < is the left product, > the right one
  add("delta_lie_di", "di-identities of d-Lie dialgebras",
      {E({{q(1), "x>y"}, {q(1), "y<x"}}),
       E({{q(1), "x<(y>z)"}, {q(-1), "x<(y<z)"}}),
       E({{q(1), "(x>y)>z"}, {q(-1), "(x<y)>z"}}),
       E({{q(1), "x<(y<z)"}, {-d, "(x<y)<z"}, {-d, "y>(x<z)"}}),
       E({{q(1), "x>(y<z)"}, {-d, "(x>y)<z"}, {-d, "y<(x<z)"}}),
       E({{q(1), "x>(y>z)"}, {-d, "(x>y)>z"}, {-d, "y>(x>z)"}})});
  add("delta_assoc_di", "di-identities of d-associative dialgebras",
      {E({{q(1), "x<(y>z)"}, {q(-1), "x<(y<z)"}}),
       E({{q(1), "(x>y)>z"}, {q(-1), "(x<y)>z"}}),
       E({{q(1), "(x<y)<z"}, {-d, "x<(y<z)"}}),
       E({{q(1), "(x>y)>z"}, {-d, "x>(y>z)"}}),
       E({{q(1), "(x>y)<z"}, {-d, "x>(y<z)"}})});
  return R;
}

}  // namespace

const std::vector<IdentityDef>& identity_registry() {
  static const std::vector<IdentityDef> reg = build_registry();
  return reg;
}

const IdentityDef& lookup_identity(const std::string& name) {
  const std::string key = canonical_identity_name(name);
  for (const auto& id : identity_registry())
    if (id.name == key) return id;
  throw UnknownName("unknown identity '" + name + "'");
}

// ---- evaluation ---------------------------------------------------------------

namespace {

Which which_of(const Algebra& a, Op op) {
  switch (op) {
    case Op::Mul:
    case Op::Dashv:
    case Op::Bullet: return Which::First;
    case Op::Vdash: return Which::Second;
    case Op::Star: return a.has_second() ? Which::Second : Which::First;
    case Op::Bracket: break;
  }
  throw SignatureMismatch("bracket words must be expanded before evaluation");
}

Vec eval_code(const Algebra& a, const std::vector<std::int8_t>& code, std::size_t& pos, const std::vector<Vec>& args) {
  auto c = code[pos++];
  if (c >= 0) return args.at(static_cast<std::size_t>(c));
  Op op = static_cast<Op>(-1 - c);
  Vec l = eval_code(a, code, pos, args);
  Vec r = eval_code(a, code, pos, args);
  if (is_zero_vec(l) || is_zero_vec(r)) return zero_vec(a.dim(), a.field());
  return multiply(a, l, r, which_of(a, op));
}

bool next_tuple(std::vector<std::size_t>& t, std::size_t n) {
  for (std::size_t i = t.size(); i-- > 0;) {
    if (++t[i] < n) return true;
    t[i] = 0;
  }
  return false;
}

}  // namespace

Vec evaluate_monomial(const Algebra& a, const Monomial& m, const std::vector<Vec>& args) {
  std::size_t pos = 0;
  return eval_code(a, m.code, pos, args);
}

Vec evaluate_element(const Algebra& a, const MultilinearElement& e, const std::vector<Vec>& args) {
  Vec out = zero_vec(a.dim(), a.field());
  for (const auto& [m, c] : e.terms()) {
    Vec v = evaluate_monomial(a, m, args);
    if (!is_zero_vec(v)) vec_axpy(out, c.to(a.field()), v);
  }
  return out;
}

EvalResult evaluate_identity(const Algebra& a0, const IdentityDef& id0, std::optional<Rational> delta) {
  Algebra a = a0;
  IdentityDef id = id0;
  if (delta) {
    if (std::find(id.delta_constraints.begin(), id.delta_constraints.end(), *delta) != id.delta_constraints.end())
      throw ForbiddenDelta("identity '" + id.name + "' is undefined at delta = " + delta->str());
    if (a.field() == Field::QDelta) a = a.specialize(*delta);
    if (id.has_delta()) id = id.specialize(*delta);
  } else if (id.has_delta() && a.field() == Field::Q) {
    throw DeltaRequired("identity '" + id.name + "' depends on delta; give a value or use the all-delta mode");
  }
  const Field f = a.field();
  const std::size_t n = a.dim();
  EvalResult res;
  if (n == 0) return res;
  for (std::size_t ci = 0; ci < id.components.size(); ++ci) {
    const auto& comp = id.components[ci];
    if (comp.is_zero()) continue;
    const auto d = static_cast<std::size_t>(comp.degree());
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < n; ++i) basis.push_back(unit_vec(n, i, f));
    std::vector<std::size_t> t(d, 0);
    do {
      std::vector<Vec> args;
      for (auto i : t) args.push_back(basis[i]);
      Vec v = evaluate_element(a, comp, args);
      if (!is_zero_vec(v)) {
        res.pass = false;
        res.component = ci;
        res.witness = t;
        res.value = v;
        return res;
      }
    } while (next_tuple(t, n));
  }
  return res;
}

bool DeltaSet::contains(const Rational& d) const {
  if (std::find(excluded.begin(), excluded.end(), d) != excluded.end()) return false;
  if (all) return true;
  return std::find(values.begin(), values.end(), d) != values.end();
}

std::string DeltaSet::str() const {
  auto list = [](const std::vector<Rational>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
    return s + "}";
  };
  std::string s = all ? "all" : list(values);
  if (nonrational) s += " + nonrational roots";
  if (all && !excluded.empty()) s += " except " + list(excluded);
  return s;
}

DeltaSet evaluate_identity_all_delta(const Algebra& a, const IdentityDef& id) {
  if (a.field() != Field::Q) throw PreconditionFailed("all-delta evaluation needs an algebra over Q");
  DeltaSet out;
  out.excluded = id.delta_constraints;
  if (!id.has_delta()) {
    out.all = evaluate_identity(a, id).pass;
    return out;
  }
  const std::size_t n = a.dim();
  DeltaPoly g;  // gcd of every numerator seen so far
  bool settled = false;  // g is a nonzero constant: no δ works
  for (const auto& comp : id.components) {
    // clear denominators: coefficient = p_m / L
    DeltaPoly L(1);
    for (const auto& [m, c] : comp.terms()) {
      const auto& den = c.qd().den();
      L = L * DeltaPoly::divmod(den, DeltaPoly::gcd(L, den)).first;
    }
    std::vector<std::pair<Monomial, DeltaPoly>> scaled;
    for (const auto& [m, c] : comp.terms())
      scaled.emplace_back(m, c.qd().num() * DeltaPoly::divmod(L, c.qd().den()).first);
    const auto d = static_cast<std::size_t>(comp.degree());
    if (n == 0) break;
    std::vector<Vec> basis;
    for (std::size_t i = 0; i < n; ++i) basis.push_back(unit_vec(n, i, Field::Q));
    std::vector<std::size_t> t(d, 0);
    do {
      std::vector<Vec> args;
      for (auto i : t) args.push_back(basis[i]);
      std::vector<DeltaPoly> coord(n);
      for (const auto& [m, p] : scaled) {
        Vec v = evaluate_monomial(a, m, args);
        for (std::size_t k = 0; k < n; ++k)
          if (!v[k].is_zero()) coord[k] += p * v[k].q();
      }
      for (const auto& c : coord)
        if (!c.is_zero()) g = DeltaPoly::gcd(g, c);
      if (!g.is_zero() && g.degree() == 0) settled = true;
    } while (!settled && next_tuple(t, n));
    if (settled) break;
  }
  if (g.is_zero()) {
    out.all = true;
    return out;
  }
  auto rr = rational_roots(g);
  out.nonrational = rr.nonrational_factor;
  for (const auto& r : rr.roots)
    if (std::find(out.excluded.begin(), out.excluded.end(), r) == out.excluded.end()) out.values.push_back(r);
  return out;
}

// ---- linearization ------------------------------------------------------------

MultilinearElement linearize(const MultilinearElement& e) {
  MultilinearElement out(e.field());
  for (const auto& [m, c] : e.terms()) {
    const int d = m.degree();
    std::vector<int> sigma(static_cast<std::size_t>(d));
    std::iota(sigma.begin(), sigma.end(), 0);
    do {
      Monomial w = m;
      std::size_t k = 0;
      for (auto& x : w.code)
        if (x >= 0) {
          if (x != 0) throw std::invalid_argument("linearize expects a one-variable element");
          x = static_cast<std::int8_t>(sigma[k++]);
        }
      out.add(w, c);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
  }
  return out;
}

std::vector<IdentityDef> linearize(const IdentityDef& one_variable) {
  std::vector<IdentityDef> out;
  for (std::size_t i = 0; i < one_variable.components.size(); ++i)
    out.push_back(make_identity(one_variable.name + "_lin" + std::to_string(i + 1), one_variable.description + ", linearized",
                                {linearize(one_variable.components[i])}));
  return out;
}

// ---- mutations and derivations --------------------------------------------------

Algebra mutate_commutator(const Algebra& a0, const FieldElement& delta) {
  Algebra a = delta.field() == Field::QDelta ? a0.to(Field::QDelta) : a0;
  const Field f = a.field();
  const FieldElement dl = delta.to(f);
  const std::size_t n = a.dim();
  Algebra m(a.name() + "^[" + delta.str() + "]", n, f);
  m.set_basis_labels(a.basis_labels());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        FieldElement v = a.c(i, j, k) - dl * a.c(j, i, k);
        if (!v.is_zero()) m.set(i, j, k, v);
      }
  return m;
}

EvalResult check_delta_derivation(const Algebra& a0, const ExactMatrix& phi0, const FieldElement& delta) {
  Field f = a0.field() == Field::QDelta || phi0.field() == Field::QDelta || delta.field() == Field::QDelta
                ? Field::QDelta
                : Field::Q;
  Algebra a = a0.to(f);
  ExactMatrix phi = phi0.to(f);
  FieldElement dl = delta.to(f);
  const std::size_t n = a.dim();
  if (phi.rows() != n || phi.cols() != n) throw std::invalid_argument("derivation matrix does not match the algebra");
  EvalResult res;
  std::vector<Vec> img;
  for (std::size_t i = 0; i < n; ++i) img.push_back(phi.col(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vec lhs = phi.apply(basis_product(a, i, j));
      Vec rhs = vec_add(multiply(a, img[i], unit_vec(n, j, f)), multiply(a, unit_vec(n, i, f), img[j]));
      Vec diff = vec_sub(lhs, vec_scale(rhs, dl));
      if (!is_zero_vec(diff)) {
        res.pass = false;
        res.witness = {i, j};
        res.value = diff;
        return res;
      }
    }
  return res;
}

BdCrossCheck bd_check_via_derivations(const Algebra& a, const Rational& delta) {
  BdCrossCheck out;
  out.by_identities = evaluate_identity(a, lookup_identity("delta_bd"), delta).pass;
  Algebra m = mutate_commutator(a, FieldElement(delta));
  out.by_derivations = true;
  const std::size_t n = a.dim();
  for (std::size_t x = 0; x < n && out.by_derivations; ++x) {
    Vec ex = unit_vec(n, x, a.field());
    for (Side s : {Side::Left, Side::Right})
      if (!check_delta_derivation(m, mult_operator(a, ex, s), FieldElement(delta)).pass) out.by_derivations = false;
  }
  return out;
}

}  // namespace deltaforge
