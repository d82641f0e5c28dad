#include "deltaforge/consequence.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "deltaforge/errors.hpp"
#include "deltaforge/matrix.hpp"

namespace deltaforge {

namespace {

// planar shapes with d leaves labelled 0..d-1 left to right, all nodes Mul
std::vector<Monomial> shapes(int d, int first_leaf = 0) {
  if (d == 1) return {Monomial::leaf(first_leaf)};
  std::vector<Monomial> out;
  for (int l = d - 1; l >= 1; --l)
    for (const auto& L : shapes(l, first_leaf))
      for (const auto& R : shapes(d - l, first_leaf + l)) out.push_back(Monomial::node(Op::Mul, L, R));
  return out;
}

Monomial with_node_ops(Monomial m, const std::vector<Op>& ops) {
  std::size_t k = 0;
  for (auto& c : m.code)
    if (c < 0) c = static_cast<std::int8_t>(-1 - static_cast<int>(ops[k++]));
  return m;
}

std::vector<std::vector<int>> permutations(int d) {
  std::vector<int> p(d);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::string perm_str(const std::vector<int>& p) {
  const auto& names = default_var_names();
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + names[p[i]];
  return s + ")";
}

MultilinearElement leaf_element(int v) { return MultilinearElement(Monomial::leaf(v), FieldElement(Rational(1))); }

// incremental row echelon form; rows normalized so the pivot is 1
class Echelon {
 public:
  explicit Echelon(std::size_t n) : n_(n), row_of_col_(n, npos) {}
  bool add(Vec v) {
    for (std::size_t c = 0; c < n_; ++c) {
      if (v[c].is_zero()) continue;
      const std::size_t r = row_of_col_[c];
      if (r == npos) {
        const FieldElement inv = v[c].inverse();
        for (std::size_t k = c; k < n_; ++k)
          if (!v[k].is_zero()) v[k] *= inv;
        row_of_col_[c] = rows_.size();
        rows_.push_back(std::move(v));
        return true;
      }
      const FieldElement f = v[c];
      const Vec& row = rows_[r];
      for (std::size_t k = c; k < n_; ++k)
        if (!row[k].is_zero()) v[k] -= f * row[k];
    }
    return false;
  }
  std::size_t rank() const { return rows_.size(); }
  bool full() const { return rows_.size() == n_; }
  const std::vector<Vec>& rows() const { return rows_; }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t n_;
  std::vector<std::size_t> row_of_col_;
  std::vector<Vec> rows_;
};

std::vector<Op> union_signature(const std::vector<IdentityDef>& ids) {
  std::set<Op> s;
  for (const auto& id : ids)
    for (auto op : id.signature) s.insert(op);
  if (s.empty()) s.insert(Op::Mul);
  return {s.begin(), s.end()};
}

void check_signature(const IdentityDef& id, const std::vector<Op>& sig) {
  for (auto op : id.signature)
    if (std::find(sig.begin(), sig.end(), op) == sig.end())
      throw SignatureMismatch("identity '" + id.name + "' uses " + op_name(op) + ", outside the requested signature");
}

// every level of the T-ideal slice from degree 2 to `degree`
std::vector<ConsequenceSpace> levels(const std::vector<IdentityDef>& hyps, int degree, const std::vector<Op>& sig, Field f) {
  for (const auto& h : hyps) check_signature(h, sig);
  std::vector<ConsequenceSpace> out;
  std::vector<Lift> prev;
  for (int k = 2; k <= degree; ++k) {
    ConsequenceSpace cs;
    cs.space = MonomialSpace(k, sig);
    cs.field = f;
    Echelon ech(cs.space.size());
    const auto perms = permutations(k);
    auto offer = [&](const MultilinearElement& e, const std::string& desc) {
      if (ech.full() || e.is_zero()) return;
      for (const auto& p : perms) {
        if (ech.full()) return;
        MultilinearElement r = e.relabel(p);
        if (ech.add(cs.space.to_vec(r, f))) cs.spanning.push_back({desc + " relabel " + perm_str(p), r});
      }
    };
    for (const auto& h : hyps)
      for (std::size_t ci = 0; ci < h.components.size(); ++ci)
        if (h.components[ci].degree() == k) offer(h.components[ci], h.name + "[" + std::to_string(ci + 1) + "]");
    const int fresh = k - 1;
    const auto& names = default_var_names();
    for (const auto& b : prev) {
      for (auto op : sig) {
        for (int i = 0; i < k - 1; ++i) {
          std::vector<Monomial> args;
          for (int v = 0; v < k - 1; ++v) args.push_back(Monomial::leaf(v));
          args[i] = Monomial::node(op, Monomial::leaf(i), Monomial::leaf(fresh));
          offer(b.element.substitute(args), "{" + b.description + "} " + names[i] + ":=" + args[i].str());
          args[i] = Monomial::node(op, Monomial::leaf(fresh), Monomial::leaf(i));
          offer(b.element.substitute(args), "{" + b.description + "} " + names[i] + ":=" + args[i].str());
        }
        offer(MultilinearElement::product(op, b.element, leaf_element(fresh)),
              "{" + b.description + "}" + op_symbol(op) + names[fresh]);
        offer(MultilinearElement::product(op, leaf_element(fresh), b.element),
              names[fresh] + op_symbol(op) + "{" + b.description + "}");
      }
    }
    cs.relations = Subspace::span(ech.rows(), cs.space.size(), f);
    prev = cs.spanning;
    out.push_back(std::move(cs));
  }
  return out;
}

Field field_of(const std::vector<IdentityDef>& ids) {
  for (const auto& id : ids)
    if (id.has_delta()) return Field::QDelta;
  return Field::Q;
}

FieldElement dot(const Vec& a, const Vec& b) {
  FieldElement s = FieldElement::zero(a.empty() ? Field::Q : a[0].field());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].is_zero() && !b[i].is_zero()) s += a[i] * b[i];
  return s;
}

}  // namespace

// ---- MonomialSpace -------------------------------------------------------------

MonomialSpace::MonomialSpace(int degree, std::vector<Op> signature) : degree_(degree), sig_(std::move(signature)) {
  if (degree < 1) throw std::invalid_argument("monomial space needs degree >= 1");
  if (sig_.empty()) throw SignatureMismatch("empty signature");
  const auto perms = permutations(degree);
  const std::size_t nodes = static_cast<std::size_t>(degree - 1);
  std::vector<std::vector<Op>> labellings{{}};
  for (std::size_t i = 0; i < nodes; ++i) {
    std::vector<std::vector<Op>> next;
    for (const auto& l : labellings)
      for (auto op : sig_) {
        auto m = l;
        m.push_back(op);
        next.push_back(std::move(m));
      }
    labellings = std::move(next);
  }
  for (const auto& shape : shapes(degree))
    for (const auto& ops : labellings) {
      const Monomial labelled = with_node_ops(shape, ops);
      for (const auto& p : perms) {
        Monomial m = labelled.relabel(p);
        index_[m] = basis_.size();
        basis_.push_back(std::move(m));
      }
    }
}

std::size_t MonomialSpace::index(const Monomial& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) throw SignatureMismatch("monomial " + m.str() + " is outside the space");
  return it->second;
}

Vec MonomialSpace::to_vec(const MultilinearElement& e, Field f) const {
  Vec v(size(), FieldElement::zero(f));
  for (const auto& [m, c] : e.terms()) v[index(m)] = c.to(f);
  return v;
}

MultilinearElement MonomialSpace::from_vec(const Vec& v) const {
  MultilinearElement e(v.empty() ? Field::Q : v[0].field());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) e.add(basis_[i], v[i]);
  return e;
}

// ---- consequence spaces ----------------------------------------------------------

ConsequenceSpace consequence_space(const std::vector<IdentityDef>& hyps, int degree, const std::vector<Op>& signature,
                                   std::optional<Field> field) {
  const Field f = field.value_or(field_of(hyps));
  if (degree < 2) throw std::invalid_argument("consequence spaces start at degree 2");
  return levels(hyps, degree, signature, f).back();
}

Subspace relabel_closure(const MonomialSpace& space, const std::vector<MultilinearElement>& gens, Field f) {
  Echelon ech(space.size());
  const auto perms = permutations(space.degree());
  for (const auto& g : gens)
    for (const auto& p : perms) ech.add(space.to_vec(g.relabel(p), f));
  return Subspace::span(ech.rows(), space.size(), f);
}

// ---- certificates ------------------------------------------------------------------

bool ConsequenceCertificate::verify(const IdentityDef& conclusion) const {
  for (const auto& part : parts) {
    if (part.component >= conclusion.components.size()) return false;
    const auto& target = conclusion.components[part.component];
    Field f = target.field();
    for (const auto& t : part.terms)
      if (t.coefficient.field() == Field::QDelta || t.element.field() == Field::QDelta) f = Field::QDelta;
    MultilinearElement sum(f);
    for (const auto& t : part.terms) sum += t.element.to(f).scaled(t.coefficient.to(f));
    if (!(sum == target.to(f))) return false;
  }
  // every nonzero component must be covered
  for (std::size_t i = 0; i < conclusion.components.size(); ++i) {
    if (conclusion.components[i].is_zero()) continue;
    bool covered = std::any_of(parts.begin(), parts.end(), [&](const auto& p) { return p.component == i; });
    if (!covered) return false;
  }
  return true;
}

bool Refutation::verify(const ConsequenceSpace& cs, const MultilinearElement& conclusion) const {
  for (const auto& row : cs.relations.basis_vectors())
    if (!dot(functional, row).is_zero()) return false;
  return !dot(functional, cs.space.to_vec(conclusion, cs.field)).is_zero();
}

ImplicationResult implies(const std::vector<IdentityDef>& hyps, const IdentityDef& conclusion, std::optional<int> degree,
                          std::optional<std::vector<Op>> signature) {
  std::vector<IdentityDef> all = hyps;
  all.push_back(conclusion);
  const auto sig = signature.value_or(union_signature(all));
  check_signature(conclusion, sig);
  const Field f = field_of(all);
  const int top = degree.value_or(conclusion.degree());
  if (conclusion.degree() > top) throw std::invalid_argument("conclusion degree exceeds the target degree");
  const auto lv = levels(hyps, top, sig, f);

  ImplicationResult res;
  res.field = f;
  ConsequenceCertificate cert;
  cert.conclusion = conclusion.name;
  for (const auto& h : hyps) cert.hypotheses.push_back(h.name);
  std::set<Rational> excluded;
  for (std::size_t ci = 0; ci < conclusion.components.size(); ++ci) {
    const auto& comp = conclusion.components[ci];
    if (comp.is_zero()) continue;
    const auto& cs = lv[static_cast<std::size_t>(comp.degree() - 2)];
    const Vec target = cs.space.to_vec(comp, f);
    std::optional<Vec> coeffs;
    if (!cs.spanning.empty()) {
      std::vector<Vec> rows;
      for (const auto& l : cs.spanning) rows.push_back(cs.space.to_vec(l.element, f));
      coeffs = span_membership(ExactMatrix::from_rows(rows, cs.space.size(), f), target);
    }
    if (!coeffs) {
      Refutation ref;
      ref.component = ci;
      ref.space = cs.space;
      for (const auto& fn : cs.relations.annihilator().basis_vectors())
        if (!dot(fn, target).is_zero()) {
          ref.functional = fn;
          break;
        }
      res.holds = false;
      res.refutation = std::move(ref);
      return res;
    }
    ComponentCertificate part;
    part.component = ci;
    for (std::size_t i = 0; i < coeffs->size(); ++i) {
      const FieldElement& c = (*coeffs)[i];
      if (c.is_zero()) continue;
      part.terms.push_back({cs.spanning[i].description, c, cs.spanning[i].element});
      if (c.field() == Field::QDelta) {
        auto rr = rational_roots(c.qd().den());
        excluded.insert(rr.roots.begin(), rr.roots.end());
        cert.nonrational_exclusions = cert.nonrational_exclusions || rr.nonrational_factor;
      }
    }
    cert.parts.push_back(std::move(part));
  }
  cert.excluded_deltas.assign(excluded.begin(), excluded.end());
  res.holds = true;
  res.certificate = std::move(cert);
  return res;
}

ImplicationResult implies_at(const std::vector<IdentityDef>& hyps, const IdentityDef& conclusion, const Rational& delta,
                             std::optional<int> degree) {
  auto at = [&](const IdentityDef& id) {
    if (!id.has_delta()) return id;
    if (std::find(id.delta_constraints.begin(), id.delta_constraints.end(), delta) != id.delta_constraints.end())
      throw ForbiddenDelta("identity '" + id.name + "' is undefined at delta = " + delta.str());
    return id.specialize(delta);
  };
  std::vector<IdentityDef> hs;
  for (const auto& h : hyps) hs.push_back(at(h));
  return implies(hs, at(conclusion), degree);
}

// ---- normal forms ----------------------------------------------------------------

MultilinearElement normal_form(const MultilinearElement& e, const ConsequenceSpace& rel,
                               const std::function<bool(const Monomial&)>& eliminate_first) {
  const auto& basis = rel.space.basis();
  const std::size_t n = basis.size();
  std::vector<std::size_t> order;  // new position -> old index
  for (std::size_t i = 0; i < n; ++i)
    if (eliminate_first && eliminate_first(basis[i])) order.push_back(i);
  for (std::size_t i = 0; i < n; ++i)
    if (!(eliminate_first && eliminate_first(basis[i]))) order.push_back(i);
  auto permute = [&](const Vec& v) {
    Vec out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = v[order[j]];
    return out;
  };
  std::vector<Vec> rows;
  for (const auto& r : rel.relations.basis_vectors()) rows.push_back(permute(r));
  const Field f = rel.field == Field::QDelta || e.field() == Field::QDelta ? Field::QDelta : Field::Q;
  for (auto& r : rows) r = vec_to(r, f);
  const Subspace sp = Subspace::span(rows, n, f);
  const Vec reduced = sp.reduce(permute(rel.space.to_vec(e, f)));
  Vec back(n);
  for (std::size_t j = 0; j < n; ++j) back[order[j]] = reduced[j];
  return rel.space.from_vec(back);
}

bool prefer_aar_elimination(const Monomial& m) {
  if (m.degree() != 3) return false;
  if (!m.left().is_leaf()) return true;
  auto lv = m.leaves();
  return lv[1] > lv[2];
}

bool prefer_right_comb_elimination(const Monomial& m) { return m.degree() >= 2 && m.left().is_leaf() && !m.right().is_leaf(); }

FreeAar::FreeAar(std::size_t k) : k_(k) {
  if (k == 0) throw std::invalid_argument("free algebra needs at least one generator");
  const auto cs = consequence_space({lookup_identity("antiassociative"), lookup_identity("anti_right_commutative")}, 3, {Op::Mul});
  for (const auto& m : cs.space.basis())
    rules_[m] = normal_form(MultilinearElement(m, FieldElement(Rational(1))), cs, prefer_aar_elimination);
  const int K = static_cast<int>(k);
  for (int i = 0; i < K; ++i) basis_.push_back(Monomial::leaf(i));
  for (int i = 0; i < K; ++i)
    for (int j = 0; j < K; ++j) basis_.push_back(Monomial::node(Op::Mul, Monomial::leaf(i), Monomial::leaf(j)));
  for (int i = 0; i < K; ++i)
    for (int a = 0; a < K; ++a)
      for (int b = a + 1; b < K; ++b)
        basis_.push_back(Monomial::node(Op::Mul, Monomial::leaf(i), Monomial::node(Op::Mul, Monomial::leaf(a), Monomial::leaf(b))));
}

MultilinearElement FreeAar::rewrite(const Monomial& word) const {
  for (int v : word.leaves())
    if (v < 0 || v >= static_cast<int>(k_)) throw std::invalid_argument("word uses a variable outside the generators");
  for (auto op : word.ops())
    if (op != Op::Mul) throw SignatureMismatch("free aar words use the plain product only");
  MultilinearElement out;
  const int d = word.degree();
  if (d >= 4) return out;
  if (d <= 2) return out.add(word, Rational(1));
  // degree 3: read off the multilinear pattern, then put the actual generators back
  const auto lv = word.leaves();
  Monomial pattern = word;
  int next = 0;
  for (auto& c : pattern.code)
    if (c >= 0) c = static_cast<std::int8_t>(next++);
  const auto& nf = rules_.at(pattern);
  std::vector<Monomial> args{Monomial::leaf(lv[0]), Monomial::leaf(lv[1]), Monomial::leaf(lv[2])};
  for (const auto& [m, c] : nf.terms()) {
    Monomial actual = m.substitute(args);
    auto al = actual.leaves();
    if (al[1] == al[2]) continue;  // a(bb) = -a(bb)
    if (al[1] < al[2]) {
      out.add(actual, c);
    } else {
      auto swapped = Monomial::node(Op::Mul, Monomial::leaf(al[0]), Monomial::node(Op::Mul, Monomial::leaf(al[2]), Monomial::leaf(al[1])));
      out.add(swapped, -c);
    }
  }
  return out;
}

// ---- bracket expansion --------------------------------------------------------------

MultilinearElement mutation_expand(const MultilinearElement& bracket_expr, BracketRecipe recipe, const FieldElement& delta) {
  const Op first = recipe == BracketRecipe::Commutator ? Op::Mul : Op::Dashv;
  const Op second = recipe == BracketRecipe::Commutator ? Op::Mul : Op::Vdash;
  MultilinearElement r;
  r.add(Monomial::node(first, Monomial::leaf(0), Monomial::leaf(1)), FieldElement(Rational(1)));
  r.add(Monomial::node(second, Monomial::leaf(1), Monomial::leaf(0)), -delta);
  return rewrite_ops(bracket_expr, Op::Bracket, r);
}

}  // namespace deltaforge

namespace deltaforge {

Algebra FreeAar::algebra() const {
  const std::size_t n = basis_.size();
  std::map<Monomial, std::size_t> at;
  for (std::size_t i = 0; i < n; ++i) at[basis_[i]] = i;
  Algebra a("free_aar_" + std::to_string(k_), n, Field::Q);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto w = rewrite(Monomial::node(Op::Mul, basis_[i], basis_[j]));
      for (const auto& [m, c] : w.terms()) a.set(i, j, at.at(m), c);
    }
  std::vector<std::string> labels;
  for (const auto& w : basis_) labels.push_back(w.str());
  a.set_basis_labels(labels);
  return a;
}

}  // namespace deltaforge
