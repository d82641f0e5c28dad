#include "deltaforge/terms.hpp"

#include <algorithm>
#include <stdexcept>

#include "deltaforge/errors.hpp"

namespace deltaforge {

const char* op_symbol(Op op) {
  switch (op) {
    case Op::Mul: return "";
    case Op::Star: return "∗";
    case Op::Dashv: return "⊣";
    case Op::Vdash: return "⊢";
    case Op::Bullet: return "•";
    case Op::Bracket: return ",";
  }
  return "?";
}

const char* op_name(Op op) {
  switch (op) {
    case Op::Mul: return "mul";
    case Op::Star: return "star";
    case Op::Dashv: return "dashv";
    case Op::Vdash: return "vdash";
    case Op::Bullet: return "bullet";
    case Op::Bracket: return "bracket";
  }
  return "?";
}

const std::vector<std::string>& default_var_names() {
  static const std::vector<std::string> names{"x", "y", "z", "t", "u", "v"};
  return names;
}

Monomial Monomial::leaf(int var) {
  if (var < 0 || var > 100) throw std::invalid_argument("variable index out of range");
  return Monomial{{static_cast<std::int8_t>(var)}};
}

Monomial Monomial::node(Op op, const Monomial& l, const Monomial& r) {
  Monomial m;
  m.code.reserve(1 + l.code.size() + r.code.size());
  m.code.push_back(static_cast<std::int8_t>(-1 - static_cast<int>(op)));
  m.code.insert(m.code.end(), l.code.begin(), l.code.end());
  m.code.insert(m.code.end(), r.code.begin(), r.code.end());
  return m;
}

namespace {

// length of the subtree starting at position p
std::size_t subtree_len(const std::vector<std::int8_t>& c, std::size_t p) {
  std::size_t need = 1, i = p;
  while (need > 0) {
    if (i >= c.size()) throw std::logic_error("malformed monomial code");
    if (c[i] < 0) ++need;
    else --need;
    ++i;
  }
  return i - p;
}

struct Parser {
  const std::string& s;
  std::size_t i = 0;

  void skip() {
    while (i < s.size() && s[i] == ' ') ++i;
  }
  Monomial factor() {
    skip();
    if (i >= s.size()) throw ParseError("unexpected end of monomial '" + s + "'");
    char ch = s[i];
    if (ch == '(') {
      ++i;
      Monomial m = expr();
      skip();
      if (i >= s.size() || s[i] != ')') throw ParseError("missing ')' in '" + s + "'");
      ++i;
      return m;
    }
    static const std::string xs = "xyztuv", as = "abcd";
    auto p = xs.find(ch);
    if (p != std::string::npos) {
      ++i;
      return Monomial::leaf(static_cast<int>(p));
    }
    p = as.find(ch);
    if (p != std::string::npos) {
      ++i;
      return Monomial::leaf(static_cast<int>(p));
    }
    throw ParseError(std::string("bad character '") + ch + "' in monomial '" + s + "'");
  }
  Monomial expr() {
    Monomial l = factor();
    skip();
    if (i >= s.size() || s[i] == ')') return l;
    Op op = Op::Mul;
    switch (s[i]) {
      case '<': op = Op::Dashv; ++i; break;
      case '>': op = Op::Vdash; ++i; break;
      case '*': op = Op::Star; ++i; break;
      case '.': op = Op::Bullet; ++i; break;
      default: break;
    }
    Monomial r = factor();
    return Monomial::node(op, l, r);
  }
};

}  // namespace

Monomial Monomial::parse(const std::string& text) {
  Parser p{text};
  Monomial m = p.expr();
  p.skip();
  if (p.i != text.size()) throw ParseError("trailing text in monomial '" + text + "'");
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (auto c : code)
    if (c >= 0) ++d;
  return d;
}

Op Monomial::op() const {
  if (is_leaf()) throw std::logic_error("leaf has no operation");
  return static_cast<Op>(-1 - code[0]);
}

Monomial Monomial::left() const {
  std::size_t len = subtree_len(code, 1);
  return Monomial{std::vector<std::int8_t>(code.begin() + 1, code.begin() + 1 + static_cast<long>(len))};
}

Monomial Monomial::right() const {
  std::size_t len = subtree_len(code, 1);
  return Monomial{std::vector<std::int8_t>(code.begin() + 1 + static_cast<long>(len), code.end())};
}

std::vector<int> Monomial::leaves() const {
  std::vector<int> out;
  for (auto c : code)
    if (c >= 0) out.push_back(c);
  return out;
}

std::vector<Op> Monomial::ops() const {
  std::vector<Op> out;
  for (auto c : code)
    if (c < 0) out.push_back(static_cast<Op>(-1 - c));
  return out;
}

bool Monomial::multilinear() const {
  auto l = leaves();
  std::sort(l.begin(), l.end());
  for (std::size_t i = 0; i < l.size(); ++i)
    if (l[i] != static_cast<int>(i)) return false;
  return true;
}

Monomial Monomial::substitute(const std::vector<Monomial>& args) const {
  Monomial out;
  for (auto c : code) {
    if (c < 0) {
      out.code.push_back(c);
    } else {
      if (static_cast<std::size_t>(c) >= args.size()) throw std::invalid_argument("substitution misses a variable");
      const auto& a = args[static_cast<std::size_t>(c)].code;
      out.code.insert(out.code.end(), a.begin(), a.end());
    }
  }
  return out;
}

Monomial Monomial::relabel(const std::vector<int>& perm) const {
  Monomial out = *this;
  for (auto& c : out.code)
    if (c >= 0) c = static_cast<std::int8_t>(perm.at(static_cast<std::size_t>(c)));
  return out;
}

Monomial Monomial::with_ops(Op from, Op to) const {
  Monomial out = *this;
  const auto f = static_cast<std::int8_t>(-1 - static_cast<int>(from));
  const auto t = static_cast<std::int8_t>(-1 - static_cast<int>(to));
  for (auto& c : out.code)
    if (c == f) c = t;
  return out;
}

std::string Monomial::str(const std::vector<std::string>& names) const {
  const auto& nm = names.empty() ? default_var_names() : names;
  if (is_leaf()) {
    auto v = static_cast<std::size_t>(var());
    return v < nm.size() ? nm[v] : "x" + std::to_string(v + 1);
  }
  Monomial l = left(), r = right();
  if (op() == Op::Bracket) return "[" + l.str(names) + "," + r.str(names) + "]";
  std::string ls = l.is_leaf() || l.op() == Op::Bracket ? l.str(names) : "(" + l.str(names) + ")";
  std::string rs = r.is_leaf() || r.op() == Op::Bracket ? r.str(names) : "(" + r.str(names) + ")";
  return ls + op_symbol(op()) + rs;
}

// ---------------------------------------------------------------------------

MultilinearElement::MultilinearElement(const Monomial& m, const FieldElement& c) : field_(c.field()) { add(m, c); }

int MultilinearElement::degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

FieldElement MultilinearElement::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? FieldElement::zero(field_) : it->second;
}

MultilinearElement& MultilinearElement::add(const Monomial& m, const FieldElement& c) {
  if (c.is_zero()) return *this;
  if (c.field() == Field::QDelta && field_ == Field::Q) *this = to(Field::QDelta);
  FieldElement cc = c.to(field_);
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, cc);
  } else {
    it->second += cc;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

MultilinearElement& MultilinearElement::operator+=(const MultilinearElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

MultilinearElement& MultilinearElement::operator-=(const MultilinearElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

MultilinearElement MultilinearElement::operator-() const {
  MultilinearElement r(field_);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MultilinearElement MultilinearElement::scaled(const FieldElement& s) const {
  Field f = s.field() == Field::QDelta ? Field::QDelta : field_;
  MultilinearElement r(f);
  for (const auto& [m, c] : terms_) r.add(m, c.to(f) * s.to(f));
  return r;
}

MultilinearElement MultilinearElement::to(Field f) const {
  MultilinearElement r(f);
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, c.to(f));
  return r;
}

MultilinearElement MultilinearElement::specialize(const Rational& delta) const {
  MultilinearElement r(Field::Q);
  for (const auto& [m, c] : terms_) r.add(m, c.specialize(delta));
  return r;
}

MultilinearElement MultilinearElement::compose_delta(const DeltaRational& f) const {
  MultilinearElement r(Field::QDelta);
  for (const auto& [m, c] : terms_) r.add(m, FieldElement(c.to(Field::QDelta).qd().compose(f)));
  return r;
}

MultilinearElement MultilinearElement::substitute(const std::vector<Monomial>& args) const {
  MultilinearElement r(field_);
  for (const auto& [m, c] : terms_) r.add(m.substitute(args), c);
  return r;
}

MultilinearElement MultilinearElement::relabel(const std::vector<int>& perm) const {
  MultilinearElement r(field_);
  for (const auto& [m, c] : terms_) r.add(m.relabel(perm), c);
  return r;
}

MultilinearElement MultilinearElement::with_ops(Op from, Op to) const {
  MultilinearElement r(field_);
  for (const auto& [m, c] : terms_) r.add(m.with_ops(from, to), c);
  return r;
}

std::vector<Op> MultilinearElement::signature() const {
  std::vector<Op> ops;
  for (const auto& [m, c] : terms_)
    for (Op o : m.ops())
      if (std::find(ops.begin(), ops.end(), o) == ops.end()) ops.push_back(o);
  std::sort(ops.begin(), ops.end());
  return ops;
}

MultilinearElement MultilinearElement::product(Op op, const MultilinearElement& a, const MultilinearElement& b) {
  Field f = a.field_ == Field::QDelta || b.field_ == Field::QDelta ? Field::QDelta : Field::Q;
  MultilinearElement r(f);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add(Monomial::node(op, ma, mb), ca.to(f) * cb.to(f));
  return r;
}

std::string MultilinearElement::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string cs = c.str();
    bool neg = !cs.empty() && cs[0] == '-' && c.field() == Field::Q;
    if (neg) cs = cs.substr(1);
    if (!first) out += neg ? " - " : " + ";
    else if (neg) out += "-";
    bool unit = cs == "1";
    if (!unit) {
      bool compound = cs.find_first_of("+-/ ") != std::string::npos && c.field() == Field::QDelta;
      out += compound ? "(" + cs + ")" : cs;
      out += " ";
    }
    out += m.str(names);
    first = false;
  }
  return out;
}

namespace {

MultilinearElement substitute_elements(const Monomial& w, const std::vector<MultilinearElement>& xs) {
  if (w.is_leaf()) return xs.at(static_cast<std::size_t>(w.var()));
  return MultilinearElement::product(w.op(), substitute_elements(w.left(), xs), substitute_elements(w.right(), xs));
}

MultilinearElement expand(const Monomial& m, Op op, const MultilinearElement& recipe, Field f) {
  if (m.is_leaf()) return MultilinearElement(m, FieldElement::one(f));
  MultilinearElement l = expand(m.left(), op, recipe, f), r = expand(m.right(), op, recipe, f);
  if (m.op() != op) return MultilinearElement::product(m.op(), l, r);
  MultilinearElement out(f);
  for (const auto& [w, c] : recipe.terms()) out += substitute_elements(w, {l, r}).scaled(c);
  return out;
}

}  // namespace

MultilinearElement rewrite_ops(const MultilinearElement& e, Op op, const MultilinearElement& recipe) {
  Field f = e.field() == Field::QDelta || recipe.field() == Field::QDelta ? Field::QDelta : Field::Q;
  MultilinearElement out(f);
  for (const auto& [m, c] : e.terms()) out += expand(m, op, recipe, f).scaled(c);
  return out;
}

}  // namespace deltaforge
