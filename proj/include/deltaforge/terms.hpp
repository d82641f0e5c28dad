#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "deltaforge/field.hpp"

namespace deltaforge {

// product symbols. Star is the extra product of conservative algebras,
// Dashv/Vdash the two dialgebra products, Bullet the dual-side product in
// operad computations, Bracket a formal commutator awaiting expansion.
enum class Op : std::int8_t { Mul = 0, Star, Dashv, Vdash, Bullet, Bracket };
constexpr int kOpCount = 6;
const char* op_symbol(Op op);  // rendering (utf-8)
const char* op_name(Op op);    // ascii, used in json

// planar binary tree in prefix code: leaf = variable index >= 0,
// internal node = -1 - op, followed by its left and right subtrees
struct Monomial {
  std::vector<std::int8_t> code;

  static Monomial leaf(int var);
  static Monomial node(Op op, const Monomial& l, const Monomial& r);
  // "(xy)z", "x<(y>z)", "(x*y)z" ... letters x y z t (or a b c d) are
  // variables 0..3; '<' is dashv, '>' vdash, '*' star, '.' bullet, juxtaposition mul
  static Monomial parse(const std::string& text);

  bool is_leaf() const { return code.size() == 1; }
  int degree() const;
  std::size_t internal_nodes() const { return static_cast<std::size_t>(degree() - 1); }
  Op op() const;  // root op; not a leaf
  Monomial left() const;
  Monomial right() const;
  int var() const { return code[0]; }  // leaf only
  std::vector<int> leaves() const;      // left to right
  std::vector<Op> ops() const;          // prefix order
  bool multilinear() const;             // leaves are a permutation of 0..d-1

  // replace variable i by args[i]
  Monomial substitute(const std::vector<Monomial>& args) const;
  Monomial relabel(const std::vector<int>& perm) const;  // var i -> perm[i]
  Monomial with_ops(Op from, Op to) const;

  std::string str(const std::vector<std::string>& names = {}) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

const std::vector<std::string>& default_var_names();  // x y z t

class MultilinearElement {
 public:
  explicit MultilinearElement(Field f = Field::Q) : field_(f) {}
  MultilinearElement(const Monomial& m, const FieldElement& c);

  Field field() const { return field_; }
  const std::map<Monomial, FieldElement>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 when zero
  FieldElement coeff(const Monomial& m) const;

  MultilinearElement& add(const Monomial& m, const FieldElement& c);
  MultilinearElement& add(const std::string& monomial_text, const FieldElement& c) {
    return add(Monomial::parse(monomial_text), c);
  }
  MultilinearElement& operator+=(const MultilinearElement& o);
  MultilinearElement& operator-=(const MultilinearElement& o);
  MultilinearElement operator-() const;
  friend MultilinearElement operator+(MultilinearElement a, const MultilinearElement& b) { return a += b; }
  friend MultilinearElement operator-(MultilinearElement a, const MultilinearElement& b) { return a -= b; }
  MultilinearElement scaled(const FieldElement& s) const;

  MultilinearElement to(Field f) const;
  MultilinearElement specialize(const Rational& delta) const;
  MultilinearElement compose_delta(const DeltaRational& f) const;
  MultilinearElement substitute(const std::vector<Monomial>& args) const;
  MultilinearElement relabel(const std::vector<int>& perm) const;
  MultilinearElement with_ops(Op from, Op to) const;
  std::vector<Op> signature() const;  // ops used, sorted, unique

  // bilinear product of two elements under one op
  static MultilinearElement product(Op op, const MultilinearElement& a, const MultilinearElement& b);

  std::string str(const std::vector<std::string>& names = {}) const;

  friend bool operator==(const MultilinearElement& a, const MultilinearElement& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Field field_;
  std::map<Monomial, FieldElement> terms_;
};

// rewrite every node labelled `op` as a linear combination of two-leaf words
// in the same op set. recipe(u, v) is called with leaf placeholders 0 (left
// factor) and 1 (right factor) and must return an element of degree 2.
MultilinearElement rewrite_ops(const MultilinearElement& e, Op op, const MultilinearElement& recipe);

}  // namespace deltaforge
