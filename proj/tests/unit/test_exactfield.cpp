#include <doctest.h>

#include <random>

#include "deltaforge/errors.hpp"
#include "deltaforge/matrix.hpp"
#include "deltaforge/subspace.hpp"

using namespace deltaforge;

namespace {

FieldElement q(long a, long b = 1) { return FieldElement(Rational(a, b)); }
FieldElement d() { return FieldElement::delta(); }
FieldElement qd(long a, long b = 1) { return FieldElement(DeltaRational(Rational(a, b))); }

// 2x2 determinant by cofactors, kept apart from the elimination code
FieldElement det2(const ExactMatrix& m) { return m.at(0, 0) * m.at(1, 1) - m.at(0, 1) * m.at(1, 0); }

ExactMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, bool with_delta) {
  std::uniform_int_distribution<int> val(-3, 3), pick(0, 4);
  Field f = with_delta ? Field::QDelta : Field::Q;
  ExactMatrix m(r, c, f);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) {
      if (pick(rng) == 0) continue;
      if (with_delta)
        m.at(i, j) = FieldElement(DeltaRational(DeltaPoly(std::vector<Rational>{val(rng), val(rng)})));
      else
        m.at(i, j) = FieldElement(Rational(val(rng), 1 + pick(rng)));
    }
  return m;
}

}  // namespace

TEST_CASE("rational text form") {
  CHECK(Rational::parse("6/4").str() == "3/2");
  CHECK(Rational::parse("-2").str() == "-2");
  CHECK(Rational::parse(" 0/5 ").str() == "0");
  CHECK_THROWS_AS(Rational::parse("3/-4"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/0"), ParseError);
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
}

TEST_CASE("delta rational normalization is canonical") {
  DeltaPoly x = DeltaPoly::delta();
  // (δ²−1)/(2δ−2) = (δ+1)/2
  DeltaRational a(x * x - DeltaPoly(1), x * Rational(2) - DeltaPoly(2));
  DeltaRational b(x + DeltaPoly(1), DeltaPoly(2));
  CHECK(a == b);
  CHECK(a.den() == DeltaPoly(1));
  CHECK(a.num().coeffs() == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});
  auto t = DeltaRational::parse_text(a.text());
  CHECK(t == a);
  CHECK(DeltaRational(x) / DeltaRational(x) == DeltaRational(1));
}

TEST_CASE("denominator roots") {
  DeltaPoly x = DeltaPoly::delta();
  CHECK(denominator_roots(DeltaRational(DeltaPoly(1), x - DeltaPoly(1))) == std::vector<Rational>{1});
  DeltaRational y(x, (x * Rational(2) + DeltaPoly(1)) * (x - DeltaPoly(1)));
  auto roots = denominator_roots(y);
  REQUIRE(roots.size() == 2);
  // oracle: both candidates are roots of the denominator, which has degree 2
  CHECK(y.den().eval(Rational(-1, 2)).is_zero());
  CHECK(y.den().eval(Rational(1)).is_zero());
  CHECK(roots == std::vector<Rational>{Rational(-1, 2), Rational(1)});
  CHECK(denominator_roots(DeltaRational(5)).empty());
  auto irr = rational_roots(x * x - DeltaPoly(2));
  CHECK(irr.roots.empty());
  CHECK(irr.nonrational_factor);
}

TEST_CASE("field mixing needs explicit promotion") {
  CHECK_THROWS_AS(q(1) + d(), FieldMismatch);
  CHECK((q(1).promote() + d()).field() == Field::QDelta);
  CHECK((d() * Rational(3)).str() == "3*d");
}

TEST_CASE("rref examples") {
  auto id = ExactMatrix::identity(3, Field::Q);
  auto r = rref(id);
  CHECK(r.reduced == id);
  CHECK(r.rank == 3);
  CHECK(r.pivot_cols == std::vector<std::size_t>{0, 1, 2});

  auto m = ExactMatrix::from_rows({{q(1), q(2)}, {q(2), q(4)}}, 2, Field::Q);
  auto r2 = rref(m);
  CHECK(r2.rank == 1);
  CHECK(r2.reduced == ExactMatrix::from_rows({{q(1), q(2)}, {q(0), q(0)}}, 2, Field::Q));

  auto md = ExactMatrix::from_rows({{d(), qd(1)}, {qd(1), d()}}, 2, Field::QDelta);
  CHECK(!det2(md).is_zero());
  auto r3 = rref(md);
  CHECK(r3.rank == 2);
  CHECK(r3.reduced == ExactMatrix::identity(2, Field::QDelta));
  CHECK(kernel(md).empty());

  ExactMatrix mixed(1, 2, Field::Q);
  mixed.at(0, 1) = d();
  CHECK_THROWS_AS(rref(mixed), FieldMismatch);
}

TEST_CASE("kernel examples") {
  CHECK(kernel(ExactMatrix::identity(2, Field::Q)).empty());
  CHECK(kernel(ExactMatrix(2, 3, Field::Q)).size() == 3);
  auto m = ExactMatrix::from_rows({{q(1), q(1), q(0)}}, 3, Field::Q);
  auto k = kernel(m);
  REQUIRE(k.size() == 2);
  for (auto& v : k) CHECK(is_zero_vec(m.apply(v)));
}

TEST_CASE("span membership examples") {
  auto e1 = ExactMatrix::from_rows({{q(1), q(0)}}, 2, Field::Q);
  auto c = span_membership(e1, {q(3), q(0)});
  REQUIRE(c);
  CHECK(*c == Vec{q(3)});
  CHECK(!span_membership(e1, {q(0), q(1)}));
  auto s = ExactMatrix::from_rows({{q(1), q(1)}, {q(0), q(1)}}, 2, Field::Q);
  auto c2 = span_membership(s, {q(1), q(0)});
  REQUIRE(c2);
  CHECK(*c2 == Vec{q(1), q(-1)});
}

TEST_CASE("randomized rref idempotence, rank specialization, reconstruction") {
  std::mt19937 rng(20240611);
  for (int t = 0; t < 30; ++t) {
    auto m = random_matrix(rng, 4, 5, false);
    auto r = rref(m);
    CHECK(rref(r.reduced).reduced == r.reduced);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      auto c = span_membership(m, m.row(i));
      REQUIRE(c);
    }
    // a random combination is in the span and reconstructs exactly
    Vec v = zero_vec(5, Field::Q);
    for (std::size_t i = 0; i < m.rows(); ++i) vec_axpy(v, q(static_cast<long>(i) - 1, 2), m.row(i));
    CHECK(span_membership(m, v).has_value());
  }
  std::uniform_int_distribution<int> num(-40, 40), den(1, 9);
  for (int t = 0; t < 10; ++t) {
    auto m = random_matrix(rng, 4, 4, true);
    auto generic = rref(m);
    CHECK(rref(generic.reduced).reduced == generic.reduced);
    std::vector<Rational> bad;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        for (auto& x : denominator_roots(m.at(i, j).qd())) bad.push_back(x);
    int equal = 0, tried = 0;
    while (tried < 5) {
      Rational x(num(rng), den(rng));
      if (std::find(bad.begin(), bad.end(), x) != bad.end()) continue;
      ++tried;
      auto rk = rank(m.specialize(x));
      CHECK(rk <= generic.rank);
      if (rk == generic.rank) ++equal;
    }
    CHECK(equal >= 4);
  }
}

TEST_CASE("subspace operations") {
  auto a = Subspace::span({{q(1), q(0), q(0)}, {q(0), q(1), q(0)}}, 3, Field::Q);
  auto b = Subspace::span({{q(0), q(1), q(0)}, {q(0), q(0), q(1)}}, 3, Field::Q);
  CHECK((a + b).dim() == 3);
  auto i = a.intersect(b);
  CHECK(i.dim() == 1);
  CHECK(i.contains(Vec{q(0), q(5), q(0)}));
  CHECK(Subspace::span({{q(2), q(4), q(0)}}, 3, Field::Q) == Subspace::span({{q(1), q(2), q(0)}}, 3, Field::Q));
}
