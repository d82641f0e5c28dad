#include <doctest.h>

#include <random>

#include "deltaforge/corpus.hpp"
#include "deltaforge/errors.hpp"
#include "deltaforge/extensions.hpp"

using namespace deltaforge;

namespace {

using R = Rational;
const IdentityDef& id(const char* n) { return lookup_identity(n); }

Cocycle random_cocycle(std::size_t n, std::mt19937& rng) {
  std::uniform_int_distribution<int> v(-2, 2);
  Cocycle w = Cocycle::zero(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) w.omega.at(i, j) = FieldElement(R(v(rng)));
  return w;
}

Vec flatten(const Cocycle& w) {
  Vec v;
  for (std::size_t i = 0; i < w.omega.rows(); ++i)
    for (std::size_t j = 0; j < w.omega.cols(); ++j) v.push_back(w.omega.at(i, j));
  return v;
}

bool passes_all(const Algebra& a, const std::vector<IdentityDef>& ids, std::optional<R> d) {
  for (const auto& i : ids)
    if (!evaluate_identity(a, i, i.has_delta() ? d : std::nullopt).pass) return false;
  return true;
}

}  // namespace

TEST_CASE("central extensions") {
  Cocycle w = Cocycle::zero(1);
  w.omega.at(0, 0) = FieldElement(R(1));
  auto e = central_extension(zero_algebra(1), w);
  CHECK(e.structure() == corpus_entry("A3").instance().structure());

  auto b = corpus_entry("B3").instance();
  auto trivial = central_extension(b, Cocycle::zero(2));
  CHECK(trivial.dim() == 3);
  CHECK(annihilator(trivial, Side::TwoSided).contains(unit_vec(3, 2, Field::Q)));

  std::mt19937 rng(5);
  for (const char* name : {"B3", "g1", "calN5", "frakB"}) {
    auto a = corpus_entry(name).instance();
    auto w2 = random_cocycle(a.dim(), rng);
    auto x = central_extension(a, w2);
    const std::size_t c = a.dim();
    CHECK(annihilator(x, Side::TwoSided).contains(unit_vec(c + 1, c, Field::Q)));
    // round trips
    auto q = quotient(x, Subspace::span({unit_vec(c + 1, c, Field::Q)}, c + 1, Field::Q));
    CHECK(q.structure() == a.structure());
    auto s = split_central(x, c);
    CHECK(s.base.structure() == a.structure());
    CHECK(s.cocycle.omega.row_vectors() == w2.omega.row_vectors());
  }
  CHECK_THROWS_AS(split_central(b, 0), PreconditionFailed);
  CHECK_THROWS_AS(central_extension(b, Cocycle::zero(3)), PreconditionFailed);
}

TEST_CASE("cocycle spaces") {
  for (const auto& d : {R(1), R(-2), R(1, 3)}) {
    auto sol = solve_cocycles(zero_algebra(1), {id("delta_leibniz_right")}, d);
    CHECK(sol.size() == 1);
  }
  CHECK_THROWS_AS(solve_cocycles(zero_algebra(1), {id("delta_leibniz_right")}), DeltaRequired);
  CHECK_THROWS_AS(solve_cocycles(corpus_entry("B2(1)").instance(), {id("antiassociative")}), BaseFailsIdentities);
  CHECK_THROWS_AS(solve_cocycles(zero_algebra(2), {id("delta_lie_di")}, R(1)), SignatureMismatch);

  // soundness and completeness against direct evaluation of the extension
  struct Case {
    const char* base;
    std::vector<const char*> ids;
    std::optional<R> delta;
  };
  const std::vector<Case> cases = {{"A3", {"delta_leibniz_right"}, R(2)},
                                   {"A3", {"delta_zinbiel"}, R(1, 2)},
                                   {"calN1", {"antiassociative", "anti_right_commutative"}, std::nullopt},
                                   {"B3", {"delta_leibniz_right"}, R(1)},
                                   {"g1", {"delta_lie"}, R(-1, 2)}};
  std::mt19937 rng(17);
  for (const auto& cs : cases) {
    auto a = corpus_entry(cs.base).instance();
    std::vector<IdentityDef> ids;
    for (auto n : cs.ids) ids.push_back(id(n));
    if (!passes_all(a, ids, cs.delta)) continue;
    auto sol = solve_cocycles(a, ids, cs.delta);
    std::vector<Vec> rows;
    for (const auto& w : sol) {
      CHECK_MESSAGE(passes_all(central_extension(a, w), ids, cs.delta), std::string(cs.base));
      rows.push_back(flatten(w));
    }
    auto span = Subspace::span(rows, a.dim() * a.dim(), Field::Q);
    CHECK(span.contains(flatten(Cocycle::zero(a.dim()))));
    int inside = 0, outside = 0;
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int t = 0; t < 30; ++t) {
      auto w = random_cocycle(a.dim(), rng);
      if (t % 2 == 0) {
        // a random point of the span, sometimes nudged off it
        Cocycle x = Cocycle::zero(a.dim());
        for (const auto& b : sol) {
          const FieldElement k(R(coef(rng)));
          for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j) x.omega.at(i, j) += k * b.omega.at(i, j);
        }
        if (t % 4 == 0) x.omega.at(t % a.dim(), (t / 4) % a.dim()) += FieldElement(R(1));
        w = x;
      }
      bool in = span.contains(flatten(w));
      CHECK_MESSAGE(in == passes_all(central_extension(a, w), ids, cs.delta), std::string(cs.base) << " " << w.str());
      (in ? inside : outside)++;
    }
    MESSAGE(std::string(cs.base) << ": " << sol.size() << " cocycles, random inside/outside " << inside << "/" << outside);
  }
}

TEST_CASE("reconstructing the 7-dimensional example") {
  auto a = corpus_entry("frakA").instance();
  auto s = split_central(a, 6);
  CHECK(central_extension(s.base, s.cocycle).structure() == a.structure());
  CHECK(*series(s.base, SeriesKind::LowerCentral).index == 3);

  const std::vector<IdentityDef> aar = {id("antiassociative"), id("anti_right_commutative")};
  auto sol = solve_cocycles(s.base, aar);
  std::vector<Vec> rows;
  for (const auto& w : sol) rows.push_back(flatten(w));
  CHECK(Subspace::span(rows, 36, Field::Q).contains(flatten(s.cocycle)));

  auto one = extension_nilpotency_scan(s.base, {s.cocycle}, std::vector<std::vector<R>>{{R(1)}});
  REQUIRE(one.entries.size() == 1);
  CHECK(one.entries[0].non_two_step);
  CHECK(one.entries[0].nilpotency_index == std::optional<std::size_t>(4));

  auto zero = extension_nilpotency_scan(s.base, {s.cocycle}, std::vector<std::vector<R>>{{R(0)}});
  CHECK_FALSE(zero.entries[0].non_two_step);

  auto grid = extension_nilpotency_scan(s.base, sol);
  const std::size_t b = sol.size();
  CHECK(grid.entries.size() == 1 + 2 * b + 4 * b * (b - 1) / 2);
  CHECK(grid.flagged() > 0);
  for (const auto& e : grid.entries) CHECK(e.lower_central_dims.back() == 0);

  // A3 base: enumeration only
  auto a3 = corpus_entry("A3").instance();
  auto r = extension_nilpotency_scan(a3, solve_cocycles(a3, {id("delta_leibniz_right")}, R(2)));
  CHECK(!r.entries.empty());
}
