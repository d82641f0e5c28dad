#include <doctest.h>

#include "deltaforge/errors.hpp"
#include "deltaforge/verify.hpp"

using namespace deltaforge;

namespace {

const Record* find(const Report& r, const std::string& check, const std::string& subject) {
  for (const auto& x : r.records)
    if (x.check == check && x.subject == subject) return &x;
  return nullptr;
}

}  // namespace

TEST_CASE("passing-set comparison") {
  DeltaSet all;
  all.all = true;
  CHECK(delta_set_matches(all, DeltaSpec::every()));
  CHECK_FALSE(delta_set_matches(all, DeltaSpec::of({Rational(1)})));
  DeltaSet some;
  some.values = {Rational(1), Rational(-1, 2)};
  CHECK(delta_set_matches(some, DeltaSpec::of({Rational(-1, 2), Rational(1)})));
  CHECK_FALSE(delta_set_matches(some, DeltaSpec::of({Rational(1)})));
  some.nonrational = true;
  CHECK_FALSE(delta_set_matches(some, DeltaSpec::of({Rational(-1, 2), Rational(1)})));
  CHECK(delta_set_matches(DeltaSet{}, DeltaSpec::none()));
}

TEST_CASE("table filters") {
  SuiteOptions o;
  o.table = "cldn";
  o.timing = false;
  auto r = run_paper_suite(o);
  CHECK(r.count_check("membership/cldn") == 9);
  CHECK(r.count_check("membership/cldz") == 0);
  CHECK(r.count_check("consequence") == 0);
  CHECK(r.ok());
  for (const auto& x : r.records) CHECK(x.runtime_ms == 0);

  o.table = "cldz";
  auto z = run_paper_suite(o);
  CHECK(z.count_check("membership/cldz") == 2);
  CHECK(z.ok());

  SuiteOptions empty;
  empty.corpus = std::vector<CorpusEntry>{};
  empty.theorems = false;
  CHECK(run_paper_suite(empty).records.empty());
}

TEST_CASE("a broken table entry is reported") {
  // B3 with its expected set altered must fail membership, not throw
  auto e = corpus_entry("B3");
  for (auto& d : e.declared) d.expected = DeltaSpec::of({Rational(7)});
  SuiteOptions o;
  o.corpus = std::vector<CorpusEntry>{e};
  auto r = run_paper_suite(o);
  REQUIRE(r.count(Status::Fail) > 0);
  bool seen = false;
  for (const auto& x : r.records)
    if (x.check.rfind("membership/", 0) == 0 && x.subject == "B3") {
      CHECK(x.status == Status::Fail);
      seen = true;
    }
  CHECK(seen);
}

TEST_CASE("full suite") {
  auto r = run_paper_suite();
  MESSAGE(r.records.size() << " records, " << r.count(Status::Flagged) << " flagged");
  for (const auto& x : r.records) CHECK_MESSAGE(x.status != Status::Fail, x.check << " " << x.subject << ": " << x.detail);
  CHECK(r.ok());
  CHECK(r.count_check("membership/") > 0);
  CHECK(r.count_check("consequence") >= 18);
  CHECK(r.count_check("operad") == 5);

  auto* a3 = find(r, "diagnostic", "nilpotency index of A3");
  REQUIRE(a3);
  CHECK(a3->status == Status::Flagged);
  auto* seven = find(r, "remark/7dim", "frakB");
  REQUIRE(seven);
  CHECK(seven->status == Status::Pass);
  auto* ext = find(r, "extension", "reconstruct the 7-dimensional aar example");
  REQUIRE(ext);
  CHECK(ext->status == Status::Pass);
  CHECK(r.text().find("checks:") != std::string::npos);
}

TEST_CASE("rewrite lists") {
  auto a = aar_rewrite_checks();
  CHECK(a.size() == 9);
  for (const auto& x : a) CHECK_MESSAGE(x.ok, x.word << " -> " << x.computed);
  auto l = leibniz_rewrite_checks();
  CHECK(l.size() == 6);
  for (const auto& x : l) CHECK_MESSAGE(x.ok, x.word << " -> " << x.computed);
}

TEST_CASE("single entry reports") {
  auto b3 = verify_entry("B3");
  CHECK(b3.ok());
  bool one = false;
  for (const auto& x : b3.records)
    if (x.check.rfind("entry/", 0) == 0 && x.detail.find("passing set {1}") == 0) one = true;
  CHECK(one);

  auto fb = verify_entry("frakB");
  auto* seven = find(fb, "remark/7dim", "frakB");
  REQUIRE(seven);
  CHECK(seven->detail.find("not anticommutative") != std::string::npos);
  CHECK_THROWS_AS(verify_entry("nope"), UnknownEntry);
}
