#include <doctest.h>

#include <filesystem>

#include "deltaforge/corpus.hpp"
#include "deltaforge/dialgebra.hpp"
#include "deltaforge/errors.hpp"
#include "deltaforge/io.hpp"

using namespace deltaforge;

namespace {

using R = Rational;
const std::filesystem::path kCorpus = std::filesystem::path(DELTAFORGE_SOURCE_DIR) / "corpus";

}  // namespace

TEST_CASE("algebra files round trip byte-canonically") {
  for (const auto& e : corpus())
    for (const auto& p : e.samples()) {
      auto a = e.instance(p);
      auto text = serialize_algebra(a);
      auto back = parse_algebra(text);
      CHECK_MESSAGE(back == a, a.name());
      CHECK(serialize_algebra(back) == text);
    }
}

TEST_CASE("shipped corpus files") {
  std::size_t n = 0;
  for (const auto& f : std::filesystem::directory_iterator(kCorpus)) {
    if (f.path().extension() != ".json") continue;
    ++n;
    const auto text = read_file(f.path().string());
    auto a = parse_algebra(text);
    // canonical on disk, and parse -> serialize -> parse is the identity
    const bool di = is_dialgebra_json(json::parse(text));
    CHECK_MESSAGE((di ? dialgebra_to_json(a).dump(2) + "\n" : serialize_algebra(a)) == text, f.path().filename());
    CHECK(parse_algebra(di ? dialgebra_to_json(a).dump() : serialize_algebra(a)) == a);
  }
  CHECK(n >= 80);
  // the files agree with the built-in tables
  CHECK(load_algebra((kCorpus / "frakA.json").string()) == corpus_entry("frakA").instance());
  CHECK(load_algebra((kCorpus / "B2_1.json").string()) == corpus_entry("B2(1)").instance());
  CHECK(load_algebra((kCorpus / "g3_1over2.json").string()) == corpus_entry("g3(alpha)").instance({R(1, 2)}));
}

TEST_CASE("file format details") {
  auto a = parse_algebra(R"({"name":"t","dim":2,"products":[{"left":1,"right":1,"result":[[2,"3/6"]]}]})");
  CHECK(a.field() == Field::Q);
  CHECK(a.c(0, 0, 1) == FieldElement(R(1, 2)));
  CHECK(a.c(1, 1, 0).is_zero());
  // canonical output: sorted keys and sorted pairs
  auto b = parse_algebra(R"({"dim":2,"name":"u","scalars":"rational","products":[
      {"left":2,"right":1,"result":[[1,"1"]]},{"left":1,"right":2,"result":[[2,"-1"],[1,"2"]]}]})");
  CHECK(serialize_algebra(b) == R"({
  "dim": 2,
  "name": "u",
  "products": [
    {
      "left": 1,
      "result": [
        [
          1,
          "2"
        ],
        [
          2,
          "-1"
        ]
      ],
      "right": 2
    },
    {
      "left": 2,
      "result": [
        [
          1,
          "1"
        ]
      ],
      "right": 1
    }
  ],
  "scalars": "rational"
}
)");

  auto d = parse_algebra(R"({"dim":1,"scalars":"delta","delta":"1/2","products":[
      {"left":1,"right":1,"result":[[1,{"num":["0","1"],"den":["1","1"]}]]}]})");
  CHECK(d.field() == Field::QDelta);
  CHECK(d.delta() == std::optional<R>(R(1, 2)));
  CHECK(d.c(0, 0, 0) == FieldElement(DeltaRational::delta() / (DeltaRational(R(1)) + DeltaRational::delta())));
  CHECK(parse_algebra(serialize_algebra(d)) == d);
  CHECK(parse_algebra(R"({"dim":0,"products":[]})").dim() == 0);
}

TEST_CASE("malformed files are parse errors") {
  const char* bad[] = {
      "not json",
      "[]",
      R"({"products":[]})",
      R"({"dim":-1,"products":[]})",
      R"({"dim":2})",
      R"({"dim":2,"products":[{"left":3,"right":1,"result":[]}]})",
      R"({"dim":2,"products":[{"left":0,"right":1,"result":[]}]})",
      R"({"dim":2,"products":[{"left":1,"right":1,"result":[[1,"1"]]},{"left":1,"right":1,"result":[[2,"1"]]}]})",
      R"({"dim":2,"products":[{"left":1,"right":1,"result":[[1,"1"],[1,"2"]]}]})",
      R"({"dim":2,"products":[{"left":1,"right":1,"result":[[1,"x"]]}]})",
      R"({"dim":2,"products":[{"left":1,"right":1,"result":[[1,"1/0"]]}]})",
      R"({"dim":2,"products":[{"left":1,"right":1,"result":[[1,{"num":["1"],"den":["1"]}]]}]})",
      R"({"dim":1,"scalars":"delta","products":[{"left":1,"right":1,"result":[[1,{"num":["1"],"den":["0"]}]]}]})",
      R"({"dim":2,"scalars":"complex","products":[]})",
      R"({"dim":2,"products":[],"extra":1})",
      R"({"dim":2,"products":[{"left":1,"right":1,"result":[[1]]}]})",
      R"({"dim":2,"left_products":[]})",
      R"({"dim":2,"basis_labels":["a"],"products":[]})",
  };
  for (const char* t : bad) CHECK_THROWS_AS_MESSAGE(parse_algebra(t), ParseError, t);
  CHECK_THROWS_AS(load_algebra("/nonexistent/file.json"), ParseError);
}

TEST_CASE("dialgebra files") {
  auto d = dialgebra_from_single(corpus_entry("g1").instance());
  auto j = dialgebra_to_json(d);
  CHECK(j.contains("left_products"));
  CHECK(j.contains("right_products"));
  CHECK_FALSE(j.contains("products"));
  auto back = parse_algebra(j.dump());
  CHECK(back == d);
  // an empty ⊢ list still makes a dialgebra
  auto e = parse_algebra(R"({"dim":1,"left_products":[{"left":1,"right":1,"result":[[1,"1"]]}],"right_products":[]})");
  CHECK(e.has_second());
  CHECK_THROWS_AS(dialgebra_to_json(corpus_entry("g1").instance()), MissingSecondProduct);
}

TEST_CASE("result serializations") {
  auto r = evaluate_identity(corpus_entry("B2(1)").instance(), lookup_identity("delta_leibniz_right"), R(1));
  auto j = eval_json(r);
  CHECK(j["pass"] == false);
  CHECK(j["witness"] == json::array({2, 2, 1}));

  auto s = delta_set_json(evaluate_identity_all_delta(corpus_entry("A3").instance(), lookup_identity("delta_leibniz_right")));
  CHECK(s["passing"] == "all");

  auto imp = implies({lookup_identity("anticommutative"), lookup_identity("delta_lie")}, lookup_identity("antiassociative"));
  auto ij = implication_json(imp);
  CHECK(ij["holds"] == true);
  CHECK(ij["certificate"]["excluded_deltas"] == json::array({"1"}));
  for (const auto& part : ij["certificate"]["parts"])
    for (const auto& t : part["terms"]) {
      const auto h = t["hypothesis"].get<std::string>();
      CHECK((h == "anticommutative" || h == "delta_lie"));
    }

  Cocycle w = Cocycle::zero(2);
  w.omega.at(0, 1) = FieldElement(R(-3, 4));
  auto cj = cocycle_json(w);
  CHECK(cj["omega"][0][1] == "-3/4");
  CHECK(cocycle_from_json(cj, 2).omega.row_vectors() == w.omega.row_vectors());
  CHECK_THROWS_AS(cocycle_from_json(cj, 3), ParseError);

  auto an = analysis_json(corpus_entry("frakA").instance());
  CHECK(an["nilpotency_index"] == 4);
  CHECK(an["series"]["lower_central"]["dims"] == json::array({7, 4, 1, 0}));
}
