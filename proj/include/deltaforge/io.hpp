#pragma once

#include <string>

#include <json.hpp>

#include "deltaforge/algebra.hpp"
#include "deltaforge/consequence.hpp"
#include "deltaforge/extensions.hpp"
#include "deltaforge/operad.hpp"
#include "deltaforge/verify.hpp"

namespace deltaforge {

using json = nlohmann::json;

// scalars: "p/q" over Q; {"num": [...], "den": [...]} over Q(δ), lowest degree first
json field_element_json(const FieldElement& x);
FieldElement parse_field_element(const json& j, Field f);  // throws ParseError
Rational parse_rational_json(const json& j);

// Algebra files: 1-based indices, omitted pairs are zero products.
// A second tensor is written as "second_products".
json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const json& j);  // throws ParseError
// dialgebra files: "left_products" = ⊣ (first tensor), "right_products" = ⊢
json dialgebra_to_json(const Algebra& d);
Algebra dialgebra_from_json(const json& j);
bool is_dialgebra_json(const json& j);

// canonical text: sorted keys, sorted product pairs, two-space indent, trailing newline
std::string serialize_algebra(const Algebra& a);
Algebra parse_algebra(const std::string& text);  // either file flavour
Algebra load_algebra(const std::string& path);   // ParseError on I/O or format problems
std::string read_file(const std::string& path);

json delta_set_json(const DeltaSet& s);
json eval_json(const EvalResult& r);  // witness 1-based
json certificate_json(const ConsequenceCertificate& c);
json refutation_json(const Refutation& r);
json implication_json(const ImplicationResult& r);
json dual_report_json(const DualReport& r);
json cocycle_json(const Cocycle& w);
Cocycle cocycle_from_json(const json& j, std::size_t n);
json scan_json(const ScanReport& s);
json subspace_json(const Subspace& s);  // {"dim": d, "basis": [[...]]}
json analysis_json(const Algebra& a);   // fingerprint, series, annihilators, powers
json report_json(const Report& r);

}  // namespace deltaforge
