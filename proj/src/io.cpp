#include "deltaforge/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "deltaforge/errors.hpp"

namespace deltaforge {

namespace {

json rational_array(const DeltaPoly& p) {
  json a = json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.str());
  if (a.empty()) a.push_back("0");
  return a;
}

DeltaPoly poly_from(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of rational strings");
  std::vector<Rational> cs;
  for (const auto& c : j) cs.push_back(parse_rational_json(c));
  return DeltaPoly(cs);
}

json opt_size(const std::optional<std::size_t>& x) { return x ? json(*x) : json(nullptr); }

json vec_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(field_element_json(x));
  return a;
}

json products_json(const Algebra& a, Which w) {
  const std::size_t n = a.dim();
  json ps = json::array();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      json res = json::array();
      for (std::size_t k = 0; k < n; ++k) {
        const auto& c = w == Which::First ? a.c(i, j, k) : a.c2(i, j, k);
        if (!c.is_zero()) res.push_back(json::array({k + 1, field_element_json(c)}));
      }
      if (!res.empty()) ps.push_back({{"left", i + 1}, {"right", j + 1}, {"result", res}});
    }
  return ps;
}

std::size_t index_in(const json& j, std::size_t n, const char* what) {
  if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
  const auto v = j.get<long long>();
  if (v < 1 || static_cast<std::size_t>(v) > n)
    throw ParseError(std::string(what) + " " + std::to_string(v) + " out of range 1.." + std::to_string(n));
  return static_cast<std::size_t>(v - 1);
}

void read_products(Algebra& a, const json& ps, Which w, const char* key) {
  if (!ps.is_array()) throw ParseError(std::string("\"") + key + "\" must be a list");
  const std::size_t n = a.dim();
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& p : ps) {
    if (!p.is_object()) throw ParseError(std::string("entries of \"") + key + "\" must be objects");
    for (auto it = p.begin(); it != p.end(); ++it)
      if (it.key() != "left" && it.key() != "right" && it.key() != "result")
        throw ParseError("unknown product field \"" + it.key() + "\"");
    if (!p.contains("left") || !p.contains("right") || !p.contains("result"))
      throw ParseError("a product needs \"left\", \"right\" and \"result\"");
    const auto i = index_in(p["left"], n, "left index");
    const auto j = index_in(p["right"], n, "right index");
    if (!seen.insert({i, j}).second)
      throw ParseError("duplicate product (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
    if (!p["result"].is_array()) throw ParseError("\"result\" must be a list of [k, coefficient]");
    std::set<std::size_t> ks;
    for (const auto& t : p["result"]) {
      if (!t.is_array() || t.size() != 2) throw ParseError("result terms are [k, coefficient] pairs");
      const auto k = index_in(t[0], n, "result index");
      if (!ks.insert(k).second) throw ParseError("repeated basis index in one result");
      auto c = parse_field_element(t[1], a.field());
      if (w == Which::First)
        a.set(i, j, k, c);
      else
        a.set_second(i, j, k, c);
    }
  }
}

Algebra read_common(const json& j, const std::set<std::string>& product_keys) {
  if (!j.is_object()) throw ParseError("an algebra file is a JSON object");
  static const std::set<std::string> base = {"name", "dim", "scalars", "delta", "basis_labels"};
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!base.count(it.key()) && !product_keys.count(it.key())) throw ParseError("unknown field \"" + it.key() + "\"");
  if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long long>() < 0)
    throw ParseError("\"dim\" must be an integer >= 0");
  Field f = Field::Q;
  if (j.contains("scalars")) {
    if (!j["scalars"].is_string()) throw ParseError("\"scalars\" must be \"rational\" or \"delta\"");
    const auto s = j["scalars"].get<std::string>();
    if (s == "delta")
      f = Field::QDelta;
    else if (s != "rational")
      throw ParseError("\"scalars\" must be \"rational\" or \"delta\", got \"" + s + "\"");
  }
  std::string name;
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw ParseError("\"name\" must be a string");
    name = j["name"].get<std::string>();
  }
  Algebra a(name, j["dim"].get<std::size_t>(), f);
  if (j.contains("delta") && !j["delta"].is_null()) a.set_delta(parse_rational_json(j["delta"]));
  if (j.contains("basis_labels")) {
    const auto& l = j["basis_labels"];
    if (!l.is_array() || l.size() != a.dim()) throw ParseError("\"basis_labels\" must list dim strings");
    std::vector<std::string> labels;
    for (const auto& x : l) {
      if (!x.is_string()) throw ParseError("basis labels are strings");
      labels.push_back(x.get<std::string>());
    }
    a.set_basis_labels(labels);
  }
  return a;
}

json header(const Algebra& a) {
  json j;
  j["name"] = a.name();
  j["dim"] = a.dim();
  j["scalars"] = a.field() == Field::Q ? "rational" : "delta";
  if (a.delta()) j["delta"] = a.delta()->str();
  if (!a.basis_labels().empty()) j["basis_labels"] = a.basis_labels();
  return j;
}

void ensure_second(Algebra& a) {
  // a dialgebra with no ⊢ entries still has a (zero) second tensor
  if (!a.has_second() && a.dim() > 0) a.set_second(0, 0, 0, FieldElement::zero(a.field()));
}

}  // namespace

Rational parse_rational_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError("expected a rational string \"p/q\", got " + j.dump());
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError("bad rational \"" + j.get<std::string>() + "\": " + e.what());
  }
}

json field_element_json(const FieldElement& x) {
  if (x.field() == Field::Q) return x.q().str();
  return {{"num", rational_array(x.qd().num())}, {"den", rational_array(x.qd().den())}};
}

FieldElement parse_field_element(const json& j, Field f) {
  if (j.is_object()) {
    if (f != Field::QDelta) throw ParseError("delta coefficients need \"scalars\": \"delta\"");
    if (!j.contains("num") || !j.contains("den") || j.size() != 2) throw ParseError("a delta coefficient is {\"num\": [...], \"den\": [...]}");
    auto num = poly_from(j["num"], "\"num\"");
    auto den = poly_from(j["den"], "\"den\"");
    if (den.is_zero()) throw ParseError("zero denominator");
    return FieldElement(DeltaRational(num, den));
  }
  return FieldElement::from(parse_rational_json(j), f);
}

json algebra_to_json(const Algebra& a) {
  json j = header(a);
  j["products"] = products_json(a, Which::First);
  if (a.has_second()) j["second_products"] = products_json(a, Which::Second);
  return j;
}

Algebra algebra_from_json(const json& j) {
  auto a = read_common(j, {"products", "second_products"});
  if (!j.contains("products")) throw ParseError("missing \"products\"");
  read_products(a, j["products"], Which::First, "products");
  if (j.contains("second_products")) {
    ensure_second(a);
    read_products(a, j["second_products"], Which::Second, "second_products");
  }
  return a;
}

bool is_dialgebra_json(const json& j) { return j.is_object() && (j.contains("left_products") || j.contains("right_products")); }

json dialgebra_to_json(const Algebra& d) {
  if (!d.has_second()) throw MissingSecondProduct("a dialgebra needs both products");
  json j = header(d);
  j["left_products"] = products_json(d, Which::First);
  j["right_products"] = products_json(d, Which::Second);
  return j;
}

Algebra dialgebra_from_json(const json& j) {
  auto a = read_common(j, {"left_products", "right_products"});
  if (!j.contains("left_products") || !j.contains("right_products"))
    throw ParseError("a dialgebra file needs \"left_products\" and \"right_products\"");
  read_products(a, j["left_products"], Which::First, "left_products");
  ensure_second(a);
  read_products(a, j["right_products"], Which::Second, "right_products");
  return a;
}

std::string serialize_algebra(const Algebra& a) {
  return algebra_to_json(a).dump(2) + "\n";
}

Algebra parse_algebra(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return is_dialgebra_json(j) ? dialgebra_from_json(j) : algebra_from_json(j);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Algebra load_algebra(const std::string& path) { return parse_algebra(read_file(path)); }

json delta_set_json(const DeltaSet& s) {
  json j;
  if (s.all) {
    j["passing"] = "all";
  } else {
    json v = json::array();
    for (const auto& x : s.values) v.push_back(x.str());
    j["passing"] = v;
  }
  j["nonrational"] = s.nonrational;
  json ex = json::array();
  for (const auto& x : s.excluded) ex.push_back(x.str());
  j["excluded"] = ex;
  return j;
}

json eval_json(const EvalResult& r) {
  json j;
  j["pass"] = r.pass;
  if (!r.pass) {
    json w = json::array();
    for (auto i : r.witness) w.push_back(i + 1);
    j["witness"] = w;
    j["component"] = r.component + 1;
    j["value"] = vec_json(r.value);
  }
  return j;
}

json certificate_json(const ConsequenceCertificate& c) {
  json j;
  j["conclusion"] = c.conclusion;
  j["hypotheses"] = c.hypotheses;
  json parts = json::array();
  for (const auto& p : c.parts) {
    json terms = json::array();
    for (std::size_t i = 0; i < p.terms.size(); ++i) {
      const auto& t = p.terms[i];
      // the lift description starts with the hypothesis name (or a nested lift)
      std::string hyp = t.lift;
      while (!hyp.empty() && hyp[0] == '{') hyp = hyp.substr(1);
      const auto cut = hyp.find_first_of("[ }");
      if (cut != std::string::npos) hyp = hyp.substr(0, cut);
      terms.push_back({{"position", i + 1},
                       {"hypothesis", hyp},
                       {"instance", t.lift},
                       {"coefficient", t.coefficient.field() == Field::Q ? t.coefficient.q().str() : t.coefficient.qd().text()},
                       {"element", t.element.str()}});
    }
    parts.push_back({{"component", p.component + 1}, {"terms", terms}});
  }
  j["parts"] = parts;
  json ex = json::array();
  for (const auto& x : c.excluded_deltas) ex.push_back(x.str());
  j["excluded_deltas"] = ex;
  j["nonrational_exclusions"] = c.nonrational_exclusions;
  return j;
}

json refutation_json(const Refutation& r) {
  json f = json::object();
  for (std::size_t i = 0; i < r.functional.size(); ++i)
    if (!r.functional[i].is_zero()) f[r.space.basis()[i].str()] = field_element_json(r.functional[i]);
  return {{"component", r.component + 1}, {"degree", r.space.degree()}, {"functional", f}};
}

json implication_json(const ImplicationResult& r) {
  json j;
  j["holds"] = r.holds;
  j["field"] = r.field == Field::Q ? "rational" : "delta";
  if (r.certificate) j["certificate"] = certificate_json(*r.certificate);
  if (r.refutation) j["refutation"] = refutation_json(*r.refutation);
  return j;
}

json subspace_json(const Subspace& s) {
  json b = json::array();
  for (const auto& v : s.basis_vectors()) b.push_back(vec_json(v));
  return {{"dim", s.dim()}, {"basis", b}};
}

json dual_report_json(const DualReport& r) {
  json j;
  j["presentation"] = r.presentation;
  j["field"] = r.field == Field::Q ? "rational" : "delta";
  json groups = json::array();
  for (const auto& g : r.reduced_jacobiator) groups.push_back({{"a_word", g.a_word.str()}, {"b_side", g.b_side.str()}});
  j["reduced_jacobiator"] = groups;
  const MonomialSpace space(3, {Op::Mul});
  json rels = json::array();
  for (const auto& v : r.dual_relations.basis_vectors()) rels.push_back(space.from_vec(v).str());
  j["dual_relations"] = rels;
  j["dual_dim"] = r.dual_relations.dim();
  j["relation_dim"] = 12 - r.dual_relations.dim();
  j["matched"] = r.matched_variety ? json(display_name(*r.matched_variety)) : json(nullptr);
  return j;
}

json cocycle_json(const Cocycle& w) {
  json rows = json::array();
  for (std::size_t i = 0; i < w.omega.rows(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < w.omega.cols(); ++k) row.push_back(w.omega.at(i, k).str());
    rows.push_back(row);
  }
  return {{"omega", rows}};
}

Cocycle cocycle_from_json(const json& j, std::size_t n) {
  if (!j.is_object() || !j.contains("omega") || !j["omega"].is_array() || j["omega"].size() != n)
    throw ParseError("a cocycle is {\"omega\": n x n rational strings}");
  Cocycle w = Cocycle::zero(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = j["omega"][i];
    if (!row.is_array() || row.size() != n) throw ParseError("cocycle rows must have length " + std::to_string(n));
    for (std::size_t k = 0; k < n; ++k) w.omega.at(i, k) = FieldElement(parse_rational_json(row[k]));
  }
  return w;
}

json scan_json(const ScanReport& s) {
  json es = json::array();
  for (const auto& e : s.entries) {
    json cs = json::array();
    for (const auto& c : e.coefficients) cs.push_back(c.str());
    es.push_back({{"coefficients", cs},
                  {"lower_central_dims", e.lower_central_dims},
                  {"nilpotency_index", opt_size(e.nilpotency_index)},
                  {"non_two_step", e.non_two_step}});
  }
  return {{"grid", s.grid}, {"entries", es}, {"flagged", s.flagged()}};
}

json analysis_json(const Algebra& a) {
  json j;
  j["name"] = a.name();
  j["dim"] = a.dim();
  json series_j;
  for (auto k : {SeriesKind::LowerCentral, SeriesKind::Derived, SeriesKind::LeftOrdered, SeriesKind::RightOrdered}) {
    auto s = series(a, k);
    series_j[series_name(k)] = {{"dims", s.dims()}, {"index", opt_size(s.index)}};
  }
  j["series"] = series_j;
  j["annihilators"] = {{"left", subspace_json(annihilator(a, Side::Left))},
                       {"right", subspace_json(annihilator(a, Side::Right))},
                       {"two_sided", subspace_json(annihilator(a, Side::TwoSided))}};
  if (a.field() == Field::Q) {
    auto f = fingerprint(a);
    j["fingerprint"] = {{"dim", f.dim},
                        {"lower_central_dims", f.lower_central_dims},
                        {"derived_dims", f.derived_dims},
                        {"nilpotency_index", opt_size(f.nilpotency_index)},
                        {"solvability_index", opt_size(f.solvability_index)},
                        {"ann_left", f.ann_left},
                        {"ann_right", f.ann_right},
                        {"ann", f.ann},
                        {"commutative", f.commutative},
                        {"anticommutative", f.anticommutative},
                        {"square_span", f.square_span},
                        {"basis_idempotent", f.basis_idempotent},
                        {"derivations", f.derivations}};
    auto p = power_profile(a);
    j["powers"] = {{"nil3", p.nil3},
                   {"third_power_symmetric", p.third_power_symmetric},
                   {"albert_pair", p.albert_pair},
                   {"fourth_powers_zero", p.fourth_powers_zero}};
  }
  j["nilpotency_index"] = j["series"][series_name(SeriesKind::LowerCentral)]["index"];
  return j;
}

json report_json(const Report& r) {
  json recs = json::array();
  for (const auto& x : r.records)
    recs.push_back({{"check", x.check},
                    {"subject", x.subject},
                    {"status", status_name(x.status)},
                    {"detail", x.detail},
                    {"runtime_ms", x.runtime_ms}});
  return {{"records", recs},
          {"summary",
           {{"total", r.records.size()},
            {"pass", r.count(Status::Pass)},
            {"fail", r.count(Status::Fail)},
            {"flagged", r.count(Status::Flagged)}}},
          {"scope", report_scope()}};
}

}  // namespace deltaforge
