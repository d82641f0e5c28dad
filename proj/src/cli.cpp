#include "deltaforge/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <sstream>

#include "deltaforge/consequence.hpp"
#include "deltaforge/dialgebra.hpp"
#include "deltaforge/errors.hpp"
#include "deltaforge/extensions.hpp"
#include "deltaforge/io.hpp"
#include "deltaforge/operad.hpp"
#include "deltaforge/verify.hpp"

namespace deltaforge {

namespace {

struct Emit {
  std::ostream& out;
  bool plain = false;
  // JSON always; the plain renderer is a one-screen digest
  void operator()(const json& j, const std::string& text) const {
    if (plain)
      out << text << (text.empty() || text.back() == '\n' ? "" : "\n");
    else
      out << j.dump(2) << "\n";
  }
};

std::optional<Rational> opt_rational(const std::string& s) {
  if (s.empty()) return std::nullopt;
  return Rational::parse(s);
}

std::string rat_list(const std::vector<Rational>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + "}";
}

// ---- check ---------------------------------------------------------------------

int cmd_check(const std::string& file, const std::string& identity, const std::string& delta, bool all_delta, const Emit& emit) {
  const auto a = load_algebra(file);
  const auto& id = lookup_identity(identity);
  json j;
  j["algebra"] = a.name();
  j["identity"] = display_name(id.name);
  if (all_delta) {
    auto s = evaluate_identity_all_delta(a, id);
    j.update(delta_set_json(s));
    const bool any = s.all || !s.values.empty() || s.nonrational;
    j["pass"] = any;
    emit(j, a.name() + " " + display_name(id.name) + ": passing delta " + s.str());
    return any ? ExitOk : ExitFail;
  }
  std::optional<Rational> d = opt_rational(delta);
  if (!d && id.has_delta()) d = a.delta();
  if (d && id.has_delta()) j["delta"] = d->str();
  auto r = evaluate_identity(a, id, id.has_delta() ? d : std::nullopt);
  j.update(eval_json(r));
  std::string text = a.name() + " " + display_name(id.name) + (d && id.has_delta() ? " at " + d->str() : "") + ": " +
                     (r.pass ? "pass" : "fail");
  if (!r.pass) {
    text += ", witness e";
    for (std::size_t i = 0; i < r.witness.size(); ++i) text += (i ? ",e" : "") + std::to_string(r.witness[i] + 1);
    text += " gives " + vec_str(r.value);
  }
  emit(j, text);
  return r.pass ? ExitOk : ExitFail;
}

// ---- analyze -------------------------------------------------------------------

int cmd_analyze(const std::string& file, const Emit& emit) {
  const auto a = load_algebra(file);
  auto j = analysis_json(a);
  std::ostringstream os;
  os << a.name() << " (dim " << a.dim() << ")\n";
  for (const auto& [k, v] : j["series"].items())
    os << "  " << k << ": " << v["dims"].dump() << ", index " << (v["index"].is_null() ? "none" : v["index"].dump()) << "\n";
  for (const auto& [k, v] : j["annihilators"].items()) os << "  annihilator " << k << ": dim " << v["dim"] << "\n";
  emit(j, os.str());
  return ExitOk;
}

// ---- mutate --------------------------------------------------------------------

int cmd_mutate(const std::string& file, const std::string& kind, const std::string& delta, const Emit& emit) {
  const auto a = load_algebra(file);
  auto d = opt_rational(delta);
  Algebra m;
  if (a.has_second()) {
    static const std::map<std::string, DiMutation> kinds = {
        {"kp-single", DiMutation::KpSingle}, {"kp-left", DiMutation::KpLeft}, {"bracket", DiMutation::Bracket}};
    const std::string k = kind.empty() ? "bracket" : kind;
    auto it = kinds.find(k);
    if (it == kinds.end()) throw UnknownName("dialgebra mutations are kp-single, kp-left, bracket; got '" + k + "'");
    if (it->second == DiMutation::Bracket && !d) throw DeltaRequired("the bracket mutation needs --delta");
    m = dialgebra_mutation(a, it->second, d.value_or(Rational(0)));
    m.set_name(a.name() + "^" + k + (d ? "(" + d->str() + ")" : ""));
  } else {
    if (!kind.empty() && kind != "commutator") throw UnknownName("single-product mutation is 'commutator'; got '" + kind + "'");
    if (!d) throw DeltaRequired("the commutator mutation xy - delta yx needs --delta");
    m = mutate_commutator(a, FieldElement(*d));
    m.set_name(a.name() + "^(" + d->str() + ")");
  }
  auto j = m.has_second() ? dialgebra_to_json(m) : algebra_to_json(m);
  emit(j, j.dump());
  return ExitOk;
}

// ---- implies -------------------------------------------------------------------

int cmd_implies(const std::vector<std::string>& hyps, const std::string& conclusion, int degree, const std::string& field,
                const std::string& delta, const Emit& emit) {
  std::vector<IdentityDef> hs;
  for (const auto& h : hyps) hs.push_back(lookup_identity(h));
  const auto& c = lookup_identity(conclusion);
  auto d = opt_rational(delta);
  if (!field.empty() && field != "delta" && field != "rational") throw ParseError("--field is 'delta' or 'rational'");
  if (field == "delta" && d) throw ParseError("--delta fixes a value; it cannot be combined with --field delta");
  bool has_delta = c.has_delta();
  for (const auto& h : hs) has_delta = has_delta || h.has_delta();
  if (field == "rational" && has_delta && !d) throw DeltaRequired("--field rational needs --delta for these identities");
  std::optional<int> deg;
  if (degree) deg = degree;
  auto r = d ? implies_at(hs, c, *d, deg) : implies(hs, c, deg);
  auto j = implication_json(r);
  j["hypotheses"] = hyps;
  j["conclusion"] = display_name(c.name);
  if (d) j["delta"] = d->str();
  std::string text = r.holds ? "holds" : "refuted";
  if (r.certificate) {
    j["excluded"] = j["certificate"]["excluded_deltas"];
    if (r.field == Field::QDelta) {
      text += " for all delta outside " + rat_list(r.certificate->excluded_deltas);
      if (r.certificate->nonrational_exclusions) text += " and non-rational roots";
    }
    text += "; certificate substitutes back: ";
    text += r.certificate->verify(c) ? "yes" : "NO";
  }
  emit(j, text);
  return r.holds ? ExitOk : ExitFail;
}

// ---- dual ----------------------------------------------------------------------

QuadraticPresentation named_presentation(const std::string& variety, std::optional<Rational>& delta) {
  const auto key = canonical_identity_name(variety);
  if (key == "free") return QuadraticPresentation::from_identities("free", {});
  if (key == "aar")
    return QuadraticPresentation::from_identities("aar", {lookup_identity("antiassociative"), lookup_identity("anti_right_commutative")});
  static const std::map<std::string, std::pair<std::string, int>> aliases = {
      {"delta_leibniz", {"delta_leibniz_right", 0}}, {"leibniz", {"delta_leibniz_right", 1}}, {"zinbiel", {"delta_zinbiel", 1}}};
  auto it = aliases.find(key);
  IdentityDef id = lookup_identity(it == aliases.end() ? key : it->second.first);
  if (it != aliases.end() && it->second.second) {
    if (delta && *delta != Rational(it->second.second)) throw ParseError(variety + " fixes delta = 1");
    delta = Rational(it->second.second);
  }
  bool cubic = id.signature == std::vector<Op>{Op::Mul};
  for (const auto& c : id.components) cubic = cubic && c.degree() == 3;
  if (!cubic)
    throw InvalidPresentation(variety + " is not a quadratic presentation of one binary product");
  if (delta && id.has_delta()) return QuadraticPresentation::from_identities(key + "@" + delta->str(), {id.specialize(*delta)});
  return QuadraticPresentation::from_identities(key, {id});
}

QuadraticPresentation file_presentation(const std::string& file) {
  json j;
  try {
    j = json::parse(read_file(file));
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("relations") || !j["relations"].is_array())
    throw ParseError("a relations file is {\"name\", \"scalars\", \"relations\": [[[coefficient, word], ...], ...]}");
  Field f = Field::Q;
  if (j.contains("scalars") && j["scalars"] == "delta") f = Field::QDelta;
  const MonomialSpace space(3, {Op::Mul});
  std::vector<Vec> rows;
  for (const auto& rel : j["relations"]) {
    if (!rel.is_array()) throw ParseError("each relation is a list of [coefficient, word] pairs");
    MultilinearElement e(f);
    for (const auto& t : rel) {
      if (!t.is_array() || t.size() != 2 || !t[1].is_string()) throw ParseError("relation terms are [coefficient, word]");
      e.add(t[1].get<std::string>(), parse_field_element(t[0], f));
    }
    if (e.degree() != 3) throw InvalidPresentation("relations must be multilinear of degree 3 in x, y, z");
    rows.push_back(space.to_vec(e, f));
  }
  const std::string name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "relations";
  return QuadraticPresentation::from_relations(name, Subspace::span(rows, space.size(), f));
}

int cmd_dual(const std::string& variety, const std::string& file, const std::string& delta, const Emit& emit) {
  if (variety.empty() == file.empty()) throw ParseError("give exactly one of --variety or --relations");
  auto d = opt_rational(delta);
  auto p = variety.empty() ? file_presentation(file) : named_presentation(variety, d);
  if (d && p.rel.field == Field::QDelta) p = p.specialize(*d);
  auto r = dual_via_tensor_jacobi(p, d);
  auto j = dual_report_json(r);
  if (d) j["delta"] = d->str();
  std::ostringstream os;
  os << p.name << ": dim R = " << j["relation_dim"] << ", dim R! = " << j["dual_dim"] << ", dual matches "
     << (r.matched_variety ? display_name(*r.matched_variety) : "no named variety") << "\n";
  for (const auto& g : r.reduced_jacobiator) os << "  " << g.a_word.str() << " (x) " << g.b_side.str() << "\n";
  emit(j, os.str());
  return ExitOk;
}

// ---- free-aar ------------------------------------------------------------------

int cmd_free_aar(std::size_t k, const std::vector<std::string>& words, bool table, const Emit& emit) {
  FreeAar f(k);
  json j;
  j["generators"] = k;
  json b = json::array();
  for (const auto& w : f.basis()) b.push_back(w.str());
  j["basis"] = b;
  j["dim"] = f.basis().size();
  json rw = json::object();
  std::ostringstream os;
  os << "free aar algebra on " << k << " generators: dim " << f.basis().size() << "\n";
  for (const auto& w : words) {
    auto e = f.rewrite(Monomial::parse(w));
    rw[w] = e.str();
    os << "  " << w << " = " << e.str() << "\n";
  }
  if (!words.empty()) j["rewrites"] = rw;
  if (table) j["algebra"] = algebra_to_json(f.algebra());
  emit(j, os.str());
  return ExitOk;
}

// ---- extend --------------------------------------------------------------------

int cmd_extend(const std::string& file, const std::vector<std::string>& ids, const std::string& delta, bool scan, const Emit& emit) {
  const auto a = load_algebra(file);
  std::vector<IdentityDef> hs;
  for (const auto& i : ids) hs.push_back(lookup_identity(i));
  auto d = opt_rational(delta);
  std::vector<Cocycle> sol;
  try {
    sol = solve_cocycles(a, hs, d);
  } catch (const BaseFailsIdentities& e) {
    json j = {{"algebra", a.name()}, {"error", "BaseFailsIdentities"}, {"detail", e.what()}};
    emit(j, std::string("base fails the identities: ") + e.what());
    return ExitFail;
  }
  json j;
  j["algebra"] = a.name();
  j["identities"] = ids;
  if (d) j["delta"] = d->str();
  json cs = json::array();
  for (const auto& w : sol) cs.push_back(cocycle_json(w));
  j["cocycles"] = cs;
  j["dim"] = sol.size();
  // ω = 0 always solves; the space is the span above
  j["zero"] = cocycle_json(Cocycle::zero(a.dim()));
  std::ostringstream os;
  os << a.name() << ": " << sol.size() << "-dim cocycle space\n";
  if (scan) {
    auto s = extension_nilpotency_scan(a, sol);
    j["scan"] = scan_json(s);
    os << "scanned " << s.grid << ": " << s.flagged() << " extensions are not 2-step nilpotent\n";
  }
  emit(j, os.str());
  return ExitOk;
}

// ---- dialgebra-check -----------------------------------------------------------

int cmd_dialgebra_check(const std::string& file, const std::string& system, const std::string& delta, const Emit& emit) {
  const auto d = load_algebra(file);
  if (!d.has_second()) throw MissingSecondProduct("a dialgebra file needs left_products and right_products");
  const auto key = canonical_identity_name(system);
  DiSystem s;
  if (key == "delta_lie" || key == "delta_lie_di")
    s = DiSystem::DeltaLie;
  else if (key == "delta_assoc" || key == "delta_associative" || key == "delta_assoc_di")
    s = DiSystem::DeltaAssoc;
  else
    throw UnknownName("di-systems are delta-lie and delta-assoc; got '" + system + "'");
  auto x = opt_rational(delta);
  if (!x) x = d.delta();
  if (!x) throw DeltaRequired("dialgebra-check needs --delta");
  auto r = check_di_system(d, s, *x);
  json j = {{"dialgebra", d.name()}, {"system", di_system_name(s)}, {"delta", x->str()}};
  j.update(eval_json(r));
  std::string text = d.name() + " " + di_system_name(s) + " at " + x->str() + ": " + (r.pass ? "pass" : "fail");
  if (s == DiSystem::DeltaLie && r.pass) {
    auto b = check_lie_di_branch(d, *x);
    j["branch"] = {{"applicable", b.applicable}, {"name", b.branch}, {"conclusion", b.conclusion}};
    if (b.applicable) text += "; branch " + b.branch + ": " + (b.conclusion ? "holds" : "FAILS");
  }
  emit(j, text);
  return r.pass ? ExitOk : ExitFail;
}

// ---- verify-paper --------------------------------------------------------------

int cmd_verify(const std::string& table, const std::string& entry, const Emit& emit) {
  Report r;
  if (!entry.empty() && table.empty()) {
    r = verify_entry(entry);
  } else {
    SuiteOptions o;
    if (!table.empty()) {
      auto ts = corpus_tables();
      if (std::find(ts.begin(), ts.end(), table) == ts.end()) throw UnknownName("unknown table '" + table + "'");
      o.table = table;
    }
    if (!entry.empty()) {
      corpus_entry(entry);
      o.entry = entry;
    }
    r = run_paper_suite(o);
  }
  emit(report_json(r), r.text());
  return r.ok() ? ExitOk : ExitFail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact verification of delta-type nonassociative algebras"};
  app.require_subcommand(1);
  bool plain = false;
  app.add_flag("--plain", plain, "plain-text digest instead of JSON");

  std::string file, identity, delta, kind, conclusion, field, variety, relations, system, table, entry;
  std::vector<std::string> hyps, ids, words;
  bool all_delta = false, scan = false, emit_table = false;
  int degree = 0;
  std::size_t gens = 2;

  auto* check = app.add_subcommand("check", "test one identity on an algebra file");
  check->add_option("file", file, "algebra JSON")->required();
  check->add_option("--identity", identity, "identity name")->required();
  auto* cd = check->add_option("--delta", delta, "delta value p/q");
  check->add_flag("--all-delta", all_delta, "exact set of passing delta")->excludes(cd);
  check->add_flag("--plain", plain);

  auto* analyze = app.add_subcommand("analyze", "structural report");
  analyze->add_option("file", file)->required();
  analyze->add_flag("--plain", plain);

  auto* mutate = app.add_subcommand("mutate", "emit a mutated algebra file");
  mutate->add_option("file", file)->required();
  mutate->add_option("--delta", delta);
  mutate->add_option("--kind", kind, "commutator | kp-single | kp-left | bracket");
  mutate->add_flag("--plain", plain);

  auto* implies_cmd = app.add_subcommand("implies", "decide an identity implication with a certificate");
  implies_cmd->add_option("--hyp", hyps, "hypothesis name (repeatable)");
  implies_cmd->add_option("--conclusion", conclusion)->required();
  implies_cmd->add_option("--degree", degree)->check(CLI::IsMember({3, 4}));
  implies_cmd->add_option("--field", field, "delta | rational");
  implies_cmd->add_option("--delta", delta);
  implies_cmd->add_flag("--plain", plain);

  auto* dual = app.add_subcommand("dual", "Koszul dual of a quadratic presentation");
  dual->add_option("--variety", variety);
  dual->add_option("--relations", relations, "relations JSON");
  dual->add_option("--delta", delta);
  dual->add_flag("--plain", plain);

  auto* free_aar = app.add_subcommand("free-aar", "free antiassociative anti-right-commutative algebra");
  free_aar->add_option("--generators", gens)->check(CLI::Range(1, 6));
  free_aar->add_option("--word", words, "word to rewrite, e.g. (xy)z (repeatable)");
  free_aar->add_flag("--table", emit_table, "include the structure constants");
  free_aar->add_flag("--plain", plain);

  auto* extend = app.add_subcommand("extend", "central extensions satisfying identities");
  extend->add_option("file", file)->required();
  extend->add_option("--identity", ids)->required();
  extend->add_option("--delta", delta);
  extend->add_flag("--scan", scan, "nilpotency scan over the default grid");
  extend->add_flag("--plain", plain);

  auto* di = app.add_subcommand("dialgebra-check", "test a di-system on a dialgebra file");
  di->add_option("file", file)->required();
  di->add_option("--system", system, "delta-lie | delta-assoc")->required();
  di->add_option("--delta", delta);
  di->add_flag("--plain", plain);

  auto* verify = app.add_subcommand("verify-paper", "re-verify the shipped corpus and theorems");
  verify->add_option("--table", table);
  verify->add_option("--entry", entry);
  verify->add_flag("--plain", plain);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  if (!argv_rev.empty()) argv_rev.pop_back();  // program name
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return ExitInput;
  }

  const Emit emit{out, plain};
  try {
    if (*check) return cmd_check(file, identity, delta, all_delta, emit);
    if (*analyze) return cmd_analyze(file, emit);
    if (*mutate) return cmd_mutate(file, kind, delta, emit);
    if (*implies_cmd) return cmd_implies(hyps, conclusion, degree, field, delta, emit);
    if (*dual) return cmd_dual(variety, relations, delta, emit);
    if (*free_aar) return cmd_free_aar(gens, words, emit_table, emit);
    if (*extend) return cmd_extend(file, ids, delta, scan, emit);
    if (*di) return cmd_dialgebra_check(file, system, delta, emit);
    if (*verify) return cmd_verify(table, entry, emit);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return ExitInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return ExitInput;
  }
  return ExitInput;
}

}  // namespace deltaforge
