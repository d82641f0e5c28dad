#include "deltaforge/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "deltaforge/errors.hpp"

namespace deltaforge {

DeltaSpec DeltaSpec::of(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return {false, std::move(v)};
}

bool DeltaSpec::contains(const Rational& d) const {
  return all || std::find(values.begin(), values.end(), d) != values.end();
}

std::string DeltaSpec::str() const {
  if (all) return "all";
  std::string s = "{";
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? ", " : "") + values[i].str();
  return s + "}";
}

Algebra CorpusEntry::instance(const std::vector<Rational>& params) const {
  if (params.size() != parameters.size())
    throw std::invalid_argument("entry '" + id + "' takes " + std::to_string(parameters.size()) + " parameters");
  Algebra a = build(params);
  a.set_name(instance_name(params));
  return a;
}

std::string CorpusEntry::instance_name(const std::vector<Rational>& params) const {
  if (params.empty()) return id;
  std::string s = id;
  for (std::size_t i = 0; i < parameters.size(); ++i) {
    auto pos = s.find(parameters[i]);
    if (pos != std::string::npos) s.replace(pos, parameters[i].size(), params[i].str());
  }
  // rows like D2(alpha,alpha) mention the parameter twice
  for (std::size_t i = 0; i < parameters.size(); ++i) {
    std::size_t pos;
    while ((pos = s.find(parameters[i])) != std::string::npos) s.replace(pos, parameters[i].size(), params[i].str());
  }
  return s;
}

std::vector<Rational> parameter_samples() {
  const char* env = std::getenv("DELTAFORGE_PARAM_SAMPLES");
  if (!env || !*env) return {Rational(0), Rational(1), Rational(-1), Rational(2), Rational(1, 2)};
  std::vector<Rational> out;
  std::stringstream ss(env);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
    if (!tok.empty()) out.push_back(Rational::parse(tok));
  }
  return out;
}

std::vector<std::vector<Rational>> CorpusEntry::samples() const {
  if (!parametric()) return {{}};
  const auto base = parameter_samples();
  std::vector<std::vector<Rational>> out;
  std::vector<std::size_t> idx(parameters.size(), 0);
  if (base.empty()) return out;
  for (;;) {
    std::vector<Rational> t;
    for (auto i : idx) t.push_back(base[i]);
    if (std::find(excluded_params.begin(), excluded_params.end(), t) == excluded_params.end()) out.push_back(t);
    std::size_t k = idx.size();
    while (k > 0) {
      --k;
      if (++idx[k] < base.size()) break;
      idx[k] = 0;
      if (k == 0) return out;
    }
  }
}

namespace {

using R = Rational;
using Rules = std::vector<ProductRule>;

Algebra table(std::size_t n, const Rules& rules) { return make_algebra("", n, rules); }

// anticommutative completion: for every listed e_i e_j = v add e_j e_i = -v
Rules skew(const Rules& r) {
  Rules out = r;
  for (const auto& p : r) {
    ProductRule q{p.right, p.left, {}};
    for (const auto& [k, c] : p.result) q.result.emplace_back(k, -c);
    out.push_back(q);
  }
  return out;
}

DeclaredProperty prop(const std::string& table, const std::string& id, DeltaSpec marked) {
  return {table, id, marked, marked, ""};
}

DeclaredProperty prop(const std::string& table, const std::string& id, DeltaSpec marked, DeltaSpec expected,
                      std::string note) {
  return {table, id, marked, expected, std::move(note)};
}

DeltaSpec vals(std::initializer_list<R> v) { return DeltaSpec::of(std::vector<R>(v)); }

DeltaSpec with(DeltaSpec s, const R& extra) {
  if (s.all) return s;
  s.values.push_back(extra);
  return DeltaSpec::of(s.values);
}

// every 2-dim algebra satisfies the SLA pair at δ = 1; the SLA column leaves that out
DeclaredProperty sla2(const DeltaSpec& marked) {
  if (marked.all) return prop("cld23", "sla", marked);
  return prop("cld23", "sla", marked, with(marked, R(1)), "SLA at delta=1 holds for every 2-dimensional algebra");
}

// commutative rows: BD at δ = 1 is automatic and the column omits it
DeclaredProperty bd_comm(const std::string& table, const DeltaSpec& marked) {
  return prop(table, "delta_bd", marked, with(marked, R(1)), "commutative, so delta-BD also holds at delta=1");
}

const R half(1, 2);

std::vector<CorpusEntry> build_corpus() {
  std::vector<CorpusEntry> C;
  auto fixed = [&](std::string id, std::vector<std::string> tables, std::function<Algebra()> b,
                   std::vector<DeclaredProperty> d) {
    CorpusEntry e;
    e.id = std::move(id);
    e.tables = std::move(tables);
    e.build = [b](const std::vector<Rational>&) { return b(); };
    e.declared = std::move(d);
    C.push_back(std::move(e));
  };
  auto param = [&](std::string id, std::vector<std::string> tables, std::vector<std::string> names,
                   std::function<Algebra(const std::vector<Rational>&)> b, std::vector<DeclaredProperty> d,
                   std::vector<std::vector<Rational>> excluded = {},
                   std::function<std::optional<std::vector<Rational>>(const std::vector<Rational>&)> twin = nullptr) {
    CorpusEntry e;
    e.id = std::move(id);
    e.tables = std::move(tables);
    e.parameters = std::move(names);
    e.build = std::move(b);
    e.declared = std::move(d);
    e.excluded_params = std::move(excluded);
    e.twin = std::move(twin);
    C.push_back(std::move(e));
  };
  const auto all = DeltaSpec::every(), none = DeltaSpec::none();
  const std::string LN = "cldn", ZN = "cldz", SB = "cld23", N3 = "nil3", RA = "remark_aar", RL = "annid_remark";
  const std::string sla = "sla", bd = "delta_bd", leib = "delta_leibniz_right", zinb = "delta_zinbiel";

  // ---- two-dimensional algebras (kv16 names) ----
  fixed("A3", {LN, ZN, SB}, [] { return table(2, {{1, 1, {{2, R(1)}}}}); },
        {prop(LN, leib, all), prop(ZN, zinb, all), sla2(all), prop(SB, bd, all)});
  fixed("B2(1)", {LN}, [] { return table(2, {{2, 1, {{1, R(1)}}}}); }, {prop(LN, leib, vals({R(0)}))});
  fixed("B2(0)", {LN, ZN}, [] { return table(2, {{1, 2, {{1, R(1)}}}}); },
        {prop(LN, leib, vals({R(1)})), prop(ZN, zinb, vals({R(0)}))});
  fixed("B3", {LN, SB}, [] { return table(2, {{1, 2, {{2, R(1)}}}, {2, 1, {{2, R(-1)}}}}); },
        {prop(LN, leib, vals({R(1)})), sla2(vals({R(-1)})), prop(SB, bd, vals({R(1), R(-1)}))});
  fixed("D2(0,0)", {LN, SB}, [] { return table(2, {{1, 1, {{1, R(1)}}}}); },
        {prop(LN, leib, vals({half})), sla2(vals({half})), bd_comm(SB, vals({half}))});
  fixed("D2(0,1)", {LN}, [] { return table(2, {{1, 1, {{1, R(1)}}}, {2, 1, {{2, R(1)}}}}); },
        {prop(LN, leib, vals({half}))});
  fixed("D2(1,1)", {LN, SB}, [] { return table(2, {{1, 1, {{1, R(1)}}}, {1, 2, {{2, R(1)}}}, {2, 1, {{2, R(1)}}}}); },
        {prop(LN, leib, vals({half})), sla2(vals({half})), bd_comm(SB, vals({half}))});
  fixed("E1(1,0,0,1)", {LN},
        [] { return table(2, {{1, 1, {{1, R(1)}}}, {1, 2, {{1, R(1)}}}, {2, 1, {{2, R(1)}}}, {2, 2, {{2, R(1)}}}}); },
        {prop(LN, leib, vals({half}))});
  fixed("E1(0,0,0,0)", {LN, SB}, [] { return table(2, {{1, 1, {{1, R(1)}}}, {2, 2, {{2, R(1)}}}}); },
        {prop(LN, leib, vals({half})), sla2(vals({half})), bd_comm(SB, vals({half}))});

  fixed("A1(1/2)", {SB},
        [] { return table(2, {{1, 1, {{1, R(1)}, {2, R(1)}}}, {1, 2, {{2, half}}}, {2, 1, {{2, half}}}}); },
        {sla2(none), prop(SB, bd, vals({R(1)}))});
  fixed("A2", {SB}, [] { return table(2, {{1, 1, {{2, R(1)}}}, {1, 2, {{2, R(1)}}}, {2, 1, {{2, R(-1)}}}}); },
        {sla2(vals({R(-1)})), prop(SB, bd, vals({R(1)}))});
  fixed("A4(0)", {SB}, // printed row has e1e2 = e2, which fails its own SLA marking; the source
        // classification's A4(0) has e1e2 = e1 and matches
        [] { return table(2, {{1, 1, {{2, R(1)}}}, {1, 2, {{1, R(1)}}}, {2, 1, {{1, R(-1)}}}}); },
        {sla2(vals({R(-1)})), prop(SB, bd, none)});
  C.back().printed = [] { return table(2, {{1, 1, {{2, R(1)}}}, {1, 2, {{2, R(1)}}}, {2, 1, {{1, R(-1)}}}}); };
  C.back().printed_note = "printed e1e2 = e2 passes SLA only at delta=1, not at the marked -1";
  param("B2(alpha)", {SB}, {"alpha"},
        [](const std::vector<R>& p) { return table(2, {{1, 2, {{1, R(1) - p[0]}}}, {2, 1, {{1, p[0]}}}}); },
        {sla2(none), prop(SB, bd, vals({R(1)}))});
  fixed("C(1/2,0)", {SB},
        // printed e2e1 = e2/2 fails the BD marking; C(a,b) in the source classification
        // has e2e1 = a e1 - b e2, i.e. e1/2 here
        [] { return table(2, {{1, 1, {{2, R(1)}}}, {1, 2, {{1, half}}}, {2, 1, {{1, half}}}, {2, 2, {{2, R(1)}}}}); },
        {sla2(none), prop(SB, bd, vals({R(1)}))});
  C.back().printed = [] {
    return table(2, {{1, 1, {{2, R(1)}}}, {1, 2, {{1, half}}}, {2, 1, {{2, half}}}, {2, 2, {{2, R(1)}}}});
  };
  C.back().printed_note = "printed e2e1 = e2/2 is delta-BD for no delta, against the marked 1";
  param("D1(alpha,0)", {SB}, {"alpha"},
        [](const std::vector<R>& p) {
          return table(2, {{1, 1, {{1, R(1)}}}, {1, 2, {{1, R(1) - p[0]}}}, {2, 1, {{1, p[0]}}}});
        },
        {sla2(none), prop(SB, bd, vals({R(1)}))});
  param("D2(alpha,alpha)", {SB}, {"alpha"},
        [](const std::vector<R>& p) { return table(2, {{1, 1, {{1, R(1)}}}, {1, 2, {{2, p[0]}}}, {2, 1, {{2, p[0]}}}}); },
        {sla2(none), prop(SB, bd, vals({R(1)}))}, {{R(0)}, {R(1)}});
  fixed("D3(0,0)", {SB}, [] { return table(2, {{1, 1, {{1, R(1)}}}, {1, 2, {{1, R(1)}}}, {2, 1, {{1, R(-1)}}}}); },
        {sla2(none), prop(SB, bd, vals({R(1)}))});
  param("E1(alpha,beta,alpha,beta)", {SB}, {"alpha", "beta"},
        [](const std::vector<R>& p) {
          return table(2, {{1, 1, {{1, R(1)}}},
                           {1, 2, {{1, p[0]}, {2, p[1]}}},
                           {2, 1, {{1, p[0]}, {2, p[1]}}},
                           {2, 2, {{2, R(1)}}}});
        },
        {sla2(none), prop(SB, bd, vals({R(1)}))},
        // (0,0) is its own row; (0,1) and (1,0) are unital with an idempotent, i.e. isomorphic to it
        {{R(0), R(0)}, {R(0), R(1)}, {R(1), R(0)}});

  // ---- three-dimensional nilalgebras (ks25 names) ----
  fixed("g1", {N3}, [] { return table(3, skew({{2, 3, {{1, R(1)}}}})); }, {prop(N3, bd, all)});
  fixed("g2", {N3}, [] { return table(3, skew({{1, 3, {{1, R(1)}}}, {2, 3, {{2, R(1)}}}})); },
        {prop(N3, bd, vals({R(1), R(-1)}))});
  param("g3(alpha)", {N3}, {"alpha"},
        [](const std::vector<R>& p) { return table(3, skew({{1, 3, {{1, R(1)}, {2, R(1)}}}, {2, 3, {{2, p[0]}}}})); },
        {prop(N3, bd, vals({R(1), R(-1)}))}, {},
        [](const std::vector<R>& p) -> std::optional<std::vector<R>> {
          if (p[0].is_zero()) return std::nullopt;
          return std::vector<R>{p[0].inverse()};
        });
  fixed("g4", {N3}, [] { return table(3, skew({{1, 2, {{3, R(1)}}}, {1, 3, {{2, R(-1)}}}, {2, 3, {{1, R(1)}}}})); },
        {prop(N3, bd, vals({R(1), R(-1)}))});
  param("calA1(alpha)", {N3}, {"alpha"},
        [](const std::vector<R>& p) {
          return table(3, skew({{1, 2, {{3, R(1)}}}, {1, 3, {{1, R(1)}, {3, R(1)}}}, {2, 3, {{2, p[0]}}}}));
        },
        {prop(N3, bd, vals({R(-1)}))}, {},
        [](const std::vector<R>& p) -> std::optional<std::vector<R>> {
          if (p[0].is_zero()) return std::nullopt;
          return std::vector<R>{p[0].inverse()};
        });
  fixed("calA2", {N3}, [] { return table(3, skew({{1, 2, {{1, R(1)}}}, {2, 3, {{2, R(1)}}}})); },
        {prop(N3, bd, vals({R(-1)}))});
  fixed("calA3", {N3}, [] { return table(3, skew({{1, 2, {{3, R(1)}}}, {1, 3, {{1, R(1)}}}, {2, 3, {{2, R(1)}}}})); },
        {prop(N3, bd, vals({R(-1)}))});
  fixed("calN1", {N3}, [] { return table(3, {{1, 1, {{2, R(1)}}}}); }, {prop(N3, bd, all)});
  fixed("calN2", {N3}, [] { return table(3, {{1, 1, {{2, R(1)}}}, {1, 3, {{1, R(1)}}}, {3, 1, {{1, R(-1)}}}}); },
        {prop(N3, sla, vals({R(1), R(-1)}))});
  fixed("calN3", {N3}, [] { return table(3, {{1, 1, {{2, R(1)}}}, {1, 3, {{3, R(1)}}}, {3, 1, {{3, R(-1)}}}}); },
        {prop(N3, bd, vals({R(1), R(-1)}))});
  fixed("calN4", {N3}, [] { return table(3, {{1, 1, {{2, R(1)}}}, {1, 3, {{2, R(1)}}}, {3, 1, {{2, R(-1)}}}}); },
        {prop(N3, bd, all)});
  fixed("calN5", {N3},
        [] { return table(3, {{1, 1, {{2, R(1)}}}, {1, 3, {{3, R(1)}}}, {3, 1, {{3, R(-1)}}}, {3, 3, {{2, R(1)}}}}); },
        {prop(N3, sla, vals({R(1), R(-1)}))});
  param("calN6(alpha)", {N3}, {"alpha"},
        [](const std::vector<R>& p) {
          return table(3, {{1, 1, {{2, R(1)}}}, {1, 3, {{2, p[0]}}}, {3, 1, {{2, -p[0]}}}, {3, 3, {{2, R(1)}}}});
        },
        {prop(N3, bd, all)}, {},
        [](const std::vector<R>& p) -> std::optional<std::vector<R>> { return std::vector<R>{-p[0]}; });
  fixed("N1", {N3}, [] { return table(3, {{1, 1, {{2, R(1)}}}, {2, 1, {{3, R(1)}}}}); }, {prop(N3, bd, vals({R(1)}))});
  param("N2(alpha)", {N3}, {"alpha"},
        [](const std::vector<R>& p) { return table(3, {{1, 1, {{2, R(1)}}}, {1, 2, {{3, R(1)}}}, {2, 1, {{3, p[0]}}}}); },
        {prop(N3, bd, vals({R(1)}))}, {{R(1)}, {R(-1)}});
  fixed("N2(1)", {N3}, [] { return table(3, {{1, 1, {{2, R(1)}}}, {1, 2, {{3, R(1)}}}, {2, 1, {{3, R(1)}}}}); },
        {bd_comm(N3, vals({half}))});
  fixed("N2(-1)", {N3}, [] { return table(3, {{1, 1, {{2, R(1)}}}, {1, 2, {{3, R(1)}}}, {2, 1, {{3, R(-1)}}}}); },
        {prop(N3, sla, vals({R(-1)}), vals({R(-1), R(1)}), "delta-BD holds at delta=1 here, and BD implies SLA")});
  fixed("boldN1", {N3}, [] { return table(3, {{1, 1, {{2, R(1)}}}, {2, 2, {{3, R(1)}}}}); }, {prop(N3, bd, vals({R(1)}))});
  fixed("boldN2", {N3}, [] { return table(3, {{1, 1, {{2, R(1)}}}, {2, 1, {{3, R(1)}}}, {2, 2, {{3, R(1)}}}}); },
        {prop(N3, bd, vals({R(1)}))});

  // ---- seven-dimensional antiassociative examples ----
  const Rules frak_a = skew({{1, 2, {{4, R(1)}}},
                             {1, 3, {{5, R(1)}}},
                             {1, 6, {{7, R(1)}}},
                             {2, 3, {{6, R(1)}}},
                             {2, 5, {{7, R(-1)}}},
                             {3, 4, {{7, R(1)}}}});
  fixed("frakA", {RA}, [frak_a] { return table(7, frak_a); },
        {prop(RA, "antiassociative", all), prop(RA, "anti_right_commutative", all), prop(RA, "anticommutative", all)});
  fixed("frakB", {RA},
        [frak_a] {
          Rules r = frak_a;
          r.push_back({1, 1, {{7, R(1)}}});
          return table(7, r);
        },
        {prop(RA, "antiassociative", all), prop(RA, "anti_right_commutative", all), prop(RA, "anticommutative", none)});

  // ---- δ = 0 counterexample to the right-annihilator ideal property ----
  fixed("frakL_remark", {RL}, [] { return table(2, {{1, 2, {{2, R(1)}}}}); }, {prop(RL, leib, vals({R(0)}))});
  return C;
}

}  // namespace

const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> c = build_corpus();
  return c;
}

const CorpusEntry& corpus_entry(const std::string& id) {
  for (const auto& e : corpus())
    if (e.id == id) return e;
  throw UnknownEntry("no corpus entry '" + id + "'");
}

std::vector<std::string> corpus_tables() { return {"cldn", "cldz", "cld23", "nil3", "remark_aar", "annid_remark"}; }

std::string table_title(const std::string& t) {
  if (t == "cldn") return "two-dimensional delta-Leibniz algebras";
  if (t == "cldz") return "two-dimensional delta-Zinbiel algebras";
  if (t == "cld23") return "two-dimensional SLA and delta-BD algebras";
  if (t == "nil3") return "three-dimensional nilalgebras";
  if (t == "remark_aar") return "seven-dimensional antiassociative anti-right-commutative examples";
  if (t == "annid_remark") return "delta = 0 right-annihilator counterexample";
  throw UnknownEntry("no table '" + t + "'");
}

}  // namespace deltaforge
