#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "deltaforge/algebra.hpp"

namespace deltaforge {

// a set of δ values as a table marks it: every δ, or a finite list
struct DeltaSpec {
  bool all = false;
  std::vector<Rational> values;
  static DeltaSpec every() { return {true, {}}; }
  static DeltaSpec none() { return {false, {}}; }
  static DeltaSpec of(std::vector<Rational> v);
  bool contains(const Rational& d) const;
  std::string str() const;
};

struct DeclaredProperty {
  std::string table;     // table the marking comes from
  std::string identity;  // registry name
  DeltaSpec marked;      // what the table prints
  DeltaSpec expected;    // exact passing set we hold the computation to (marked + documented implicit members)
  std::string note;      // why expected differs from marked, empty if it doesn't
};

struct CorpusEntry {
  std::string id;
  std::vector<std::string> tables;       // every table the algebra appears in
  std::vector<std::string> parameters;   // names, e.g. {"alpha"}
  std::function<Algebra(const std::vector<Rational>&)> build;
  std::vector<DeclaredProperty> declared;
  // parameter tuples excluded because they are separate rows or degenerate
  std::vector<std::vector<Rational>> excluded_params;
  // isomorphism twins listed by the table: alpha ~ twin(alpha)
  std::function<std::optional<std::vector<Rational>>(const std::vector<Rational>&)> twin;
  // table exactly as printed, when it differs from the one we use (reports flag it)
  std::function<Algebra()> printed;
  std::string printed_note;

  bool parametric() const { return !parameters.empty(); }
  Algebra instance(const std::vector<Rational>& params = {}) const;
  // sample tuples for parametric rows (a single empty tuple otherwise)
  std::vector<std::vector<Rational>> samples() const;
  std::string instance_name(const std::vector<Rational>& params) const;
};

const std::vector<CorpusEntry>& corpus();
const CorpusEntry& corpus_entry(const std::string& id);  // throws UnknownEntry
std::vector<std::string> corpus_tables();                // canonical table order
std::string table_title(const std::string& table);

// default {0, 1, -1, 2, 1/2}; DELTAFORGE_PARAM_SAMPLES="0,1,-1,2,1/2" overrides
std::vector<Rational> parameter_samples();

}  // namespace deltaforge
