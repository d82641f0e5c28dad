#pragma once

#include <optional>
#include <string>
#include <vector>

#include "deltaforge/corpus.hpp"
#include "deltaforge/identities.hpp"

namespace deltaforge {

enum class Status { Pass, Fail, Flagged };
const char* status_name(Status s);

struct Record {
  std::string check;    // section/name, e.g. "membership/cldn"
  std::string subject;  // entry id, theorem name, ...
  Status status = Status::Pass;
  std::string detail;
  double runtime_ms = 0;
};

struct Report {
  std::vector<Record> records;
  std::size_t count(Status s) const;
  std::size_t count_check(const std::string& prefix) const;
  bool ok() const { return count(Status::Fail) == 0; }
  std::string text() const;  // one line per record plus a summary
};

struct SuiteOptions {
  std::optional<std::string> table;  // restrict the corpus sections to one table
  std::optional<std::string> entry;  // restrict to one corpus entry
  // replaces the shipped corpus for the corpus-driven sections
  std::optional<std::vector<CorpusEntry>> corpus;
  // theorem sections (certificates, dualities, dialgebras, extensions, diagnostics);
  // off automatically when a table or entry filter is given
  std::optional<bool> theorems;
  bool timing = true;
};

// what the suite does not check, stated in every rendering
const char* report_scope();

Report run_paper_suite(const SuiteOptions& opt = {});
Report verify_entry(const std::string& id);  // throws UnknownEntry

// exact comparison of a computed passing set with a table expectation
bool delta_set_matches(const DeltaSet& computed, const DeltaSpec& expected);

// the listed degree-3 rewrites, as (word, normal form) in the a,b,c = x,y,z alphabet
struct RewriteCheck {
  std::string word;
  std::string expected;
  std::string computed;
  bool ok = false;
};
std::vector<RewriteCheck> aar_rewrite_checks();
std::vector<RewriteCheck> leibniz_rewrite_checks();

}  // namespace deltaforge
