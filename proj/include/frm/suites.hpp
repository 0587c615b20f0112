#pragma once

#include <map>
#include <string>
#include <vector>

#include "frm/corpus.hpp"
#include "frm/json_io.hpp"

namespace frm {

struct SuiteParams {
  CorpusParams corpus;
  std::size_t jobs = 1;
};

struct SuiteFailure {
  std::size_t item = 0;
  std::string origin;
  std::string fingerprint;
  std::string property;
  std::string witness;
  Json input;  // full input document, replayable with `frm check`
};

struct SuiteReport {
  std::string suite;
  SuiteParams params;
  std::size_t items_checked = 0;
  std::size_t instances_checked = 0;  // individual property instances inside the items
  std::map<std::string, std::size_t> instances_by_property;
  std::size_t items_skipped = 0;
  std::vector<std::string> skip_reasons;  // one per skipped item, in item order
  std::vector<SuiteFailure> failures;
  double wall_seconds = 0;  // not serialised, so reports stay byte-identical

  bool passed() const noexcept { return failures.empty(); }
  Json to_json() const;
  std::string summary() const;
};

const std::vector<std::string>& suite_names();

// Throws Error{UnknownSuite}.
SuiteReport run_suite(const std::string& name, const SuiteParams& params);

// All suites over one shared corpus. Same items are enumerated once.
std::vector<SuiteReport> run_suites(const std::vector<std::string>& names, const SuiteParams& params);

}  // namespace frm
