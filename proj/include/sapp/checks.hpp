#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sapp/decider.hpp"

namespace sapp {

struct RunConfig {
  unsigned cap_direct = 8;
  unsigned cap_translation = 4;
  unsigned eq_cap = 14;
  std::uint64_t seed = 1;

  DecideOptions decide_options() const {
    DecideOptions opt;
    opt.cap_direct = cap_direct;
    opt.cap_translation = cap_translation;
    opt.eq.quantifier_cap = eq_cap;
    return opt;
  }
};

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CheckItem> items;

  bool pass() const {
    for (const auto& i : items)
      if (!i.pass) return false;
    return true;
  }
};

// Suites, in the order they run under `check` with no argument:
//   axioms             axiom validity on both engines
//   agreement          direct vs translation on the sentence corpora
//   completeness       exactly one of f, !f valid, per corpus sentence
//   eq-saturation      fresh-id rule vs brute force at sizes q, q+1, q+2
//   definability       parallel/convergent against their defining formulas
//   non-finite-ax      lambda1 cutoff pattern on the S truncations
//   ef-soundness       game monotonicity, size pattern, rank-2 transfer
//   translation-shape  3x quantifier law, kappa containment, Def-2 checks
//   determinism        double run of the seeded suites, byte-compared
std::vector<std::string> suite_names();

SuiteResult run_suite(const std::string& name, const RunConfig& cfg);
std::vector<SuiteResult> run_all_suites(const RunConfig& cfg);

// One line per item ("ok <suite>: ..."/"FAIL <suite>: ...") plus a
// summary; no timing or machine state, so reports are byte-reproducible.
std::string render_report(const std::vector<SuiteResult>& results);

// Same content, one JSON record per line.
std::string render_report_records(const std::vector<SuiteResult>& results);

} // namespace sapp
