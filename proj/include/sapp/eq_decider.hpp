#pragma once

#include <cstdint>
#include <vector>

#include "sapp/formula.hpp"

namespace sapp {

struct EqOptions {
  // Resource guard on the number of quantifiers, not a semantic limit;
  // exceeding it raises CapError.
  unsigned quantifier_cap = 14;
};

struct EqStats {
  std::uint64_t branches = 0;  // candidate values tried at quantifiers
  std::size_t memo_peak = 0;   // entries in the memo table at the end
};

// Truth of a pure-equality sentence in every infinite structure. At each
// quantifier the candidate values are the ids already bound plus a single
// fresh id; by the symmetry of infinite pure-equality structures this
// exhausts all cases, and eval_finite_eq is the oracle backing that rule.
// Subformula verdicts are memoized on the equality partition of the bound
// ids, never on the raw ids. Throws LanguageError on perpendicularity
// atoms, FreeVariableError on open formulas, CapError over the cap.
bool decide_eq_infinity(const FormulaPtr& f, const EqOptions& opt = {},
                        EqStats* stats = nullptr);

// Brute-force truth over a bare set of the given cardinality; the naive
// oracle for decide_eq_infinity. Same language and cap guards.
bool eval_finite_eq(const FormulaPtr& f, unsigned domain_size, const EqOptions& opt = {});

// Evaluates an open pure-equality formula whose free coordinate slots are
// fed from `env` (occurrence of depth index d reads env[d-1]), using the
// fresh-id rule for the remaining quantifiers. Exposed so tests can replay
// evaluations under permuted ids.
bool eval_eq_with_env(const FormulaPtr& f, const std::vector<unsigned>& env,
                      const EqOptions& opt = {});

} // namespace sapp
