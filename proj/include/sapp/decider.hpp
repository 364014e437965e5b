#pragma once

#include <cstdint>
#include <string>

#include "sapp/eq_decider.hpp"
#include "sapp/formula.hpp"

namespace sapp {

// By completeness of the theory, every sentence is either Valid (entailed)
// or Invalid (its negation is entailed); there is no third case.
enum class Verdict { Valid, Invalid };

inline std::string to_string(Verdict v) { return v == Verdict::Valid ? "Valid" : "Invalid"; }

struct DecideOptions {
  unsigned cap_direct = 8;       // quantifiers admitted by the direct engine
  unsigned cap_translation = 4;  // original quantifiers admitted by the pipeline
  EqOptions eq;                  // guards for the pure-equality stage

  // Candidate class (d) below; disabling it is a sentinel used by tests to
  // prove the branching is not silently narrowed. The first pick of a run
  // is exempt, since no other class applies to an empty state.
  bool allow_fresh_direction = true;
};

struct DecideStats {
  std::uint64_t branches = 0;
  std::size_t memo_peak = 0;
};

// Direct evaluation in the countable model, abstracted to direction ids
// with a perpendicular pairing and line ids within directions. At each
// quantifier the candidates are
//   (a) every line already bound,
//   (b) a fresh line in every bound direction,
//   (c) a fresh line in the perpendicular partner of every bound
//       direction, creating the partner when absent,
//   (d) a fresh line in a fresh direction.
// Up to automorphism of the model this exhausts the ways a new line can
// relate to finitely many existing ones; the translation pipeline is the
// independent check. O(x,y) holds iff the directions are paired, x = y
// iff direction and line id coincide. Fresh ids are the smallest unused
// integers, so runs are reproducible.
Verdict decide(const FormulaPtr& f, const DecideOptions& opt = {},
               DecideStats* stats = nullptr);

// canonicalize -> translate -> decide_eq_infinity.
Verdict decide_via_translation(const FormulaPtr& f, const DecideOptions& opt = {},
                               EqStats* stats = nullptr);

struct Trace {
  FormulaPtr canonical;
  FormulaPtr translated;
  Verdict direct = Verdict::Invalid;
  Verdict translation = Verdict::Invalid;
  unsigned quantifier_count = 0;
  unsigned translated_quantifier_count = 0;
  std::uint64_t branches_direct = 0;
  std::uint64_t branches_translation = 0;
  std::size_t memo_peak_direct = 0;
  std::size_t memo_peak_translation = 0;
};

// Runs both engines and reports what each saw. Requires the sentence to be
// within both caps.
Trace explain(const FormulaPtr& f, const DecideOptions& opt = {});

} // namespace sapp
