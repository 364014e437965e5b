#pragma once

#include <cstdint>
#include <vector>

#include "sapp/formula.hpp"

namespace sapp {

// Every sentence whose prefix uses one or two quantifiers (all
// exists/forall combinations) and whose body is built from the atoms over
// the bound variables with at most two connective nodes from {!, &}.
// Deterministic enumeration order.
std::vector<FormulaPtr> exhaustive_corpus();

// Seeded random sentences with 1..max_q quantifiers and small random
// bodies over {O, =, !=, !, &}.
std::vector<FormulaPtr> random_corpus(std::uint64_t seed, std::size_t count,
                                      unsigned max_q);

// Pure-equality sentences for the saturation checks; every entry has at
// most six quantifiers. Includes translations of small L-sentences.
std::vector<FormulaPtr> l1_corpus();

} // namespace sapp
