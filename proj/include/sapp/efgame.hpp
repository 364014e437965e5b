#pragma once

#include <cstdint>
#include <optional>

#include "sapp/geometry.hpp"

namespace sapp {

struct EfOptions {
  unsigned max_rounds = 4;
  std::size_t max_domain = 40;
};

struct EfStats {
  std::uint64_t states = 0; // game positions expanded
  std::size_t memo = 0;     // memo entries at the end
};

// True iff the duplicator wins the k-round game between a and b, i.e. the
// structures agree on every sentence of quantifier rank <= k. Exhaustive
// minimax over spoiler/duplicator moves; positions are memoized up to
// automorphism when both structures decompose into direction classes with
// a class-determined relation and at most one partner per class (the
// decomposition every perpendicularity truncation has), and on the raw
// pick set otherwise. Throws CapError over the round or domain caps.
bool ef_equivalent(const FiniteStructure& a, const FiniteStructure& b, unsigned k,
                   const EfOptions& opt = {}, EfStats* stats = nullptr);

// Least k <= max_k distinguishing a from b, or nullopt when the duplicator
// survives every length up to max_k.
std::optional<unsigned> distinguishing_rank(const FiniteStructure& a,
                                            const FiniteStructure& b, unsigned max_k,
                                            const EfOptions& opt = {});

// The 2k*k-line truncation with slopes {1..k, -1, -1/2, .., -1/k} and
// intercepts {1..k}, with line provenance.
FiniteStructure gen_S(unsigned k);

} // namespace sapp
