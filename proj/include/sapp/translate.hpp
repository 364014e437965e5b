#pragma once

#include <cstddef>
#include <vector>

#include "sapp/formula.hpp"
#include "sapp/rational.hpp"

namespace sapp {

// The side condition conjoined at each translated quantifier, with free
// coordinate variables x1_1, x1_2, ..., xn_1, xn_2:
//
//   xn_1 != xn_2
//   & (xi_1 = xn_1 <-> xi_2 = xn_2)   for every i < n
//   & (xi_1 = xn_2 <-> xi_2 = xn_1)   for every i < n
//
// left-folded in that order; kappa(1) is just the inequality. Quantifier
// free. Throws Error for n < 1.
FormulaPtr kappa(unsigned n);

// Compiles a canonical L-sentence into the pure-equality language:
//
//   O(xi,xj)   ->  xi_1 = xj_2
//   xi = xj    ->  xi_1 = xj_1 & xi_3 = xj_3
//   !f, f & g  ->  structural
//   exists xn  ->  exists xn_1. exists xn_2. exists xn_3. (f^ & kappa(n))
//
// The output has exactly three times the quantifiers of the input and no
// simplification is applied, so the shape stays auditable. Throws Error on
// non-canonical input (which covers open formulas).
FormulaPtr translate(const FormulaPtr& f);

// One line worth of coordinates: in a tuple the first two components carry
// the equality pattern constrained by kappa, the third is the intercept.
struct CoordTriple {
  Rational c1, c2, c3;
};

using CoordTuple = std::vector<CoordTriple>;

// kappa_i evaluated on the first 2i slope components of `a` (1-based i).
bool kappa_holds(const CoordTuple& a, std::size_t i);

// True iff `b` is corresponding to `a`: componentwise nonzero, the c1
// freshness/equality pattern of `a` is reproduced in `b`, every b.c2 is
// the negative reciprocal of b.c1, and intercepts agree. Requires |a|=|b|
// and `a` admissible (kappa_i for every i, components nonzero); violations
// of the requirement throw Error naming the failing index.
bool is_corresponding(const CoordTuple& b, const CoordTuple& a);

// Deterministic corresponding witness for an admissible tuple: repeated c1
// values are mapped like their first occurrence, fresh ones become the
// smallest positive integer whose value, negation and reciprocals are all
// unused so far.
CoordTuple make_corresponding(const CoordTuple& a);

} // namespace sapp
