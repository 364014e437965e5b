#pragma once

#include <boost/rational.hpp>
#include <string>

namespace sapp {

// Exact rational arithmetic. boost::rational keeps values reduced with a
// positive denominator, which is exactly the representation contract here;
// all slopes and intercepts in this toolkit stay far below overflow range.
using Rational = boost::rational<long long>;

// Parses "p/q" (q > 0 after sign normalization) or a bare integer "p".
// Reduction is not required on input. Throws Error on malformed text or
// zero denominator.
Rational parse_rational(const std::string& text);

// Always renders the reduced form "p/q" (integers as "p/1").
std::string format_rational(const Rational& r);

} // namespace sapp
