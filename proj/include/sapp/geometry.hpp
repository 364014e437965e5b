#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sapp/formula.hpp"
#include "sapp/rational.hpp"

namespace sapp {

// A line in the rational plane: either x = const or y = slope*x + intercept.
// Structural equality coincides with geometric equality because rationals
// are kept reduced. No floating point anywhere in this module.
class Line {
public:
  static Line vertical(Rational x) { return Line(true, std::move(x), Rational(0)); }
  static Line slanted(Rational slope, Rational intercept) {
    return Line(false, std::move(slope), std::move(intercept));
  }

  bool is_vertical() const { return vertical_; }
  const Rational& vertical_x() const { return a_; }
  const Rational& slope() const { return a_; }
  const Rational& intercept() const { return b_; }

  friend bool operator==(const Line& x, const Line& y) {
    return x.vertical_ == y.vertical_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const Line& x, const Line& y) { return !(x == y); }
  friend bool operator<(const Line& x, const Line& y) {
    if (x.vertical_ != y.vertical_) return x.vertical_ < y.vertical_;
    if (x.a_ != y.a_) return x.a_ < y.a_;
    return x.b_ < y.b_;
  }

private:
  Line(bool vertical, Rational a, Rational b)
      : vertical_(vertical), a_(std::move(a)), b_(std::move(b)) {}

  bool vertical_;
  Rational a_, b_; // (x, unused) or (slope, intercept)
};

std::string to_string(const Line& a);

// Perpendicularity: one vertical against slope 0, or slope product -1.
bool perp(const Line& a, const Line& b);

// Distinct with equal direction / directions differ.
bool parallel(const Line& a, const Line& b);
bool converge(const Line& a, const Line& b);

// Membership in the substructure with all three coordinates nonzero:
// slanted, slope != 0, intercept != 0.
bool in_A_star(const Line& a);

// (slope, -1/slope, intercept); requires in_A_star.
struct Coords {
  Rational a1, a2, a3;
};
Coords coords(const Line& a);

// n distinct rational lines, deterministic in the seed. For n >= 4 the
// first three lines are a parallel pair plus a perpendicular partner, so
// every sample is guaranteed at least two parallels and one perp pair.
std::vector<Line> sample_FQ(std::uint64_t seed, std::size_t n);

// Finite L-structure: an indexed domain with a symmetric irreflexive
// relation, optionally remembering the source lines.
class FiniteStructure {
public:
  FiniteStructure(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> pairs,
                  std::optional<std::vector<Line>> provenance = std::nullopt);

  std::size_t size() const { return n_; }
  bool perp_at(std::size_t i, std::size_t j) const { return rel_[i * n_ + j]; }
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const; // i < j, sorted
  const std::optional<std::vector<Line>>& provenance() const { return provenance_; }

private:
  std::size_t n_;
  std::vector<bool> rel_;
  std::optional<std::vector<Line>> provenance_;
};

// Structure of the given lines under perp; lines must be pairwise distinct.
FiniteStructure to_structure(const std::vector<Line>& lines);

// Tarskian truth over the finite domain; quantifiers range over all
// elements, free variables read from the valuation (by rendered name).
using Valuation = std::map<std::string, std::size_t>;
bool eval_finite(const FormulaPtr& f, const FiniteStructure& m, const Valuation& v = {});

// The definable "does not intersect" relation over the finite domain:
// x ~ y iff for every z, not perp(x,z) or perp(y,z). Over truncations this
// need not be an equivalence; direction_view checks and reports witnesses.
struct DirectionView {
  std::vector<std::vector<std::size_t>> classes;  // each sorted, by least member
  std::vector<std::size_t> class_of;              // element -> class position
  std::vector<std::vector<std::size_t>> partners; // class -> classes related via perp
};

DirectionView direction_view(const FiniteStructure& m); // throws Error with witnesses
std::optional<DirectionView> try_direction_view(const FiniteStructure& m);

std::vector<std::vector<std::size_t>> r1_classes(const FiniteStructure& m);
std::vector<std::vector<std::size_t>> r2_pairs(const FiniteStructure& m);

// Input plus, for every represented direction that lacks one, a canonical
// perpendicular witness through the origin. Idempotent up to set equality.
std::vector<Line> witness_closure(const std::vector<Line>& lines);

enum class DefinablePred { P, C }; // parallel / convergent

struct DefinabilityReport {
  std::size_t pairs_checked = 0;
  struct Disagreement {
    std::size_t i, j;
    bool geometric, defined;
  };
  std::vector<Disagreement> disagreements;
};

// Compares the geometric predicate against its defining formula
//   P: x != y & exists z. (O(x,z) & O(y,z))
//   C: exists z. (O(x,z) & !O(y,z))
// evaluated over the witness closure, for every ordered pair of input
// lines (the diagonal included).
DefinabilityReport check_definability(DefinablePred pred, const std::vector<Line>& lines);

// Transposing two parallel (or identical) lines must leave the perp
// relation invariant; returns the verification result. Throws Error when
// a or b is missing from the set or they are distinct non-parallels.
bool swap_preserves_O(const std::vector<Line>& lines, const Line& a, const Line& b);

} // namespace sapp
