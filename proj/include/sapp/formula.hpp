#pragma once

#include <memory>
#include <set>
#include <string>

#include "sapp/errors.hpp"

namespace sapp {

// A variable reference. Bound occurrences carry the quantifier-depth index
// of their binder (the binder at nesting depth d has index d, 1-based);
// free occurrences carry index 0 and are identified by name. `coord` is 0
// for plain line variables and 1..3 for the coordinate variables produced
// by the translation into the pure-equality language; the rendered name of
// a coordinate variable is "x<base>_<coord>".
struct Var {
  unsigned index = 0;
  unsigned coord = 0;
  std::string name;
};

// Free/unresolved variable with a given name.
inline Var line_var(std::string name) { return Var{0, 0, std::move(name)}; }

// Coordinate `c` of translated variable `base`. Its depth index in a
// translated formula is 3*(base-1)+c because every original quantifier
// expands to a block of three.
Var coord_var(unsigned base, unsigned c);

enum class Kind { AtomPerp, AtomEq, Not, And, Exists };

// Language tag: L has the perpendicularity atom, L1 is pure equality.
enum class Lang { L, L1 };

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable formula tree over the core connective set {not, and, exists}.
// All derived forms (or, ->, <->, forall, !=) exist only in concrete syntax
// and in the builder helpers below. Safe to share between threads.
class Formula {
public:
  Kind kind() const { return kind_; }

  // atom arguments
  const Var& lhs() const { return lhs_; }
  const Var& rhs() const { return rhs_; }

  // quantified variable of an Exists node
  const Var& binder() const { return lhs_; }

  // child of Not / body of Exists
  const FormulaPtr& child() const { return left_; }

  // conjuncts of And
  const FormulaPtr& left() const { return left_; }
  const FormulaPtr& right() const { return right_; }

  static FormulaPtr atom_perp(Var a, Var b);
  static FormulaPtr atom_eq(Var a, Var b);
  static FormulaPtr make_not(FormulaPtr f);
  static FormulaPtr make_and(FormulaPtr a, FormulaPtr b);
  static FormulaPtr make_exists(Var v, FormulaPtr body);

private:
  Formula(Kind k, Var a, Var b, FormulaPtr l, FormulaPtr r)
      : kind_(k), lhs_(std::move(a)), rhs_(std::move(b)),
        left_(std::move(l)), right_(std::move(r)) {}

  Kind kind_;
  Var lhs_, rhs_;
  FormulaPtr left_, right_;
};

// Derived-form builders; each desugars into the core exactly the way the
// parser does, so programmatic and parsed trees compare equal.
FormulaPtr make_neq(Var a, Var b);                    // !(a = b)
FormulaPtr make_or(FormulaPtr a, FormulaPtr b);       // !(!a & !b)
FormulaPtr make_implies(FormulaPtr a, FormulaPtr b);  // !(a & !b)
FormulaPtr make_iff(FormulaPtr a, FormulaPtr b);      // (a -> b) & (b -> a), desugared
FormulaPtr make_forall(Var v, FormulaPtr body);       // !(exists v. !body)

// Structural equality up to bound-variable names (alpha-equivalence on
// depth-indexed trees). Free occurrences compare by rendered name.
bool equal(const FormulaPtr& a, const FormulaPtr& b);

// True iff some subtree of `whole` equals `sub`.
bool contains_subformula(const FormulaPtr& whole, const FormulaPtr& sub);

std::size_t node_count(const FormulaPtr& f);

// L1 iff no perpendicularity atom occurs.
Lang language(const FormulaPtr& f);

struct Metrics {
  unsigned quantifier_count = 0;           // number of Exists nodes
  unsigned quantifier_rank = 0;            // maximal Exists nesting depth
  std::set<std::string> free_variables;    // rendered names of unbound occurrences
};

Metrics metrics(const FormulaPtr& f);

// Concrete syntax; parse(print(f)) is structurally equal to f.
std::string print(const FormulaPtr& f);

// Rendered name of a variable ("x<index>" when the display name is absent).
std::string var_name(const Var& v);

// Alpha-renames a sentence so the variable bound at quantifier nesting
// depth d carries index d. Binding is resolved by display name with the
// usual innermost-shadowing rule. Idempotent; tree shape is preserved.
// Throws FreeVariableError when f is not a sentence.
FormulaPtr canonicalize(const FormulaPtr& f);

// Re-derives depth indices by name like canonicalize but leaves free
// occurrences in place with index 0. Used by evaluators that accept open
// formulas.
FormulaPtr annotate(const FormulaPtr& f);

// True iff every binder index equals its nesting depth and every
// occurrence resolves to an enclosing binder.
bool is_canonical(const FormulaPtr& f);

} // namespace sapp
