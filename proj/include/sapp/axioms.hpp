#pragma once

#include <optional>
#include <string>

#include "sapp/formula.hpp"

namespace sapp {

enum class AxiomName { lambda1, lambda2, lambda3, lambda4, lambda5, lambda6 };

// "lambda1".."lambda6"; throws Error on anything else.
AxiomName axiom_name_from_string(const std::string& s);
std::string to_string(AxiomName name);

// Concrete syntax of the axiom. lambda1 is a schema over n >= 1, lambda2
// over n >= 2; the remaining axioms take no parameter.
//
//   lambda1(n): forall y1..yn. forall s. (O(s,y1) & .. & O(s,yn)
//               -> exists t. (t != y1 & .. & t != yn & O(s,t)))
//   lambda2(n): forall y1..yn. exists s. (!O(s,y1) & .. & !O(s,yn))
//   lambda3:    forall x. !O(x,x)
//   lambda4:    forall x. forall y. (O(x,y) -> O(y,x))
//   lambda5:    forall x. exists y. O(x,y)
//   lambda6:    forall x. forall y. forall z. forall t.
//               (O(x,z) & O(y,z) & O(x,t) -> O(y,t))
std::string axiom_text(AxiomName name, std::optional<unsigned> n = std::nullopt);

// The axiom as a canonical sentence. Throws Error when n is out of range
// for a schema or supplied for a non-schema axiom.
FormulaPtr axiom(AxiomName name, std::optional<unsigned> n = std::nullopt);

} // namespace sapp
