#include "sapp/axioms.hpp"

#include "sapp/parser.hpp"

namespace sapp {

AxiomName axiom_name_from_string(const std::string& s) {
  if (s == "lambda1") return AxiomName::lambda1;
  if (s == "lambda2") return AxiomName::lambda2;
  if (s == "lambda3") return AxiomName::lambda3;
  if (s == "lambda4") return AxiomName::lambda4;
  if (s == "lambda5") return AxiomName::lambda5;
  if (s == "lambda6") return AxiomName::lambda6;
  throw Error("unknown axiom '" + s + "'; expected lambda1..lambda6");
}

std::string to_string(AxiomName name) {
  switch (name) {
    case AxiomName::lambda1: return "lambda1";
    case AxiomName::lambda2: return "lambda2";
    case AxiomName::lambda3: return "lambda3";
    case AxiomName::lambda4: return "lambda4";
    case AxiomName::lambda5: return "lambda5";
    case AxiomName::lambda6: return "lambda6";
  }
  return "?";
}

namespace {

std::string lambda1_text(unsigned n) {
  std::string prefix, premise, conclusion;
  for (unsigned i = 1; i <= n; ++i) {
    const std::string yi = "y" + std::to_string(i);
    prefix += "forall " + yi + ". ";
    premise += (i > 1 ? " & " : "") + std::string("O(s,") + yi + ")";
    conclusion += "t != " + yi + " & ";
  }
  return prefix + "forall s. (" + premise + " -> exists t. (" + conclusion + "O(s,t)))";
}

std::string lambda2_text(unsigned n) {
  std::string prefix, body;
  for (unsigned i = 1; i <= n; ++i) {
    const std::string yi = "y" + std::to_string(i);
    prefix += "forall " + yi + ". ";
    body += (i > 1 ? " & " : "") + std::string("!O(s,") + yi + ")";
  }
  return prefix + "exists s. (" + body + ")";
}

} // namespace

std::string axiom_text(AxiomName name, std::optional<unsigned> n) {
  const bool schema = name == AxiomName::lambda1 || name == AxiomName::lambda2;
  if (!schema && n.has_value())
    throw Error("axiom " + to_string(name) + " takes no schema parameter");
  if (schema && !n.has_value())
    throw Error("axiom " + to_string(name) + " requires a schema parameter n");

  switch (name) {
    case AxiomName::lambda1:
      if (*n < 1) throw Error("lambda1: n must be >= 1");
      return lambda1_text(*n);
    case AxiomName::lambda2:
      if (*n < 2) throw Error("lambda2: n must be >= 2");
      return lambda2_text(*n);
    case AxiomName::lambda3:
      return "forall x. !O(x,x)";
    case AxiomName::lambda4:
      return "forall x. forall y. (O(x,y) -> O(y,x))";
    case AxiomName::lambda5:
      return "forall x. exists y. O(x,y)";
    case AxiomName::lambda6:
      return "forall x. forall y. forall z. forall t. "
             "(O(x,z) & O(y,z) & O(x,t) -> O(y,t))";
  }
  throw Error("unknown axiom");
}

FormulaPtr axiom(AxiomName name, std::optional<unsigned> n) {
  return parse(axiom_text(name, n));
}

} // namespace sapp
