#pragma once

#include <string>

#include "sapp/formula.hpp"

namespace sapp {

// Parses the concrete syntax
//
//   formula := iff
//   iff     := imp ( "<->" imp )*
//   imp     := or ( "->" or )*            right-associative
//   or      := and ( "|" and )*
//   and     := unary ( "&" unary )*
//   unary   := "!" unary | "exists" ident "." formula
//            | "forall" ident "." formula | atom
//   atom    := "O" "(" ident "," ident ")" | ident "=" ident
//            | ident "!=" ident | "(" formula ")"
//   ident   := [a-z][a-z0-9_]*
//
// into the {not, and, exists} core. Bound occurrences are resolved against
// the innermost enclosing binder of the same name and carry its nesting
// depth as index; free occurrences keep index 0. Throws ParseError with a
// 1-based line/column on malformed input.
FormulaPtr parse(const std::string& text);

} // namespace sapp
