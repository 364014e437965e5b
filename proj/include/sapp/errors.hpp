#pragma once

#include <stdexcept>
#include <string>

namespace sapp {

// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Concrete-syntax error; positions are 1-based.
class ParseError : public Error {
public:
  ParseError(const std::string& msg, int line, int column)
      : Error(msg + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line(line), column(column) {}

  int line;
  int column;
};

// A formula expected to be a sentence has a free variable.
class FreeVariableError : public Error {
public:
  explicit FreeVariableError(const std::string& name)
      : Error("free variable '" + name + "' in a formula required to be a sentence"),
        name(name) {}

  std::string name;
};

// A resource guard (quantifier count, game rounds, domain size) was exceeded.
// Catchable and distinct from semantic errors.
class CapError : public Error {
public:
  using Error::Error;
};

// A formula is in the wrong language for the requested operation
// (e.g. a perpendicularity atom fed to the pure-equality decider).
class LanguageError : public Error {
public:
  using Error::Error;
};

} // namespace sapp
