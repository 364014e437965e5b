#include "sapp/parser.hpp"

#include <cctype>
#include <vector>

namespace sapp {

namespace {

enum class Tok {
  Ident, Perp, Exists, Forall,
  LParen, RParen, Comma, Dot,
  Eq, Neq, Bang, Amp, Pipe, Arrow, Iff,
  End,
};

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

class Lexer {
public:
  explicit Lexer(const std::string& src) : src_(src) {}

  Token next() {
    skip_space();
    const int line = line_, col = col_;
    if (pos_ >= src_.size()) return {Tok::End, "", line, col};

    const char c = src_[pos_];
    if (std::islower(static_cast<unsigned char>(c))) {
      std::string word;
      while (pos_ < src_.size() && (std::islower(static_cast<unsigned char>(src_[pos_])) ||
                                    std::isdigit(static_cast<unsigned char>(src_[pos_])) ||
                                    src_[pos_] == '_'))
        word += take();
      if (word == "exists") return {Tok::Exists, word, line, col};
      if (word == "forall") return {Tok::Forall, word, line, col};
      return {Tok::Ident, word, line, col};
    }
    if (std::isupper(static_cast<unsigned char>(c))) {
      std::string word;
      while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) ||
                                    src_[pos_] == '_'))
        word += take();
      if (word == "O") return {Tok::Perp, word, line, col};
      throw ParseError("unknown predicate symbol '" + word + "'", line, col);
    }
    switch (c) {
      case '(': take(); return {Tok::LParen, "(", line, col};
      case ')': take(); return {Tok::RParen, ")", line, col};
      case ',': take(); return {Tok::Comma, ",", line, col};
      case '.': take(); return {Tok::Dot, ".", line, col};
      case '=': take(); return {Tok::Eq, "=", line, col};
      case '&': take(); return {Tok::Amp, "&", line, col};
      case '|': take(); return {Tok::Pipe, "|", line, col};
      case '!':
        take();
        if (pos_ < src_.size() && src_[pos_] == '=') {
          take();
          return {Tok::Neq, "!=", line, col};
        }
        return {Tok::Bang, "!", line, col};
      case '-':
        take();
        if (pos_ < src_.size() && src_[pos_] == '>') {
          take();
          return {Tok::Arrow, "->", line, col};
        }
        throw ParseError("expected '>' after '-'", line_, col_);
      case '<':
        take();
        if (pos_ + 1 < src_.size() && src_[pos_] == '-' && src_[pos_ + 1] == '>') {
          take();
          take();
          return {Tok::Iff, "<->", line, col};
        }
        throw ParseError("expected '->' after '<'", line_, col_);
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line, col);
    }
  }

private:
  char take() {
    const char c = src_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_space() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) take();
  }

  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
};

class Parser {
public:
  explicit Parser(const std::string& src) : lexer_(src) { advance(); }

  FormulaPtr run() {
    FormulaPtr f = parse_iff();
    expect(Tok::End, "unexpected trailing input");
    return f;
  }

private:
  void advance() { tok_ = lexer_.next(); }

  void expect(Tok k, const char* what) {
    if (tok_.kind != k) throw ParseError(std::string(what) + ", got '" + describe() + "'", tok_.line, tok_.column);
  }

  std::string describe() const { return tok_.kind == Tok::End ? "end of input" : tok_.text; }

  FormulaPtr parse_iff() {
    FormulaPtr f = parse_imp();
    while (tok_.kind == Tok::Iff) {
      advance();
      f = make_iff(std::move(f), parse_imp());
    }
    return f;
  }

  FormulaPtr parse_imp() {
    FormulaPtr f = parse_or();
    if (tok_.kind != Tok::Arrow) return f;
    advance();
    return make_implies(std::move(f), parse_imp());
  }

  FormulaPtr parse_or() {
    FormulaPtr f = parse_and();
    while (tok_.kind == Tok::Pipe) {
      advance();
      f = make_or(std::move(f), parse_and());
    }
    return f;
  }

  FormulaPtr parse_and() {
    FormulaPtr f = parse_unary();
    while (tok_.kind == Tok::Amp) {
      advance();
      f = Formula::make_and(std::move(f), parse_unary());
    }
    return f;
  }

  FormulaPtr parse_unary() {
    switch (tok_.kind) {
      case Tok::Bang: {
        advance();
        return Formula::make_not(parse_unary());
      }
      case Tok::Exists:
      case Tok::Forall: {
        const bool universal = tok_.kind == Tok::Forall;
        advance();
        expect(Tok::Ident, "expected a variable after quantifier");
        const std::string name = tok_.text;
        advance();
        expect(Tok::Dot, "expected '.' after quantified variable");
        advance();
        scope_.push_back(name);
        Var binder{static_cast<unsigned>(scope_.size()), 0, name};
        FormulaPtr body = parse_iff();
        scope_.pop_back();
        return universal ? make_forall(std::move(binder), std::move(body))
                         : Formula::make_exists(std::move(binder), std::move(body));
      }
      default:
        return parse_atom();
    }
  }

  FormulaPtr parse_atom() {
    if (tok_.kind == Tok::Perp) {
      advance();
      expect(Tok::LParen, "expected '(' after O");
      advance();
      Var a = parse_var();
      if (tok_.kind == Tok::RParen)
        throw ParseError("arity mismatch: O expects 2 arguments, got 1", tok_.line, tok_.column);
      expect(Tok::Comma, "expected ',' in O(...)");
      advance();
      Var b = parse_var();
      if (tok_.kind == Tok::Comma)
        throw ParseError("arity mismatch: O expects 2 arguments", tok_.line, tok_.column);
      expect(Tok::RParen, "expected ')' to close the argument list");
      advance();
      return Formula::atom_perp(std::move(a), std::move(b));
    }
    if (tok_.kind == Tok::LParen) {
      advance();
      FormulaPtr f = parse_iff();
      expect(Tok::RParen, "expected ')'");
      advance();
      return f;
    }
    if (tok_.kind == Tok::Ident) {
      Var a = parse_var();
      if (tok_.kind == Tok::Eq) {
        advance();
        Var b = parse_var();
        return Formula::atom_eq(std::move(a), std::move(b));
      }
      if (tok_.kind == Tok::Neq) {
        advance();
        Var b = parse_var();
        return make_neq(std::move(a), std::move(b));
      }
      throw ParseError("expected '=' or '!=' after variable, got '" + describe() + "'",
                       tok_.line, tok_.column);
    }
    throw ParseError("expected a formula, got '" + describe() + "'", tok_.line, tok_.column);
  }

  Var parse_var() {
    expect(Tok::Ident, "expected a variable");
    const std::string name = tok_.text;
    advance();
    for (std::size_t i = scope_.size(); i-- > 0;)
      if (scope_[i] == name) return Var{static_cast<unsigned>(i + 1), 0, name};
    return Var{0, 0, name};
  }

  Lexer lexer_;
  Token tok_;
  std::vector<std::string> scope_;
};

} // namespace

FormulaPtr parse(const std::string& text) { return Parser(text).run(); }

} // namespace sapp
