#pragma once

#include <cctype>
#include <string>
#include <vector>

#include "tjurina/errors.hpp"
#include "tjurina/polynomial.hpp"

namespace tjurina {

// Recursive-descent parser for polynomial expressions.
//
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' uint)?
//   atom   := rational | ident | '(' expr ')'
//
// rational = digits or digits '/' digits (one token, no spaces around '/');
// ident    = [A-Za-z_][A-Za-z0-9_]* and must name a variable of the ring.
// There is no implicit multiplication: "2x" is an error, "2*x" is not.
class ExprParser {
 public:
  ExprParser(const std::string& text, VarSet::Ptr vars, std::size_t line = 1)
      : text_(text), vars_(std::move(vars)), line_(line) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  Polynomial expr() {
    skip_space();
    bool neg = false;
    if (peek() == '-') {
      ++pos_;
      neg = true;
    }
    Polynomial p = term();
    if (neg) p = -p;
    for (;;) {
      skip_space();
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        Polynomial t = term();
        p = (c == '+') ? p + t : p - t;
      } else {
        return p;
      }
    }
  }

  Polynomial term() {
    Polynomial p = factor();
    for (;;) {
      skip_space();
      if (peek() == '*') {
        ++pos_;
        p = p * factor();
      } else {
        return p;
      }
    }
  }

  Polynomial factor() {
    Polynomial a = atom();
    skip_space();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      std::size_t start = pos_;
      if (!isdigit(peek())) fail("expected a non-negative integer exponent");
      while (isdigit(peek())) ++pos_;
      int e = 0;
      try {
        e = std::stoi(text_.substr(start, pos_ - start));
      } catch (const std::exception&) {
        fail("exponent is too large");
      }
      return a.pow(e);
    }
    return a;
  }

  Polynomial atom() {
    skip_space();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      skip_space();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    if (isdigit(c)) {
      std::size_t start = pos_;
      while (isdigit(peek())) ++pos_;
      if (peek() == '/') {
        ++pos_;
        if (!isdigit(peek())) fail("expected digits after '/' in a rational literal");
        while (isdigit(peek())) ++pos_;
      }
      return Polynomial::constant(vars_, parse_rational(text_.substr(start, pos_ - start)));
    }
    if (isalpha(c) || c == '_') {
      std::size_t start = pos_;
      while (isalnum(peek()) || peek() == '_') ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      auto idx = vars_->index_of(name);
      if (!idx) fail("unknown variable '" + name + "'", start);
      return Polynomial::variable(vars_, *idx);
    }
    if (c == '\0') fail("unexpected end of expression");
    fail(std::string("unexpected character '") + c + "'");
    return Polynomial::zero(vars_);  // unreachable
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  static bool isdigit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
  static bool isalpha(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
  static bool isalnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }

  [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
    throw ParseError(msg, line_, at + 1);
  }

  const std::string& text_;
  VarSet::Ptr vars_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

inline Polynomial parse_poly(const std::string& text, const VarSet::Ptr& vars,
                             std::size_t line = 1) {
  return ExprParser(text, vars, line).parse();
}

}  // namespace tjurina
