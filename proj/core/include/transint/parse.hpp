#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "transint/polynomial.hpp"

namespace transint {

struct Token {
  enum class Kind { Identifier, Integer, Symbol, End };
  Kind kind = Kind::End;
  std::string text;
  std::size_t line = 1;
  std::size_t column = 1;

  bool is_symbol(char c) const { return kind == Kind::Symbol && text.size() == 1 && text[0] == c; }
  bool is_word(std::string_view w) const { return kind == Kind::Identifier && text == w; }
};

/// Tokenizer shared by the polynomial and session grammars. Skips blanks and
/// `#`/`//` comments.
class Lexer {
 public:
  explicit Lexer(std::string_view text);

  const Token& peek() const { return current_; }
  Token next();

  Token expect_symbol(char c);
  Token expect_identifier();
  Token expect_integer();
  [[noreturn]] void fail(const std::string& msg) const;
  [[noreturn]] static void fail_at(const Token& t, const std::string& msg);

 private:
  void advance();

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
  Token current_;
};

/// Polynomial grammar: `+`/`-` separated terms; a term is a product of
/// factors with optional `*`; a factor is an integer, a rational `p/q`, a
/// variable with optional `^e`, or a parenthesized polynomial with optional
/// `^e`. Example: `x1*x3 - x2^2`, `3/4 x1^2x2`. Parsing stops at the first
/// token that cannot continue the expression.
Polynomial parse_polynomial(Lexer& lex, const RingPtr& ring);

/// Parses the whole string; trailing input is an error.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

}  // namespace transint
