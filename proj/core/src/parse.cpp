#include "transint/parse.hpp"

#include <cctype>
#include <limits>

#include "transint/error.hpp"

namespace transint {

Lexer::Lexer(std::string_view text) : text_(text) { advance(); }

Token Lexer::next() {
  Token t = current_;
  advance();
  return t;
}

void Lexer::advance() {
  auto at = [&](std::size_t k) -> char { return pos_ + k < text_.size() ? text_[pos_ + k] : '\0'; };
  auto bump = [&]() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  };
  for (;;) {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) bump();
    if (at(0) == '#' || (at(0) == '/' && at(1) == '/')) {
      while (pos_ < text_.size() && text_[pos_] != '\n') bump();
      continue;
    }
    break;
  }
  current_ = Token{};
  current_.line = line_;
  current_.column = column_;
  if (pos_ >= text_.size()) {
    current_.kind = Token::Kind::End;
    return;
  }
  auto c = static_cast<unsigned char>(text_[pos_]);
  std::size_t start = pos_;
  if (std::isalpha(c) || c == '_') {
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      bump();
    }
    current_.kind = Token::Kind::Identifier;
  } else if (std::isdigit(c)) {
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) bump();
    current_.kind = Token::Kind::Integer;
  } else {
    bump();
    current_.kind = Token::Kind::Symbol;
  }
  current_.text = std::string(text_.substr(start, pos_ - start));
}

void Lexer::fail(const std::string& msg) const { fail_at(current_, msg); }

void Lexer::fail_at(const Token& t, const std::string& msg) {
  throw ParseError(msg, t.line, t.column);
}

Token Lexer::expect_symbol(char c) {
  if (!current_.is_symbol(c)) {
    fail(std::string("expected '") + c + "', found " +
         (current_.kind == Token::Kind::End ? std::string("end of input") : "'" + current_.text + "'"));
  }
  return next();
}

Token Lexer::expect_identifier() {
  if (current_.kind != Token::Kind::Identifier) fail("expected an identifier");
  return next();
}

Token Lexer::expect_integer() {
  if (current_.kind != Token::Kind::Integer) fail("expected an integer");
  return next();
}

namespace {

std::uint32_t parse_exponent(Lexer& lex) {
  Token t = lex.expect_integer();
  mpz_class v(t.text);
  if (v > std::numeric_limits<std::uint32_t>::max()) Lexer::fail_at(t, "exponent too large");
  return static_cast<std::uint32_t>(v.get_ui());
}

bool starts_factor(const Token& t) {
  return t.kind == Token::Kind::Identifier || t.kind == Token::Kind::Integer || t.is_symbol('(');
}

Polynomial parse_factor(Lexer& lex, const RingPtr& ring) {
  const Token& t = lex.peek();
  if (t.kind == Token::Kind::Integer) {
    Token num = lex.next();
    mpz_class n(num.text);
    mpz_class d = 1;
    if (lex.peek().is_symbol('/')) {
      lex.next();
      Token den = lex.expect_integer();
      d = mpz_class(den.text);
      if (d == 0) Lexer::fail_at(den, "zero denominator");
    }
    Coefficient c(n, d);
    c.canonicalize();
    return Polynomial::constant(ring, c);
  }
  if (t.kind == Token::Kind::Identifier) {
    Token id = lex.next();
    auto idx = ring->index_of(id.text);
    if (!idx) Lexer::fail_at(id, "unknown variable '" + id.text + "'");
    std::uint32_t e = 1;
    if (lex.peek().is_symbol('^')) {
      lex.next();
      e = parse_exponent(lex);
    }
    return Polynomial::monomial(ring, Monomial::variable(ring->size(), *idx, e));
  }
  if (t.is_symbol('(')) {
    lex.next();
    Polynomial inner = parse_polynomial(lex, ring);
    lex.expect_symbol(')');
    if (lex.peek().is_symbol('^')) {
      lex.next();
      inner = pow(inner, parse_exponent(lex));
    }
    return inner;
  }
  lex.fail("expected a coefficient, variable or '('");
}

Polynomial parse_term(Lexer& lex, const RingPtr& ring) {
  Polynomial acc = parse_factor(lex, ring);
  for (;;) {
    if (lex.peek().is_symbol('*')) {
      lex.next();
      acc = acc * parse_factor(lex, ring);
    } else if (starts_factor(lex.peek())) {
      acc = acc * parse_factor(lex, ring);
    } else {
      return acc;
    }
  }
}

}  // namespace

Polynomial parse_polynomial(Lexer& lex, const RingPtr& ring) {
  Polynomial acc(ring);
  bool first = true;
  for (;;) {
    bool negative = false;
    if (lex.peek().is_symbol('+') || lex.peek().is_symbol('-')) {
      negative = lex.next().is_symbol('-');
    } else if (!first) {
      return acc;
    }
    Polynomial term = parse_term(lex, ring);
    if (negative) {
      acc -= term;
    } else {
      acc += term;
    }
    first = false;
  }
}

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring) {
  Lexer lex(text);
  Polynomial p = parse_polynomial(lex, ring);
  if (lex.peek().kind != Token::Kind::End) lex.fail("unexpected '" + lex.peek().text + "'");
  return p;
}

}  // namespace transint
