#include "cli/session.hpp"

#include "transint/error.hpp"
#include "transint/parse.hpp"

namespace transint::cli {

const Ideal& Session::ideal(const std::string& name) const {
  auto it = ideals.find(name);
  if (it == ideals.end()) throw DomainError("no ideal named '" + name + "'");
  return it->second;
}

const SimplicialComplex& Session::simplicial(const std::string& name) const {
  auto it = complexes.find(name);
  if (it == complexes.end()) throw DomainError("no simplicial complex named '" + name + "'");
  return it->second;
}

namespace {

std::uint64_t to_uint(const Token& t, std::uint64_t max) {
  mpz_class v(t.text);
  if (v > max) Lexer::fail_at(t, "integer " + t.text + " is too large");
  return v.get_ui();
}

class Parser {
 public:
  explicit Parser(std::string_view text) : lex_(text) {}

  Session run() {
    while (lex_.peek().kind != Token::Kind::End) statement();
    if (!s_.ring) throw ParseError("session declares no ring", 1, 1);
    return std::move(s_);
  }

 private:
  void statement() {
    Token kw = lex_.expect_identifier();
    if (kw.text == "ring") {
      ring(kw);
    } else if (kw.text == "order") {
      order(kw);
    } else if (kw.text == "ideal") {
      ideal();
    } else if (kw.text == "simplicial") {
      simplicial();
    } else {
      Lexer::fail_at(kw, "unknown statement '" + kw.text + "'");
    }
    lex_.expect_symbol(';');
  }

  void need_ring(const Token& at) {
    if (!s_.ring) Lexer::fail_at(at, "declare the ring first");
  }

  void ring(const Token& kw) {
    if (s_.ring) Lexer::fail_at(kw, "ring already declared");
    Token f = lex_.expect_identifier();
    Field field = Field::rationals();
    if (f.text == "Fp") {
      lex_.expect_symbol('(');
      Token p = lex_.expect_integer();
      auto value = to_uint(p, std::numeric_limits<std::uint32_t>::max());
      try {
        field = Field::prime(static_cast<std::uint32_t>(value));
      } catch (const DomainError& e) {
        Lexer::fail_at(p, e.what());
      }
      lex_.expect_symbol(')');
    } else if (f.text != "Q") {
      Lexer::fail_at(f, "expected Q or Fp(p)");
    }
    lex_.expect_symbol('[');
    std::vector<std::string> names;
    Token first = lex_.peek();
    for (;;) {
      names.push_back(lex_.expect_identifier().text);
      if (!lex_.peek().is_symbol(',')) break;
      lex_.next();
    }
    lex_.expect_symbol(']');
    try {
      s_.ring = Ring::make(std::move(names), field);
    } catch (const Error& e) {
      Lexer::fail_at(first, e.what());
    }
  }

  std::size_t variable(const Token& t) {
    auto idx = s_.ring->index_of(t.text);
    if (!idx) Lexer::fail_at(t, "unknown variable '" + t.text + "'");
    return *idx;
  }

  std::vector<std::uint64_t> weight_list() {
    std::vector<std::uint64_t> w;
    for (;;) {
      w.push_back(to_uint(lex_.expect_integer(), std::numeric_limits<std::uint32_t>::max()));
      if (!lex_.peek().is_symbol(',')) break;
      lex_.next();
    }
    return w;
  }

  MonomialOrder simple(const Token& name) {
    if (name.text == "lex") return MonomialOrder::lex();
    if (name.text == "grlex") return MonomialOrder::grlex();
    if (name.text == "grevlex") return MonomialOrder::grevlex();
    Lexer::fail_at(name, "unknown order '" + name.text + "'");
  }

  void order(const Token& kw) {
    need_ring(kw);
    if (s_.order_declared) Lexer::fail_at(kw, "order already declared");
    Token name = lex_.expect_identifier();
    MonomialOrder o = MonomialOrder::grevlex();
    if (name.text == "weights") {
      lex_.expect_symbol('(');
      auto w = weight_list();
      lex_.expect_symbol(')');
      o = MonomialOrder::weight(std::move(w));
    } else if (name.text == "block") {
      lex_.expect_symbol('(');
      std::vector<std::pair<std::vector<std::size_t>, MonomialOrder>> groups;
      for (;;) {
        Token inner = lex_.expect_identifier();
        lex_.expect_symbol('(');
        std::vector<std::size_t> vars;
        for (;;) {
          vars.push_back(variable(lex_.expect_identifier()));
          if (!lex_.peek().is_symbol(',')) break;
          lex_.next();
        }
        if (inner.text == "weights") {
          lex_.expect_symbol(';');
          groups.emplace_back(std::move(vars), MonomialOrder::weight(weight_list()));
        } else {
          groups.emplace_back(std::move(vars), simple(inner));
        }
        lex_.expect_symbol(')');
        if (!lex_.peek().is_symbol(',')) break;
        lex_.next();
      }
      lex_.expect_symbol(')');
      try {
        o = MonomialOrder::block(std::move(groups));
      } catch (const Error& e) {
        Lexer::fail_at(name, e.what());
      }
    } else {
      o = simple(name);
    }
    try {
      o.validate(s_.ring->size());
    } catch (const Error& e) {
      Lexer::fail_at(name, e.what());
    }
    s_.order = std::move(o);
    s_.order_declared = true;
  }

  std::string new_name() {
    Token name = lex_.expect_identifier();
    if (s_.ideals.count(name.text) || s_.complexes.count(name.text)) {
      Lexer::fail_at(name, "'" + name.text + "' is already declared");
    }
    lex_.expect_symbol('=');
    s_.declared.push_back(name.text);
    return name.text;
  }

  void ideal() {
    need_ring(lex_.peek());
    std::string name = new_name();
    lex_.expect_symbol('<');
    std::vector<Polynomial> gens;
    if (!lex_.peek().is_symbol('>')) {
      for (;;) {
        gens.push_back(parse_polynomial(lex_, s_.ring));
        if (!lex_.peek().is_symbol(',')) break;
        lex_.next();
      }
    }
    lex_.expect_symbol('>');
    s_.ideals.emplace(name, Ideal(s_.ring, std::move(gens)));
  }

  Face face() {
    lex_.expect_symbol('{');
    Face f;
    if (!lex_.peek().is_symbol('}')) {
      for (;;) {
        f.push_back(static_cast<std::size_t>(to_uint(lex_.expect_integer(), 1u << 20)));
        if (!lex_.peek().is_symbol(',')) break;
        lex_.next();
      }
    }
    lex_.expect_symbol('}');
    return f;
  }

  void simplicial() {
    std::string name = new_name();
    Token open = lex_.expect_symbol('{');
    std::vector<Face> facets;
    if (!lex_.peek().is_symbol('}')) {
      for (;;) {
        facets.push_back(face());
        if (!lex_.peek().is_symbol(',')) break;
        lex_.next();
      }
    }
    lex_.expect_symbol('}');
    try {
      s_.complexes.emplace(name, SimplicialComplex(std::move(facets)));
    } catch (const Error& e) {
      Lexer::fail_at(open, e.what());
    }
  }

  Lexer lex_;
  Session s_;
};

}  // namespace

Session parse_session(std::string_view text) { return Parser(text).run(); }

std::string print_session(const Session& s) {
  std::string out = "ring " + s.ring->field().to_string() + "[";
  for (std::size_t i = 0; i < s.ring->size(); ++i) {
    if (i) out += ",";
    out += s.ring->name(i);
  }
  out += "];\n";
  if (s.order_declared) out += "order " + s.order.to_string(*s.ring) + ";\n";
  for (const auto& name : s.declared) {
    if (auto it = s.ideals.find(name); it != s.ideals.end()) {
      out += "ideal " + name + " = " + it->second.to_string(s.order) + ";\n";
    } else {
      out += "simplicial " + name + " = " + s.complexes.at(name).to_string() + ";\n";
    }
  }
  return out;
}

bool same_session(const Session& a, const Session& b) {
  if (!(*a.ring == *b.ring) || !(a.order == b.order) || a.order_declared != b.order_declared ||
      a.declared != b.declared || a.complexes != b.complexes || a.ideals.size() != b.ideals.size()) {
    return false;
  }
  for (const auto& [name, ideal] : a.ideals) {
    auto it = b.ideals.find(name);
    if (it == b.ideals.end() || ideal.size() != it->second.size()) return false;
    for (std::size_t k = 0; k < ideal.size(); ++k) {
      // different ring objects with equal contents: compare term lists
      if (ideal.generators()[k].terms() != it->second.generators()[k].terms()) return false;
    }
  }
  return true;
}

std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring) {
  Lexer lex(text);
  std::vector<Polynomial> out;
  for (;;) {
    out.push_back(parse_polynomial(lex, ring));
    if (!lex.peek().is_symbol(',')) break;
    lex.next();
  }
  if (lex.peek().kind != Token::Kind::End) lex.fail("unexpected '" + lex.peek().text + "'");
  return out;
}

}  // namespace transint::cli
