#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "transint/groebner.hpp"
#include "transint/simplicial.hpp"

namespace transint::cli {

/// Declarations read from one session file: a single ring, an order
/// (grevlex unless declared) and named ideals and simplicial complexes.
struct Session {
  RingPtr ring;
  MonomialOrder order = MonomialOrder::grevlex();
  bool order_declared = false;
  std::vector<std::string> declared;  // names in declaration order
  std::map<std::string, Ideal> ideals;
  std::map<std::string, SimplicialComplex> complexes;

  /// Throws DomainError naming the missing symbol.
  const Ideal& ideal(const std::string& name) const;
  const SimplicialComplex& simplicial(const std::string& name) const;
  bool has_ideal(const std::string& name) const { return ideals.count(name) > 0; }
  bool has_simplicial(const std::string& name) const { return complexes.count(name) > 0; }
};

/// Statements end with ';':
///   ring Q[x1,x2];  ring Fp(101)[x,y];
///   order lex | grlex | grevlex | weights(2,1) | block(grevlex(x1,x2), lex(x3), weights(x4,x5; 2,1));
///   ideal I = <x1*x3 - x2^2, x1>;
///   simplicial D = {{1,2},{3}};
/// Throws ParseError with line and column.
Session parse_session(std::string_view text);

/// Canonical text that parses back to an equal session.
std::string print_session(const Session& s);

bool same_session(const Session& a, const Session& b);

/// Parses "f1, f2, ..." in the session ring.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const RingPtr& ring);

}  // namespace transint::cli
