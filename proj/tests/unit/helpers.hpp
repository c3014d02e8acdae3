#pragma once

#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "transint/transint.hpp"

namespace transint::testing {

inline Polynomial poly(const RingPtr& ring, const std::string& text) { return parse_polynomial(text, ring); }

inline Ideal ideal(const RingPtr& ring, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(poly(ring, g));
  return Ideal(ring, std::move(ps));
}

inline Monomial mono(const RingPtr& ring, const std::string& text) {
  auto p = poly(ring, text);
  return p.terms().front().mono;
}

inline MonomialIdeal mideal(const RingPtr& ring, std::initializer_list<const char*> gens) {
  std::vector<Monomial> ms;
  for (const char* g : gens) ms.push_back(mono(ring, g));
  return MonomialIdeal(ring, std::move(ms));
}

inline std::vector<std::string> strings(const std::vector<Polynomial>& ps,
                                        const MonomialOrder& order = MonomialOrder::grevlex()) {
  std::vector<std::string> out;
  for (const auto& p : ps) out.push_back(p.to_string(order));
  return out;
}

inline std::vector<std::string> strings(const MonomialIdeal& m) {
  std::vector<std::string> out;
  for (const auto& g : m.generators()) out.push_back(g.to_string(*m.ring()));
  return out;
}

}  // namespace transint::testing

namespace transint {

// gtest printers, found by ADL
inline void PrintTo(const Polynomial& p, std::ostream* os) { *os << p.to_string(); }
inline void PrintTo(const Monomial& m, std::ostream* os) {
  *os << "(";
  for (std::size_t i = 0; i < m.size(); ++i) *os << (i ? "," : "") << m[i];
  *os << ")";
}

}  // namespace transint
