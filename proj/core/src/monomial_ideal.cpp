#include "transint/monomial_ideal.hpp"

#include <algorithm>

#include "transint/error.hpp"
#include "transint/order.hpp"

namespace transint {

namespace {

std::vector<Monomial> minimal_generators(std::vector<Monomial> ms) {
  // ascending degree: a divisor never comes after its multiples
  std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
    auto da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  std::vector<Monomial> kept;
  for (auto& m : ms) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& g) { return divides(g, m); });
    if (!redundant) kept.push_back(std::move(m));
  }
  auto order = MonomialOrder::grevlex();
  std::sort(kept.begin(), kept.end(), [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) > 0; });
  return kept;
}

}  // namespace

MonomialIdeal::MonomialIdeal(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw DomainError("monomial ideal without a ring");
}

MonomialIdeal::MonomialIdeal(RingPtr ring, std::vector<Monomial> generators) : MonomialIdeal(std::move(ring)) {
  for (const auto& m : generators) {
    if (m.size() != ring_->size()) throw ContextMismatch("generator does not fit the ring");
  }
  gens_ = minimal_generators(std::move(generators));
}

std::string MonomialIdeal::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) s += ", ";
    s += gens_[i].to_string(*ring_);
  }
  return s + ")";
}

bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring_, b.ring_, "equals");
  return a.gens_ == b.gens_;
}

MonomialIdeal minimalize(const RingPtr& ring, std::span<const Monomial> ms) {
  return MonomialIdeal(ring, std::vector<Monomial>(ms.begin(), ms.end()));
}

bool contains(const MonomialIdeal& ideal, const Monomial& m) {
  if (m.size() != ideal.ring()->size()) throw ContextMismatch("contains: monomial does not fit the ring");
  return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const Monomial& g) { return divides(g, m); });
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring(), "intersect");
  std::vector<Monomial> out;
  out.reserve(a.size() * b.size());
  for (const auto& u : a.generators()) {
    for (const auto& v : b.generators()) out.push_back(lcm(u, v));
  }
  return MonomialIdeal(a.ring(), std::move(out));
}

MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring(), "multiply");
  std::vector<Monomial> out;
  out.reserve(a.size() * b.size());
  for (const auto& u : a.generators()) {
    for (const auto& v : b.generators()) out.push_back(u * v);
  }
  return MonomialIdeal(a.ring(), std::move(out));
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring(), "sum");
  std::vector<Monomial> out = a.generators();
  out.insert(out.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal(a.ring(), std::move(out));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m) {
  std::vector<Monomial> out;
  out.reserve(ideal.size());
  for (const auto& u : ideal.generators()) out.push_back(quotient(u, gcd(u, m)));
  return MonomialIdeal(ideal.ring(), std::move(out));
}

bool equals(const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; }

std::vector<std::size_t> ideal_support(const MonomialIdeal& ideal) { return support(ideal.generators()); }

MonomialTransversality is_transversal_monomial(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring(), "is_transversal_monomial");
  if (a.is_unit() || b.is_unit()) {
    throw DomainError("is_transversal_monomial: unit ideals are outside the predicate's domain");
  }
  if (a.is_zero() || b.is_zero()) return {true, true};

  MonomialTransversality r;
  r.transversal = intersect(a, b) == multiply(a, b);
  std::uint64_t sa = 0, sb = 0;
  for (const auto& g : a.generators()) sa |= g.support_mask();
  for (const auto& g : b.generators()) sb |= g.support_mask();
  r.support_disjoint = (sa & sb) == 0;
  if (r.transversal != r.support_disjoint) {
    throw ConsistencyError("monomial transversality disagrees with support disjointness for " + a.to_string() +
                           " and " + b.to_string());
  }
  return r;
}

}  // namespace transint
