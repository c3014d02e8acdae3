#pragma once

#include <span>
#include <string>
#include <vector>

#include "transint/monomial.hpp"
#include "transint/ring.hpp"

namespace transint {

/// Monomial ideal stored by its minimal generating set G(I).
///
/// Generators are pairwise incomparable under divisibility and kept sorted
/// descending in grevlex, so equal ideals have identical generator lists.
/// The zero ideal has no generators; the unit ideal is {1}.
class MonomialIdeal {
 public:
  /// Zero ideal.
  explicit MonomialIdeal(RingPtr ring);
  MonomialIdeal(RingPtr ring, std::vector<Monomial> generators);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_one(); }

  std::string to_string() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b);

 private:
  RingPtr ring_;
  std::vector<Monomial> gens_;
};

/// G(<ms>): drop duplicates and every monomial divisible by another one.
MonomialIdeal minimalize(const RingPtr& ring, std::span<const Monomial> ms);

/// m in I iff some generator divides m.
bool contains(const MonomialIdeal& ideal, const Monomial& m);

/// I ∩ J, generated by the pairwise lcms.
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
/// I·J, generated by the pairwise products.
MonomialIdeal multiply(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
/// (I : m), generated by u / gcd(u, m).
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& m);
bool equals(const MonomialIdeal& a, const MonomialIdeal& b);
std::vector<std::size_t> ideal_support(const MonomialIdeal& ideal);

struct MonomialTransversality {
  bool transversal = false;       // I ∩ J == I·J, by generator comparison
  bool support_disjoint = false;  // supp G(I) ∩ supp G(J) == ∅
};

/// Decides I ∩ J = I·J two ways: comparing the lcm-generated intersection
/// with the product, and checking that the generator supports are disjoint.
/// The answers coincide for monomial ideals; a disagreement throws
/// ConsistencyError. Zero ideals are vacuously transversal; unit ideals are
/// rejected with DomainError.
MonomialTransversality is_transversal_monomial(const MonomialIdeal& a, const MonomialIdeal& b);

}  // namespace transint
