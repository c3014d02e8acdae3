#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "transint/monomial_ideal.hpp"
#include "transint/order.hpp"
#include "transint/polynomial.hpp"

namespace transint {

/// Ideal given by a list of nonzero generators. Zero polynomials passed to the
/// constructor are dropped; the remaining order is preserved.
class Ideal {
 public:
  explicit Ideal(RingPtr ring);
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Polynomial>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }

  std::string to_string(const MonomialOrder& order = MonomialOrder::grevlex()) const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
/// Generated by all products f·g of generators.
Ideal ideal_product(const Ideal& a, const Ideal& b);
/// Generated by every product of r generators taken with repetition
/// (g_1^{i_1}···g_k^{i_k}, i_1+…+i_k = r); no minimalization.
Ideal ideal_power(const Ideal& a, std::uint32_t r);
Ideal from_monomial_ideal(const MonomialIdeal& m);
/// Present when every generator is a monomial (coefficients are dropped).
std::optional<MonomialIdeal> as_monomial_ideal(const Ideal& ideal);

struct GroebnerBasis {
  RingPtr ring;
  std::vector<Polynomial> basis;  // sorted by leading monomial, descending
  MonomialOrder order = MonomialOrder::grevlex();
  bool reduced = false;

  bool is_unit() const;
  /// minimalize({Lt(g)}).
  MonomialIdeal lt_ideal() const;
  Ideal ideal() const { return Ideal(ring, basis); }
  std::string to_string() const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b);
};

struct BuchbergerOptions {
  bool coprime_criterion = true;
  bool chain_criterion = true;
  /// Reduce all S-pairs of the current lowest degree concurrently.
  bool parallel = false;
};

struct BuchbergerStats {
  std::size_t pairs_created = 0;
  std::size_t skipped_coprime = 0;
  std::size_t skipped_chain = 0;
  std::size_t zero_reductions = 0;
};

/// Full reduction of f by G: repeatedly cancels the largest monomial that is
/// divisible by some Lt(g), using the first such g in list order.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors, const MonomialOrder& order);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// True iff every S-polynomial of the list reduces to zero modulo the list.
bool is_groebner_basis(std::span<const Polynomial> basis, const MonomialOrder& order);

/// Reduced Gröbner basis (monic, sorted by leading term descending) by
/// Buchberger's algorithm with the normal selection strategy.
GroebnerBasis buchberger(const Ideal& ideal, const MonomialOrder& order, const BuchbergerOptions& options = {},
                         BuchbergerStats* stats = nullptr);

bool is_member(const Polynomial& f, const Ideal& ideal, const MonomialOrder& order);
bool ideal_equal(const Ideal& a, const Ideal& b, const MonomialOrder& order);
/// 1 ∉ I.
bool is_proper(const Ideal& ideal, const MonomialOrder& order);

/// I ∩ J by elimination: adjoin t, take {t·f} ∪ {(1−t)·g} and keep the
/// t-free part of a Gröbner basis for the block order (t) > (x). The result
/// generators form the reduced Gröbner basis of I ∩ J for `order`.
Ideal elim_intersect(const Ideal& a, const Ideal& b, const MonomialOrder& order = MonomialOrder::grevlex());

/// g / f, throwing ConsistencyError when f does not divide g.
Polynomial exact_divide(const Polynomial& g, const Polynomial& f, const MonomialOrder& order);

/// (I : f) = (I ∩ <f>) / f.
Ideal ideal_quotient(const Ideal& ideal, const Polynomial& f, const MonomialOrder& order = MonomialOrder::grevlex());

/// f is a nonzerodivisor on R/I, i.e. (I : f) = I. Requires I proper and f ≠ 0.
bool is_nzd(const Polynomial& f, const Ideal& ideal, const MonomialOrder& order = MonomialOrder::grevlex());

struct RegularSequenceResult {
  bool regular = false;
  std::size_t failed_stage = 0;  // 1-based; 0 when regular
  std::string reason;
};

/// Checks f_1..f_k is a regular sequence on R/I: for each i the ideal
/// I + <f_1..f_{i-1}> is proper and f_i is a nonzerodivisor modulo it.
RegularSequenceResult is_regular_sequence(std::span<const Polynomial> seq, const Ideal& ideal,
                                          const MonomialOrder& order = MonomialOrder::grevlex());

/// supp(Lt(I)) ∩ supp(Lt(J)) = ∅. Sufficient for transversality, not necessary.
bool lt_support_transversal(const Ideal& a, const Ideal& b, const MonomialOrder& order);

struct TransversalCertificate {
  GroebnerBasis intersection;  // reduced GB of I ∩ J
  GroebnerBasis product;       // reduced GB of I·J
  bool equal = false;
};

/// Decides I ∩ J = I·J by comparing reduced Gröbner bases.
TransversalCertificate transversal(const Ideal& a, const Ideal& b, const MonomialOrder& order = MonomialOrder::grevlex());

/// Checks I ∩ J^r = I·J^r for J = <gs>. Throws PreconditionError when gs is not
/// a regular sequence on R/I.
TransversalCertificate power_transversal(const Ideal& ideal, std::span<const Polynomial> gs, std::uint32_t r,
                                         const MonomialOrder& order = MonomialOrder::grevlex());

/// Largest number of variables allowed for the subset search in dimension().
inline constexpr std::size_t kMaxDimensionVariables = 20;

/// Krull dimension of R/I, via the largest set of variables containing the
/// support of no minimal generator of Lt(I).
std::size_t dimension(const Ideal& ideal, const MonomialOrder& order = MonomialOrder::grevlex());

}  // namespace transint
