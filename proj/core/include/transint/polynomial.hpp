#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "transint/monomial.hpp"
#include "transint/order.hpp"
#include "transint/ring.hpp"

namespace transint {

struct Term {
  Coefficient coeff;
  Monomial mono;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over the ring's field.
///
/// Terms are stored with nonzero coefficients, sorted by exponent tuple; this
/// storage order is independent of any monomial order, so one value can be
/// inspected under several orders. Leading terms are computed on demand.
class Polynomial {
 public:
  /// The zero polynomial of `ring`.
  explicit Polynomial(RingPtr ring);

  static Polynomial constant(RingPtr ring, const Coefficient& c);
  static Polynomial monomial(RingPtr ring, Monomial m, const Coefficient& c = 1);
  static Polynomial variable(RingPtr ring, std::size_t i);
  /// Combines like terms and drops zero coefficients.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_monomial() const noexcept { return terms_.size() == 1; }

  /// m(f): the monomials with nonzero coefficient.
  std::vector<Monomial> monomials() const;
  Coefficient coefficient(const Monomial& m) const;
  Coefficient constant_coefficient() const;
  std::uint64_t total_degree() const;
  bool is_homogeneous() const;

  /// Order-maximal term. Throws DomainError on the zero polynomial.
  const Term& leading_term(const MonomialOrder& order) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);

  /// Terms printed in descending `order`, e.g. "x1*x3 - x2^2".
  std::string to_string(const MonomialOrder& order = MonomialOrder::grevlex()) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

Polynomial operator+(const Polynomial& f, const Polynomial& g);
Polynomial operator-(const Polynomial& f, const Polynomial& g);
Polynomial operator*(const Polynomial& f, const Polynomial& g);
Polynomial scale(const Coefficient& c, const Polynomial& f);
Polynomial mul_term(const Polynomial& f, const Coefficient& c, const Monomial& m);
Polynomial pow(const Polynomial& f, std::uint32_t k);

/// Ring map sending variable i of f's ring to images[i] (all in `target`).
Polynomial substitute(const Polynomial& f, const RingPtr& target, std::span<const Polynomial> images);

/// Rewrite f into `target`, mapping variable i to target variable var_map[i].
Polynomial embed(const Polynomial& f, const RingPtr& target, std::span<const std::size_t> var_map);

}  // namespace transint
