#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "transint/ring.hpp"

namespace transint {

using Exponent = std::uint32_t;

/// Exponent vector x^a. Its length is the size of the ring it lives in; the
/// all-zero vector is the monomial 1. The exponent tuple is the multidegree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}
  Monomial(std::initializer_list<Exponent> exps) : exps_(exps) {}

  static Monomial one(std::size_t nvars) { return Monomial(nvars); }
  static Monomial variable(std::size_t nvars, std::size_t i, Exponent e = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  /// Sum of exponents.
  std::uint64_t degree() const noexcept;
  bool is_one() const noexcept;

  /// Bit i set iff x_i occurs.
  std::uint64_t support_mask() const noexcept;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  /// Plain lexicographic comparison of exponent tuples; a storage order only.
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }

  std::string to_string(const Ring& ring) const;

 private:
  std::vector<Exponent> exps_;
};

Monomial operator*(const Monomial& a, const Monomial& b);
bool divides(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
/// b / a; throws DomainError unless a divides b.
Monomial quotient(const Monomial& b, const Monomial& a);
bool coprime(const Monomial& a, const Monomial& b);
Monomial pow(const Monomial& m, std::uint32_t k);

/// supp(S): sorted indices of variables occurring in some monomial of S.
std::vector<std::size_t> support(std::span<const Monomial> ms);
std::vector<std::size_t> support(const Monomial& m);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace transint
