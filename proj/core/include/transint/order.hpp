#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "transint/monomial.hpp"

namespace transint {

/// A multiplicative total order on monomials with 1 minimal.
///
/// Variables are ranked x_0 > x_1 > ... by context position. `weight` orders
/// compare the weighted degree first and break ties with grevlex. `block`
/// compares the restriction to each variable group in turn, each group with
/// its own (non-block) order; the groups must partition the variables.
class MonomialOrder {
 public:
  enum class Kind { Lex, GrLex, GrevLex, Weight, Block };

  struct Group {
    std::vector<std::size_t> vars;
    std::vector<MonomialOrder> inner;  // exactly one element
  };

  static MonomialOrder lex() { return MonomialOrder(Kind::Lex); }
  static MonomialOrder grlex() { return MonomialOrder(Kind::GrLex); }
  static MonomialOrder grevlex() { return MonomialOrder(Kind::GrevLex); }
  static MonomialOrder weight(std::vector<std::uint64_t> weights);
  /// Each pair is (variables of the group, order used inside it).
  static MonomialOrder block(std::vector<std::pair<std::vector<std::size_t>, MonomialOrder>> groups);

  Kind kind() const noexcept { return kind_; }
  const std::vector<std::uint64_t>& weights() const noexcept { return weights_; }
  const std::vector<Group>& groups() const noexcept { return groups_; }

  /// Throws ContextMismatch if this order cannot act on `nvars` variables.
  void validate(std::size_t nvars) const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  /// Session-grammar spelling, e.g. "grevlex", "weights(2,1,1)".
  std::string to_string(const Ring& ring) const;

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b);

 private:
  explicit MonomialOrder(Kind k) : kind_(k) {}

  template <class GetA, class GetB>
  std::strong_ordering compare_with(const GetA& a, const GetB& b, std::size_t n) const;

  Kind kind_;
  std::vector<std::uint64_t> weights_;
  std::vector<Group> groups_;
  std::size_t block_size_ = 0;
};

}  // namespace transint
