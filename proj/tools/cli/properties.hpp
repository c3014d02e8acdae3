#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace transint::cli {

/// Outcome of one seeded property suite. `failures` counts instances on
/// which the property did not hold; `first_failure` describes the first one.
struct SuiteResult {
  std::string name;
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::size_t skipped = 0;  // instances outside the property's hypothesis
  std::string first_failure;

  bool ok() const noexcept { return failures == 0 && cases > 0; }
};

/// is_transversal_monomial agrees with itself on random pairs: the lcm test
/// and the support test return the same boolean (≤ 6 variables, degree ≤ 6,
/// ≤ 6 generators).
SuiteResult disjoint_equivalence_suite(std::uint64_t seed, std::size_t count);

/// Taylor complexes of random monomial ideals (≤ 6 generators) satisfy d∘d = 0,
/// have level ranks C(p, i) and are acyclic over the lcm lattice.
SuiteResult taylor_suite(std::uint64_t seed, std::size_t count);

/// For random pairs with disjoint generator supports and p + q ≤ 8: ψ is a
/// graded isomorphism T(I)⊗T(J) → T(I+J) and the tensor ranks are C(p+q, r).
SuiteResult taylor_tensor_suite(std::uint64_t seed, std::size_t count);

/// For the same pairs: prune(T(I)) ⊗ prune(T(J)) is minimal and its
/// K-polynomial equals K(R/I)·K(R/J), both computed independently.
SuiteResult minimal_tensor_suite(std::uint64_t seed, std::size_t count);

/// Join of random complexes on disjoint vertex sets (≤ 6 + 6 vertices): the
/// shuffle map is a chain isomorphism C(Δ1)⊗C(Δ2) → C(Δ1*Δ2).
SuiteResult join_suite(std::uint64_t seed, std::size_t count);

/// Koszul simplices and joins of supported pairs homogenize to minimal
/// resolutions.
SuiteResult supported_suite(std::uint64_t seed, std::size_t count);

/// On random polynomial ideal pairs, disjoint leading-term supports imply
/// I ∩ J = I·J. Pairs with meeting supports are counted as skipped.
SuiteResult dissup_suite(std::uint64_t seed, std::size_t count);

}  // namespace transint::cli
