#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "transint/groebner.hpp"
#include "transint/monomial_ideal.hpp"
#include "transint/simplicial.hpp"

namespace transint {

/// Seeded generators for property suites. All draws go through one
/// std::mt19937_64, so a seed fixes every instance.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : rng_(seed) {}

  std::size_t uniform(std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng_);
  }
  bool coin() { return uniform(0, 1) == 1; }

  /// Nonconstant monomial of total degree in [1, max_degree] supported on `vars`.
  Monomial monomial(std::size_t nvars, const std::vector<std::size_t>& vars, std::uint32_t max_degree);

  /// Proper nonzero monomial ideal with 1..max_gens generators on `vars`
  /// (all variables when empty).
  MonomialIdeal monomial_ideal(const RingPtr& ring, std::size_t max_gens, std::uint32_t max_degree,
                               std::vector<std::size_t> vars = {});

  /// Random split of the variables into two nonempty blocks, the first
  /// variable of each block chosen independently.
  std::pair<std::vector<std::size_t>, std::vector<std::size_t>> split(std::size_t nvars);

  /// Polynomial with 1..max_terms terms on `vars`, small integer coefficients,
  /// no constant term.
  Polynomial polynomial(const RingPtr& ring, const std::vector<std::size_t>& vars, std::size_t max_terms,
                        std::uint32_t max_degree);

  /// Complex on vertices first..first+nverts-1 with 1..max_facets random facets.
  SimplicialComplex simplicial(std::size_t first, std::size_t nverts, std::size_t max_facets);

 private:
  std::mt19937_64 rng_;
};

}  // namespace transint
