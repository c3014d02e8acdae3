#include "transint/random.hpp"

#include <numeric>

#include "transint/error.hpp"

namespace transint {

Monomial RandomSource::monomial(std::size_t nvars, const std::vector<std::size_t>& vars, std::uint32_t max_degree) {
  if (vars.empty() || max_degree == 0) throw DomainError("random monomial needs variables and a positive degree");
  std::vector<Exponent> e(nvars, 0);
  auto d = uniform(1, max_degree);
  for (std::size_t k = 0; k < d; ++k) ++e[vars[uniform(0, vars.size() - 1)]];
  return Monomial(std::move(e));
}

MonomialIdeal RandomSource::monomial_ideal(const RingPtr& ring, std::size_t max_gens, std::uint32_t max_degree,
                                           std::vector<std::size_t> vars) {
  if (vars.empty()) {
    vars.resize(ring->size());
    std::iota(vars.begin(), vars.end(), std::size_t{0});
  }
  std::vector<Monomial> gens;
  auto k = uniform(1, max_gens);
  for (std::size_t i = 0; i < k; ++i) gens.push_back(monomial(ring->size(), vars, max_degree));
  return MonomialIdeal(ring, std::move(gens));
}

std::pair<std::vector<std::size_t>, std::vector<std::size_t>> RandomSource::split(std::size_t nvars) {
  if (nvars < 2) throw DomainError("random split needs at least two variables");
  std::vector<std::size_t> perm(nvars);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::shuffle(perm.begin(), perm.end(), rng_);
  auto cut = uniform(1, nvars - 1);
  std::vector<std::size_t> a(perm.begin(), perm.begin() + static_cast<std::ptrdiff_t>(cut));
  std::vector<std::size_t> b(perm.begin() + static_cast<std::ptrdiff_t>(cut), perm.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return {a, b};
}

Polynomial RandomSource::polynomial(const RingPtr& ring, const std::vector<std::size_t>& vars, std::size_t max_terms,
                                    std::uint32_t max_degree) {
  Polynomial f(ring);
  while (f.is_zero()) {
    auto k = uniform(1, max_terms);
    for (std::size_t i = 0; i < k; ++i) {
      auto c = static_cast<long>(uniform(1, 9)) * (coin() ? 1 : -1);
      f += Polynomial::monomial(ring, monomial(ring->size(), vars, max_degree), Coefficient(c));
    }
  }
  return f;
}

SimplicialComplex RandomSource::simplicial(std::size_t first, std::size_t nverts, std::size_t max_facets) {
  std::vector<Face> facets;
  auto k = uniform(1, max_facets);
  for (std::size_t i = 0; i < k; ++i) {
    Face f;
    for (std::size_t v = 0; v < nverts; ++v) {
      if (coin()) f.push_back(first + v);
    }
    if (f.empty()) f.push_back(first + uniform(0, nverts - 1));
    facets.push_back(std::move(f));
  }
  // every vertex appears, so vertex count is stable
  for (std::size_t v = 0; v < nverts; ++v) facets.push_back({first + v});
  return SimplicialComplex(std::move(facets));
}

}  // namespace transint
