#include "cli/properties.hpp"

#include <numeric>

#include "transint/complexes.hpp"
#include "transint/error.hpp"
#include "transint/groebner.hpp"
#include "transint/random.hpp"
#include "transint/simplicial.hpp"

namespace transint::cli {

namespace {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void fail(SuiteResult& r, const std::string& what) {
  if (r.failures++ == 0) r.first_failure = what;
}

bool binomial_ranks(const FreeComplex& c, std::size_t p) {
  if (c.length() != p) return false;
  for (std::size_t i = 0; i <= p; ++i) {
    if (c.rank(i) != binomial(p, i)) return false;
  }
  return true;
}

/// Pair of proper nonzero monomial ideals whose generators live on a random
/// split of the variables, at most 4 generators each.
std::pair<MonomialIdeal, MonomialIdeal> disjoint_pair(RandomSource& rng, const RingPtr& ring) {
  auto [a, b] = rng.split(ring->size());
  return {rng.monomial_ideal(ring, 4, 3, a), rng.monomial_ideal(ring, 4, 3, b)};
}

std::vector<std::size_t> range(std::size_t first, std::size_t count) {
  std::vector<std::size_t> v(count);
  std::iota(v.begin(), v.end(), first);
  return v;
}

/// Ideal with a resolution supported on a simplex (pairwise coprime
/// generators) or on a path of two edges, on the variables from `first`.
struct SupportedPiece {
  std::vector<Monomial> gens;
  SimplicialComplex complex;
  std::size_t vars_used = 0;
};

SupportedPiece supported_piece(RandomSource& rng, std::size_t nvars, std::size_t first) {
  auto e = [&] { return static_cast<Exponent>(rng.uniform(1, 3)); };
  SupportedPiece p;
  if (rng.coin()) {
    std::size_t k = rng.uniform(1, 3);
    for (std::size_t j = 0; j < k; ++j) p.gens.push_back(Monomial::variable(nvars, first + j, e()));
    p.complex = standard_simplex(range(0, k));
    p.vars_used = k;
  } else {
    // x_a^α x_b^β, x_b^γ x_c^δ, x_c^ε x_d^ζ with γ ≤ β and δ ≤ ε: the middle
    // generator divides the lcm of the outer two.
    Exponent al = e(), be = e(), ga = e(), de = e(), ep = e(), ze = e();
    be = std::max(be, ga);
    ep = std::max(ep, de);
    auto m = [&](std::size_t i, Exponent x, std::size_t j, Exponent y) {
      return Monomial::variable(nvars, first + i, x) * Monomial::variable(nvars, first + j, y);
    };
    p.gens = {m(0, al, 1, be), m(1, ga, 2, de), m(2, ep, 3, ze)};
    p.complex = SimplicialComplex({{0, 1}, {1, 2}});
    p.vars_used = 4;
  }
  return p;
}

}  // namespace

SuiteResult disjoint_equivalence_suite(std::uint64_t seed, std::size_t count) {
  SuiteResult r;
  r.name = "disjoint-support equivalence";
  RandomSource rng(seed);
  for (std::size_t k = 0; k < count; ++k) {
    auto ring = Ring::numbered("x", rng.uniform(1, 6));
    auto i = rng.monomial_ideal(ring, 6, 6);
    auto j = rng.monomial_ideal(ring, 6, 6);
    ++r.cases;
    try {
      is_transversal_monomial(i, j);
    } catch (const ConsistencyError& e) {
      fail(r, i.to_string() + " vs " + j.to_string() + ": " + e.what());
    }
  }
  return r;
}

SuiteResult taylor_suite(std::uint64_t seed, std::size_t count) {
  SuiteResult r;
  r.name = "taylor complex";
  RandomSource rng(seed);
  for (std::size_t k = 0; k < count; ++k) {
    auto ring = Ring::numbered("x", rng.uniform(2, 5));
    auto m = rng.monomial_ideal(ring, 6, 4);
    auto t = taylor(m);
    ++r.cases;
    std::string where = m.to_string();
    if (auto check = verify_complex(t); !check) {
      fail(r, where + ": " + check.message);
    } else if (!binomial_ranks(t, m.size())) {
      fail(r, where + ": ranks are not binomial");
    } else if (!is_acyclic_multigraded(t, m)) {
      fail(r, where + ": not acyclic");
    } else if (!(k_polynomial(t) == k_polynomial(m))) {
      fail(r, where + ": K-polynomial differs from the recursive one");
    }
  }
  return r;
}

SuiteResult taylor_tensor_suite(std::uint64_t seed, std::size_t count) {
  SuiteResult r;
  r.name = "taylor tensor isomorphism";
  RandomSource rng(seed);
  for (std::size_t k = 0; k < count; ++k) {
    auto ring = Ring::numbered("x", rng.uniform(2, 8));
    auto [i, j] = disjoint_pair(rng, ring);
    ++r.cases;
    std::string where = i.to_string() + " and " + j.to_string();
    if (auto check = taylor_iso_check(i, j); !check) {
      fail(r, where + ": " + check.message);
    } else if (!binomial_ranks(tensor(taylor(i), taylor(j)), i.size() + j.size())) {
      fail(r, where + ": tensor ranks are not binomial");
    }
  }
  return r;
}

SuiteResult minimal_tensor_suite(std::uint64_t seed, std::size_t count) {
  SuiteResult r;
  r.name = "pruned tensor minimality";
  RandomSource rng(seed);
  for (std::size_t k = 0; k < count; ++k) {
    auto ring = Ring::numbered("x", rng.uniform(2, 8));
    auto [i, j] = disjoint_pair(rng, ring);
    ++r.cases;
    std::string where = i.to_string() + " and " + j.to_string();
    auto t = tensor(prune(taylor(i)), prune(taylor(j)));
    if (!is_minimal(t)) {
      fail(r, where + ": pruned tensor is not minimal");
    } else if (!(k_polynomial(t) == k_polynomial(i) * k_polynomial(j))) {
      fail(r, where + ": K-polynomial is not the product");
    } else if (!is_acyclic_multigraded(t, sum(i, j))) {
      fail(r, where + ": pruned tensor is not acyclic");
    }
  }
  return r;
}

SuiteResult join_suite(std::uint64_t seed, std::size_t count) {
  SuiteResult r;
  r.name = "simplicial join";
  RandomSource rng(seed);
  for (std::size_t k = 0; k < count; ++k) {
    std::size_t a = rng.uniform(1, 6);
    std::size_t b = rng.uniform(1, 6);
    auto d1 = rng.simplicial(0, a, 3);
    auto d2 = rng.simplicial(a, b, 3);
    ++r.cases;
    if (auto check = join_iso_check(d1, d2); !check) {
      fail(r, d1.to_string() + " * " + d2.to_string() + ": " + check.message);
    }
  }
  return r;
}

SuiteResult supported_suite(std::uint64_t seed, std::size_t count) {
  SuiteResult r;
  r.name = "supported resolutions";
  RandomSource rng(seed);
  constexpr std::size_t nvars = 8;
  auto ring = Ring::numbered("x", nvars);
  for (std::size_t k = 0; k < count; ++k) {
    auto p1 = supported_piece(rng, nvars, 0);
    auto p2 = supported_piece(rng, nvars, p1.vars_used);
    auto d = join(p1.complex, shift(p2.complex, p1.gens.size()));
    std::vector<Monomial> gens = p1.gens;
    gens.insert(gens.end(), p2.gens.begin(), p2.gens.end());
    for (const auto* piece : {&p1, &p2}) {
      ++r.cases;
      auto res = supported_resolution_check(MonomialIdeal(ring, piece->gens), piece->gens, piece->complex);
      if (!res.ok()) fail(r, piece->complex.to_string() + ": piece is not a minimal resolution");
    }
    ++r.cases;
    auto res = supported_resolution_check(MonomialIdeal(ring, gens), gens, d);
    if (!res.ok()) fail(r, d.to_string() + ": join is not a minimal resolution");
  }
  return r;
}

SuiteResult dissup_suite(std::uint64_t seed, std::size_t count) {
  SuiteResult r;
  r.name = "leading-term support implication";
  RandomSource rng(seed);
  for (std::size_t k = 0; k < count; ++k) {
    std::size_t nvars = rng.uniform(2, 5);
    auto ring = Ring::numbered("x", nvars);
    auto [a, b] = rng.split(nvars);
    // every third pair shares a variable so that the hypothesis can fail
    if (k % 3 == 2) b.push_back(a.front());
    auto gens = [&](const std::vector<std::size_t>& vars) {
      std::vector<Polynomial> out;
      std::size_t m = rng.uniform(1, 2);
      for (std::size_t t = 0; t < m; ++t) out.push_back(rng.polynomial(ring, vars, 3, 2));
      return Ideal(ring, std::move(out));
    };
    Ideal i = gens(a);
    Ideal j = gens(b);
    auto order = MonomialOrder::grevlex();
    if (!lt_support_transversal(i, j, order)) {
      ++r.skipped;
      continue;
    }
    ++r.cases;
    if (!transversal(i, j, order).equal) fail(r, i.to_string() + " and " + j.to_string());
  }
  return r;
}

}  // namespace transint::cli
