#include <gtest/gtest.h>

#include <algorithm>

#include "helpers.hpp"

namespace transint {
namespace {

using testing::mideal;
using testing::mono;

RingPtr R(std::size_t n) { return Ring::numbered("x", n); }

std::map<std::size_t, std::string> column(const FreeComplex& c, std::size_t level, std::size_t col) {
  std::map<std::size_t, std::string> out;
  for (const auto& e : c.diff(level).column(col)) out[e.row] = e.value.to_string();
  return out;
}

TEST(Faces, Examples) {
  auto simplex = standard_simplex({1, 2, 3});
  EXPECT_EQ(simplex.faces(1), (std::vector<Face>{{1, 2}, {1, 3}, {2, 3}}));
  SimplicialComplex d({{1, 2}, {3}});
  EXPECT_EQ(d.faces(1), (std::vector<Face>{{1, 2}}));
  EXPECT_EQ(d.faces(-1), (std::vector<Face>{{}}));
  EXPECT_EQ(d.dimension(), 1);
  EXPECT_EQ(SimplicialComplex().dimension(), -1);
}

TEST(Faces, ClosedUnderSubsets) {
  RandomSource rng(19);
  for (int k = 0; k < 30; ++k) {
    auto d = rng.simplicial(1, rng.uniform(1, 6), 4);
    for (int dim = 0; dim <= d.dimension(); ++dim) {
      for (const auto& f : d.faces(dim)) {
        EXPECT_TRUE(d.contains(f));
        for (std::size_t drop = 0; drop < f.size(); ++drop) {
          Face g = f;
          g.erase(g.begin() + static_cast<std::ptrdiff_t>(drop));
          EXPECT_TRUE(d.contains(g));
        }
      }
    }
  }
}

TEST(Join, Examples) {
  EXPECT_EQ(join(SimplicialComplex({{1, 2}}), SimplicialComplex({{3}, {4}})), SimplicialComplex({{1, 2, 3}, {1, 2, 4}}));
  EXPECT_EQ(join(standard_simplex({1, 2}), standard_simplex({3, 4, 5})), standard_simplex({1, 2, 3, 4, 5}));
  SimplicialComplex d({{1, 2}, {2, 3}});
  EXPECT_EQ(join(d, SimplicialComplex()), d);
  EXPECT_EQ(join(SimplicialComplex(), d), d);
  EXPECT_THROW(join(d, SimplicialComplex({{3, 4}})), DomainError);
}

TEST(Join, RelabelAndShift) {
  SimplicialComplex d({{1, 2}, {3}});
  EXPECT_EQ(shift(d, 10), SimplicialComplex({{11, 12}, {13}}));
  EXPECT_EQ(relabel(d, {{1, 7}, {2, 8}, {3, 9}}), SimplicialComplex({{7, 8}, {9}}));
  EXPECT_THROW(relabel(d, {{1, 7}, {2, 7}, {3, 9}}), DomainError);
}

TEST(ChainComplex, EdgeBoundary) {
  auto c = chain_complex(standard_simplex({1, 2}));
  ASSERT_EQ(c.ranks(), (std::vector<std::size_t>{1, 2, 1}));
  // ∂e_{12} = e_2 − e_1
  EXPECT_EQ(column(c, 2, 0), (std::map<std::size_t, std::string>{{0, "-1"}, {1, "1"}}));
  EXPECT_EQ(column(c, 1, 0), (std::map<std::size_t, std::string>{{0, "1"}}));
}

TEST(ChainComplex, SimplexRanksAndRandomBoundaries) {
  for (std::size_t m = 1; m <= 5; ++m) {
    std::vector<std::size_t> v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = i + 1;
    auto c = chain_complex(standard_simplex(v));
    std::uint64_t binom = 1;
    for (std::size_t i = 0; i <= m; ++i) {
      EXPECT_EQ(c.rank(i), binom);
      binom = binom * (m - i) / (i + 1);
    }
  }
  RandomSource rng(101);
  for (int k = 0; k < 50; ++k) {
    auto d = rng.simplicial(0, rng.uniform(1, 7), 4);
    EXPECT_TRUE(verify_complex(chain_complex(d))) << d.to_string();
  }
}

TEST(Homogenize, KoszulFrame) {
  auto r = R(2);
  auto h = homogenize(chain_complex(standard_simplex({1, 2})), {mono(r, "x1"), mono(r, "x2")}, r);
  EXPECT_EQ(h.level(2)[0].mdeg, mono(r, "x1*x2"));
  EXPECT_EQ(column(h, 2, 0), (std::map<std::size_t, std::string>{{0, "-x2"}, {1, "x1"}}));
}

TEST(Homogenize, EmptyFrameIsTheRing) {
  auto r = R(2);
  auto h = homogenize(chain_complex(SimplicialComplex()), {}, r);
  EXPECT_EQ(h.ranks(), (std::vector<std::size_t>{1}));
}

TEST(Homogenize, RankMismatch) {
  auto r = R(2);
  EXPECT_THROW(homogenize(chain_complex(standard_simplex({1, 2})), {mono(r, "x1")}, r), DomainError);
}

TEST(Homogenize, SimplexGivesTaylorComplex) {
  RandomSource rng(13);
  for (int k = 0; k < 20; ++k) {
    auto r = R(5);
    auto m = rng.monomial_ideal(r, 5, 3);
    std::vector<std::size_t> v(m.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = i;
    auto h = homogenize(chain_complex(standard_simplex(v)), m.generators(), r);
    auto t = taylor(m);
    ASSERT_EQ(h.ranks(), t.ranks());
    for (std::size_t i = 0; i <= t.length(); ++i) {
      for (std::size_t b = 0; b < t.rank(i); ++b) {
        EXPECT_EQ(h.level(i)[b].mdeg, t.level(i)[b].mdeg);
        if (i > 0) EXPECT_EQ(column(h, i, b), column(t, i, b));
      }
    }
  }
}

TEST(JoinIso, Examples) {
  EXPECT_TRUE(join_iso_check(standard_simplex({1, 2}), standard_simplex({3, 4})));
  EXPECT_TRUE(join_iso_check(SimplicialComplex({{1, 2}}), SimplicialComplex({{3}, {4}})));
  // interleaved vertex sets need the shuffle sign
  EXPECT_TRUE(join_iso_check(SimplicialComplex({{1, 3}}), SimplicialComplex({{2}, {4}})));
  EXPECT_THROW(join_iso_check(SimplicialComplex({Face{1}}), SimplicialComplex({{1, 2}})), DomainError);
}

TEST(JoinIso, RandomPairs) {
  RandomSource rng(37);
  for (int k = 0; k < 30; ++k) {
    std::size_t a = rng.uniform(1, 6), b = rng.uniform(1, 6);
    auto d1 = rng.simplicial(0, a, 3);
    auto d2 = rng.simplicial(a, b, 3);
    EXPECT_TRUE(join_iso_check(d1, d2)) << d1.to_string() << " * " << d2.to_string();
    auto t = tensor(chain_complex(d1), chain_complex(d2));
    EXPECT_EQ(t.ranks(), chain_complex(join(d1, d2)).ranks());
  }
}

TEST(JoinIso, AgreesWithTaylorIsoOnSimplices) {
  auto r = R(5);
  auto i = mideal(r, {"x1", "x2*x3"});
  auto j = mideal(r, {"x4^2", "x5", "x4*x5"});
  EXPECT_TRUE(join_iso_check(standard_simplex({0, 1}), standard_simplex({2, 3})));
  EXPECT_TRUE(taylor_iso_check(i, mideal(r, {"x4", "x5"})));
  EXPECT_TRUE(taylor_iso_check(i, j));
}

TEST(Supported, KoszulSimplex) {
  auto r = R(3);
  EXPECT_TRUE(supported_resolution_check(mideal(r, {"x1", "x2", "x3"}), standard_simplex({1, 2, 3})).ok());
}

TEST(Supported, CycleIdealOnTriangleIsNotMinimal) {
  auto r = R(3);
  auto res = supported_resolution_check(mideal(r, {"x1*x2", "x2*x3", "x1*x3"}), standard_simplex({1, 2, 3}));
  EXPECT_TRUE(res.is_complex);
  EXPECT_TRUE(res.acyclic);
  EXPECT_FALSE(res.minimal);
  EXPECT_FALSE(res.ok());
}

TEST(Supported, PathSupportsPathIdeal) {
  auto r = R(4);
  std::vector<Monomial> gens = {mono(r, "x1*x2"), mono(r, "x2*x3"), mono(r, "x3*x4")};
  auto m = MonomialIdeal(r, gens);
  EXPECT_TRUE(supported_resolution_check(m, gens, SimplicialComplex({{0, 1}, {1, 2}})).ok());
  // disconnected support misses the syzygy between the outer generators
  auto res = supported_resolution_check(m, gens, SimplicialComplex({{0, 1}, {2}}));
  EXPECT_FALSE(res.acyclic);
}

TEST(Supported, JoinSupportsSum) {
  auto r = R(8);
  std::vector<Monomial> g1 = {mono(r, "x1*x2"), mono(r, "x2*x3"), mono(r, "x3*x4")};
  std::vector<Monomial> g2 = {mono(r, "x5^2"), mono(r, "x6"), mono(r, "x7*x8")};
  SimplicialComplex d1({{0, 1}, {1, 2}});
  auto d2 = standard_simplex({3, 4, 5});
  std::vector<Monomial> all = g1;
  all.insert(all.end(), g2.begin(), g2.end());
  EXPECT_TRUE(is_transversal_monomial(MonomialIdeal(r, g1), MonomialIdeal(r, g2)).transversal);
  EXPECT_TRUE(supported_resolution_check(MonomialIdeal(r, all), all, join(d1, d2)).ok());
}

TEST(Supported, CountMismatch) {
  auto r = R(3);
  EXPECT_THROW(supported_resolution_check(mideal(r, {"x1", "x2"}), standard_simplex({1, 2, 3})), DomainError);
  std::vector<Monomial> wrong = {mono(r, "x1"), mono(r, "x3")};
  EXPECT_THROW(supported_resolution_check(mideal(r, {"x1", "x2"}), wrong, standard_simplex({1, 2})), DomainError);
}

}  // namespace
}  // namespace transint
