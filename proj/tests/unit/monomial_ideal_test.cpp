#include <gtest/gtest.h>

#include <algorithm>

#include "helpers.hpp"

namespace transint {
namespace {

using testing::mideal;
using testing::mono;
using testing::strings;

RingPtr R(std::size_t n = 4) { return Ring::numbered("x", n); }

TEST(MonomialIdeal, Minimalize) {
  auto r = R();
  EXPECT_EQ(strings(mideal(r, {"x1", "x1*x2", "x2^2"})), (std::vector<std::string>{"x2^2", "x1"}));
  EXPECT_EQ(strings(mideal(r, {"x1*x2"})), (std::vector<std::string>{"x1*x2"}));
  EXPECT_EQ(mideal(r, {"x1^2*x2", "x1*x2^2", "x1^2*x2^2"}), mideal(r, {"x1^2*x2", "x1*x2^2"}));
}

TEST(MonomialIdeal, MinimalizeIsIdempotentAndOrderFree) {
  RandomSource rng(11);
  auto r = R(5);
  for (int k = 0; k < 100; ++k) {
    auto m = rng.monomial_ideal(r, 8, 5);
    auto gens = m.generators();
    EXPECT_EQ(minimalize(r, gens), m);
    std::reverse(gens.begin(), gens.end());
    EXPECT_EQ(MonomialIdeal(r, gens), m);
  }
}

TEST(MonomialIdeal, Contains) {
  auto r = R();
  EXPECT_TRUE(contains(mideal(r, {"x1*x2"}), mono(r, "x1*x2*x3")));
  EXPECT_FALSE(contains(mideal(r, {"x1*x2"}), mono(r, "x1")));
  MonomialIdeal unit(r, {Monomial::one(4)});
  EXPECT_TRUE(unit.is_unit());
  EXPECT_TRUE(contains(unit, mono(r, "x4^3")));
  EXPECT_TRUE(contains(unit, Monomial::one(4)));
}

TEST(MonomialIdeal, Intersect) {
  auto r = R();
  EXPECT_EQ(intersect(mideal(r, {"x1", "x2"}), mideal(r, {"x3"})), mideal(r, {"x1*x3", "x2*x3"}));
  EXPECT_EQ(intersect(mideal(r, {"x1"}), mideal(r, {"x1*x2"})), mideal(r, {"x1*x2"}));
  EXPECT_EQ(intersect(mideal(r, {"x1^2"}), mideal(r, {"x1^3"})), mideal(r, {"x1^3"}));
}

TEST(MonomialIdeal, Multiply) {
  auto r = R();
  EXPECT_EQ(multiply(mideal(r, {"x1", "x2"}), mideal(r, {"x3"})), mideal(r, {"x1*x3", "x2*x3"}));
  EXPECT_EQ(multiply(mideal(r, {"x1"}), mideal(r, {"x1*x2"})), mideal(r, {"x1^2*x2"}));
  auto i = mideal(r, {"x1*x2", "x3^2"});
  EXPECT_EQ(multiply(i, MonomialIdeal(r, {Monomial::one(4)})), i);
}

TEST(MonomialIdeal, SumEqualsSupport) {
  auto r = R();
  EXPECT_EQ(sum(mideal(r, {"x1"}), mideal(r, {"x2"})), mideal(r, {"x1", "x2"}));
  EXPECT_TRUE(equals(mideal(r, {"x1", "x1*x2"}), mideal(r, {"x1"})));
  EXPECT_EQ(ideal_support(mideal(r, {"x1*x3", "x2"})), (std::vector<std::size_t>{0, 1, 2}));
}

TEST(MonomialIdeal, Colon) {
  auto r = R();
  EXPECT_EQ(colon(mideal(r, {"x1*x2", "x3^2"}), mono(r, "x1*x3")), mideal(r, {"x2", "x3"}));
}

TEST(MonomialIdeal, IntersectionMembershipOnRandomMonomials) {
  RandomSource rng(5);
  auto r = R(4);
  std::vector<std::size_t> all = {0, 1, 2, 3};
  for (int k = 0; k < 50; ++k) {
    auto i = rng.monomial_ideal(r, 4, 4);
    auto j = rng.monomial_ideal(r, 4, 4);
    auto both = intersect(i, j);
    auto prod = multiply(i, j);
    for (int t = 0; t < 40; ++t) {
      auto m = rng.monomial(4, all, 7);
      EXPECT_EQ(contains(both, m), contains(i, m) && contains(j, m));
    }
    for (const auto& g : prod.generators()) EXPECT_TRUE(contains(both, g));
  }
}

TEST(Transversality, Examples) {
  auto r = R();
  auto a = is_transversal_monomial(mideal(r, {"x1", "x2"}), mideal(r, {"x3", "x4"}));
  EXPECT_TRUE(a.transversal);
  EXPECT_TRUE(a.support_disjoint);
  auto b = is_transversal_monomial(mideal(r, {"x1"}), mideal(r, {"x1*x2"}));
  EXPECT_FALSE(b.transversal);
  EXPECT_FALSE(b.support_disjoint);
}

TEST(Transversality, ZeroAndUnitIdeals) {
  auto r = R();
  auto z = is_transversal_monomial(MonomialIdeal(r), mideal(r, {"x1"}));
  EXPECT_TRUE(z.transversal);
  EXPECT_TRUE(z.support_disjoint);
  EXPECT_THROW(is_transversal_monomial(MonomialIdeal(r, {Monomial::one(4)}), mideal(r, {"x1"})), DomainError);
}

// Headline property: lcm intersection = product iff the generator supports
// are disjoint. The oracle recomputes both sides by brute force here.
TEST(Transversality, DisjointSupportEquivalence) {
  RandomSource rng(2024);
  for (int k = 0; k < 200; ++k) {
    auto r = Ring::numbered("x", rng.uniform(1, 6));
    auto i = rng.monomial_ideal(r, 6, 6);
    auto j = rng.monomial_ideal(r, 6, 6);
    std::vector<Monomial> lcms, prods;
    for (const auto& a : i.generators()) {
      for (const auto& b : j.generators()) {
        lcms.push_back(lcm(a, b));
        prods.push_back(a * b);
      }
    }
    bool eq = minimalize(r, lcms) == minimalize(r, prods);
    auto si = ideal_support(i), sj = ideal_support(j);
    std::vector<std::size_t> common;
    std::set_intersection(si.begin(), si.end(), sj.begin(), sj.end(), std::back_inserter(common));
    EXPECT_EQ(eq, common.empty()) << i.to_string() << " " << j.to_string();
    auto res = is_transversal_monomial(i, j);
    EXPECT_EQ(res.transversal, eq);
    EXPECT_EQ(res.support_disjoint, common.empty());
  }
}

}  // namespace
}  // namespace transint
