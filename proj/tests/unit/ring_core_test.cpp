#include <gtest/gtest.h>

#include <random>

#include "helpers.hpp"

namespace transint {
namespace {

using testing::mono;
using testing::poly;

RingPtr R3() { return Ring::numbered("x", 3); }

// Textbook definitions, written independently of MonomialOrder.
int textbook_lex(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

int textbook_grevlex(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

int sign(std::strong_ordering o) { return o < 0 ? -1 : (o > 0 ? 1 : 0); }

std::vector<Monomial> all_monomials(std::size_t nvars, Exponent max_deg) {
  std::vector<Monomial> out;
  std::vector<Exponent> e(nvars, 0);
  for (;;) {
    Exponent total = 0;
    for (auto v : e) total += v;
    if (total <= max_deg) out.emplace_back(e);
    std::size_t i = 0;
    while (i < nvars && ++e[i] > max_deg) e[i++] = 0;
    if (i == nvars) break;
  }
  return out;
}

std::vector<MonomialOrder> shipped_orders() {
  return {MonomialOrder::lex(), MonomialOrder::grlex(), MonomialOrder::grevlex(), MonomialOrder::weight({3, 1, 2}),
          MonomialOrder::block({{{2}, MonomialOrder::lex()}, {{0, 1}, MonomialOrder::grevlex()}})};
}

TEST(MonomialOrder, LexPrefersFirstVariable) {
  auto r = Ring::make({"x", "y"});
  EXPECT_TRUE(MonomialOrder::lex().compare(mono(r, "x"), mono(r, "y^2")) > 0);
}

TEST(MonomialOrder, GrevlexBreaksTiesOnLastVariable) {
  auto r = Ring::make({"x", "y", "z"});
  EXPECT_TRUE(MonomialOrder::grevlex().compare(mono(r, "x*z"), mono(r, "y^2")) < 0);
}

TEST(MonomialOrder, Reflexive) {
  auto r = R3();
  for (const auto& o : shipped_orders()) EXPECT_TRUE(o.compare(mono(r, "x1*x2^3"), mono(r, "x1*x2^3")) == 0);
}

TEST(MonomialOrder, AgreesWithTextbookDefinitionsOnSmallDegrees) {
  auto ms = all_monomials(3, 3);
  for (const auto& a : ms) {
    for (const auto& b : ms) {
      EXPECT_EQ(sign(MonomialOrder::lex().compare(a, b)), textbook_lex(a, b));
      EXPECT_EQ(sign(MonomialOrder::grevlex().compare(a, b)), textbook_grevlex(a, b));
    }
  }
}

TEST(MonomialOrder, AxiomsOnRandomTriples) {
  std::mt19937_64 rng(20240501);
  std::uniform_int_distribution<Exponent> e(0, 4);
  auto draw = [&] { return Monomial{e(rng), e(rng), e(rng)}; };
  const Monomial one = Monomial::one(3);
  for (const auto& o : shipped_orders()) {
    for (int k = 0; k < 400; ++k) {
      auto a = draw(), b = draw(), c = draw();
      auto ab = o.compare(a, b);
      EXPECT_EQ(ab == 0, a == b);                               // total
      EXPECT_EQ(sign(o.compare(b, a)), -sign(ab));              // antisymmetric
      EXPECT_EQ(sign(o.compare(a * c, b * c)), sign(ab));       // multiplicative
      if (!a.is_one()) EXPECT_TRUE(o.compare(a, one) > 0);         // 1 is minimal
      if (ab < 0 && o.compare(b, c) < 0) EXPECT_TRUE(o.compare(a, c) < 0);  // transitive
    }
  }
}

TEST(MonomialOrder, ValidateRejectsWrongSizes) {
  EXPECT_THROW(MonomialOrder::weight({1, 2}).validate(3), ContextMismatch);
  EXPECT_THROW(MonomialOrder::block({{{0}, MonomialOrder::lex()}}).validate(2), Error);
}

TEST(Monomial, LcmDividesQuotient) {
  auto r = R3();
  EXPECT_EQ(lcm(mono(r, "x1^2*x2"), mono(r, "x2^3*x3")), mono(r, "x1^2*x2^3*x3"));
  EXPECT_TRUE(divides(mono(r, "x1*x2"), mono(r, "x1^2*x2*x3")));
  EXPECT_EQ(quotient(mono(r, "x1^2*x2*x3"), mono(r, "x1*x2")), mono(r, "x1*x3"));
  EXPECT_THROW(quotient(mono(r, "x1"), mono(r, "x2")), DomainError);
}

TEST(Monomial, LcmPropertiesOnRandomPairs) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<Exponent> e(0, 5);
  for (int k = 0; k < 300; ++k) {
    Monomial a{e(rng), e(rng), e(rng), e(rng)}, b{e(rng), e(rng), e(rng), e(rng)};
    auto l = lcm(a, b);
    EXPECT_TRUE(divides(a, l));
    EXPECT_TRUE(divides(b, l));
    EXPECT_TRUE(divides(l, a * b));
    EXPECT_EQ(l * gcd(a, b), a * b);
  }
}

TEST(Monomial, ExponentOverflowIsReported) {
  Monomial big{std::numeric_limits<Exponent>::max()};
  EXPECT_THROW(big * Monomial{1}, OverflowError);
}

TEST(Monomial, Support) {
  auto r = Ring::numbered("x", 4);
  std::vector<Monomial> s1 = {mono(r, "x1*x2"), mono(r, "x2^3")};
  EXPECT_EQ(support(s1), (std::vector<std::size_t>{0, 1}));
  std::vector<Monomial> unit = {Monomial::one(4)};
  EXPECT_TRUE(support(unit).empty());
  std::vector<Monomial> a = {mono(r, "x1*x2"), mono(r, "x3")}, b = {mono(r, "x4")};
  EXPECT_EQ(support(a), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(support(b), (std::vector<std::size_t>{3}));
  EXPECT_TRUE(support(std::vector<Monomial>{}).empty());
}

TEST(Polynomial, Arithmetic) {
  auto r = R3();
  EXPECT_EQ(poly(r, "x1*x3 - x2^2") + poly(r, "x2^2"), poly(r, "x1*x3"));
  EXPECT_EQ(poly(r, "x1 + x2") * poly(r, "x1 - x2"), poly(r, "x1^2 - x2^2"));
  EXPECT_TRUE(scale(0, poly(r, "x1 + 3")).is_zero());
  EXPECT_TRUE((poly(r, "x1") - poly(r, "x1")).terms().empty());
}

TEST(Polynomial, LeadingTerm) {
  auto r = R3();
  auto lt = poly(r, "x1*x3 - x2^2").leading_term(MonomialOrder::grevlex());
  EXPECT_EQ(lt.mono, mono(r, "x2^2"));
  EXPECT_EQ(lt.coeff, -1);
  EXPECT_EQ(poly(r, "x1^5 + x2").leading_term(MonomialOrder::lex()).mono, mono(r, "x1^5"));
  auto c = poly(r, "7").leading_term(MonomialOrder::lex());
  EXPECT_TRUE(c.mono.is_one());
  EXPECT_EQ(c.coeff, 7);
  EXPECT_THROW(Polynomial(r).leading_term(MonomialOrder::lex()), DomainError);
}

TEST(Polynomial, CrossRingOperationsAreRejected) {
  auto a = Ring::make({"x", "y"});
  auto b = Ring::make({"u", "v"});
  EXPECT_THROW(poly(a, "x") + poly(b, "u"), ContextMismatch);
  EXPECT_THROW(poly(a, "x") * poly(b, "u"), ContextMismatch);
}

TEST(Polynomial, RingLawsAndLeadingTermMultiplicativity) {
  RandomSource rng(99);
  auto r = Ring::numbered("x", 4);
  std::vector<std::size_t> all = {0, 1, 2, 3};
  for (int k = 0; k < 60; ++k) {
    auto f = rng.polynomial(r, all, 4, 3);
    auto g = rng.polynomial(r, all, 4, 3);
    auto h = rng.polynomial(r, all, 4, 3);
    EXPECT_EQ(f + g, g + f);
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ((f + g) + h, f + (g + h));
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f * (g + h), f * g + f * h);
    for (const auto& o : {MonomialOrder::lex(), MonomialOrder::grlex(), MonomialOrder::grevlex(),
                          MonomialOrder::weight({1, 2, 3, 4})}) {
      EXPECT_EQ((f * g).leading_term(o).mono, f.leading_term(o).mono * g.leading_term(o).mono);
    }
  }
}

TEST(Field, PrimeFieldReducesCoefficients) {
  auto r = Ring::make({"x"}, Field::prime(5));
  EXPECT_TRUE((poly(r, "3*x") + poly(r, "2*x")).is_zero());
  EXPECT_EQ(poly(r, "1/2*x"), poly(r, "3*x"));
  EXPECT_THROW(Field::prime(4), DomainError);
}

TEST(Ring, NamesAreValidated) {
  EXPECT_THROW(Ring::make({"x", "x"}), DomainError);
  EXPECT_THROW(Ring::make({"_t"}), DomainError);
  EXPECT_THROW(Ring::make({}), DomainError);
  EXPECT_THROW(Ring::numbered("x", kMaxVariables + 1), Error);
}

TEST(Parse, PolynomialGrammar) {
  auto r = R3();
  EXPECT_EQ(poly(r, "3/4 x1^2x2 - (x1 + x2)^2").to_string(), "3/4*x1^2*x2 - x1^2 - 2*x1*x2 - x2^2");
  EXPECT_THROW(poly(r, "x4"), ParseError);
  try {
    poly(r, "x1 +\n  x9");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 3u);
  }
  EXPECT_THROW(poly(r, "x1 x2 )"), ParseError);
}

TEST(Parse, RoundTripsThroughText) {
  RandomSource rng(3);
  auto r = Ring::numbered("x", 3);
  for (int k = 0; k < 50; ++k) {
    auto f = rng.polynomial(r, {0, 1, 2}, 5, 4);
    EXPECT_EQ(poly(r, f.to_string()), f);
    EXPECT_EQ(poly(r, f.to_string(MonomialOrder::lex())), f);
  }
}

}  // namespace
}  // namespace transint
