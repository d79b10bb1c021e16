#include <gtest/gtest.h>

#include <random>

#include "tropcong/number.hpp"

using namespace tropcong;

namespace {

mpz_class big(const Integer& a) { return a.to_mpz(); }

}  // namespace

TEST(Integer, ParseAndPrint) {
  EXPECT_EQ(Integer::parse("-42").str(), "-42");
  EXPECT_EQ(Integer::parse("+7"), Integer(7));
  const std::string huge = "123456789012345678901234567890";
  EXPECT_EQ(Integer::parse(huge).str(), huge);
  EXPECT_FALSE(Integer::parse(huge).fits_int64());
  EXPECT_THROW(Integer::parse("12a"), std::invalid_argument);
  EXPECT_THROW(Integer::parse("-"), std::invalid_argument);
}

TEST(Integer, OverflowPromotesAndDemotes) {
  Integer m(INT64_MAX);
  Integer s = m + Integer(1);
  EXPECT_FALSE(s.fits_int64());
  EXPECT_EQ(big(s), mpz_class("9223372036854775808"));
  Integer back = s - Integer(1);
  EXPECT_TRUE(back.fits_int64());
  EXPECT_EQ(back, m);
  Integer mn(INT64_MIN);
  EXPECT_FALSE((-mn).fits_int64());
  EXPECT_EQ(mn / Integer(-1), -mn);
  EXPECT_EQ(gcd(mn, mn), -mn);
}

TEST(Integer, MatchesGmpOnRandomOperands) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> pick(0, 3);
  auto draw = [&]() -> Integer {
    switch (pick(rng)) {
      case 0: return Integer(static_cast<std::int64_t>(rng() % 2001) - 1000);
      case 1: return Integer(static_cast<std::int64_t>(rng()));
      case 2: return Integer(INT64_MAX - static_cast<std::int64_t>(rng() % 3));
      default: return Integer(static_cast<std::int64_t>(rng())) * Integer(static_cast<std::int64_t>(rng()));
    }
  };
  for (int it = 0; it < 5000; ++it) {
    Integer a = draw(), b = draw();
    mpz_class A = big(a), B = big(b);
    EXPECT_EQ(big(a + b), A + B);
    EXPECT_EQ(big(a - b), A - B);
    EXPECT_EQ(big(a * b), A * B);
    EXPECT_EQ(a < b, A < B);
    EXPECT_EQ(a == b, A == B);
    if (!b.is_zero()) {
      mpz_class q, r, f;
      mpz_tdiv_q(q.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());
      mpz_tdiv_r(r.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());
      mpz_fdiv_q(f.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());
      EXPECT_EQ(big(a / b), q);
      EXPECT_EQ(big(a % b), r);
      EXPECT_EQ(big(floor_div(a, b)), f);
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), A.get_mpz_t(), B.get_mpz_t());
    EXPECT_EQ(big(gcd(a, b)), g);
  }
}

TEST(Integer, ExtendedGcd) {
  for (int a = -12; a <= 12; ++a)
    for (int b = -12; b <= 12; ++b) {
      Integer s, t;
      Integer g = ext_gcd(a, b, s, t);
      EXPECT_EQ(g, gcd(Integer(a), Integer(b)));
      EXPECT_EQ(s * a + t * b, g);
    }
}

TEST(Integer, Isqrt) {
  EXPECT_EQ(isqrt(0), Integer(0));
  EXPECT_EQ(isqrt(24), Integer(4));
  EXPECT_EQ(isqrt(25), Integer(5));
  EXPECT_THROW(isqrt(-1), std::domain_error);
}

TEST(Rational, NormalizesSignAndGcd) {
  Rational r(Integer(6), Integer(-4));
  EXPECT_EQ(r.num(), Integer(-3));
  EXPECT_EQ(r.den(), Integer(2));
  EXPECT_EQ(r.str(), "-3/2");
  EXPECT_EQ(Rational::parse("10/4"), Rational(Integer(5), Integer(2)));
  EXPECT_EQ(Rational::parse("-7").str(), "-7");
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/-2"), std::invalid_argument);
  EXPECT_THROW(Rational(Integer(1), Integer(0)), std::domain_error);
}

TEST(Rational, FloorAndCeil) {
  EXPECT_EQ(floor(Rational::parse("-3/2")), Integer(-2));
  EXPECT_EQ(ceil(Rational::parse("-3/2")), Integer(-1));
  EXPECT_EQ(floor(Rational::parse("7/7")), Integer(1));
}

TEST(Rational, MatchesGmpOnRandomOperands) {
  std::mt19937_64 rng(11);
  auto draw = [&]() -> Rational {
    std::int64_t n = static_cast<std::int64_t>(rng() % 4001) - 2000;
    std::int64_t d = static_cast<std::int64_t>(rng() % 60) + 1;
    if (rng() % 5 == 0) n = static_cast<std::int64_t>(rng() >> 2);
    if (rng() % 7 == 0) d = static_cast<std::int64_t>(rng() >> 3) + 1;
    return Rational(Integer(n), Integer(d));
  };
  auto q = [](const Rational& r) { return mpq_class(r.num().to_mpz(), r.den().to_mpz()); };
  for (int it = 0; it < 5000; ++it) {
    Rational a = draw(), b = draw();
    mpq_class A = q(a), B = q(b);
    EXPECT_EQ(q(a + b), A + B);
    EXPECT_EQ(q(a - b), A - B);
    EXPECT_EQ(q(a * b), A * B);
    if (!b.is_zero()) {
      EXPECT_EQ(q(a / b), A / B);
    }
    EXPECT_EQ(a < b, A < B);
    EXPECT_EQ(a == b, A == B);
    // Results stay in lowest terms, so equality is structural.
    Rational s = a + b;
    EXPECT_EQ(gcd(s.num(), s.den()), Integer(1));
    EXPECT_GT(s.den(), Integer(0));
  }
}

TEST(Vectors, PrimitiveAndClearDenominators) {
  EXPECT_EQ(primitive(IntVec{4, -6, 0}), (IntVec{2, -3, 0}));
  EXPECT_EQ(primitive(IntVec{0, 0}), (IntVec{0, 0}));
  RatVec v{Rational(Integer(1), Integer(2)), Rational(Integer(1), Integer(3))};
  EXPECT_EQ(clear_denominators(v), (IntVec{3, 2}));
}
