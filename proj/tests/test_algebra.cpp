#include <gtest/gtest.h>

#include <random>

#include "assoc_hermite/algebra.hpp"

using namespace hermite;

namespace {

const Poly x = Poly::x();
const Poly c = Poly::c();

Poly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 6), coef(-9, 9), count(0, 6);
  Poly p;
  for (int i = count(rng); i > 0; --i) {
    int den = 1 + std::abs(coef(rng));
    p += Poly::monomial(Rational(coef(rng), den), deg(rng), deg(rng));
  }
  return p;
}

}  // namespace

TEST(Poly, AdditionCancels) {
  EXPECT_EQ((x * x - c) + c, x * x);
  EXPECT_TRUE(((x * x - c) + c).coefficient(0, 1) == 0);
  EXPECT_EQ((x * x - c).terms().size(), 2u);
  EXPECT_EQ(((x * x - c) + c).terms().size(), 1u);
}

TEST(Poly, AdditiveIdentity) {
  Poly p = 3 * x.pow(2) * c - Rational(1, 2) * c;
  EXPECT_EQ(p + Poly(), p);
  EXPECT_EQ(Poly() + p, p);
}

TEST(Poly, TermwiseSum) {
  Poly a = 2 * c.pow(2) + c, b = 5 * c.pow(3) + 7 * c.pow(2) + 3 * c;
  Poly s = a + b;
  EXPECT_EQ(s, 5 * c.pow(3) + 9 * c.pow(2) + 4 * c);
  // at c = 2: 10 + 74 = 84
  EXPECT_EQ(s.eval(0, 2), Rational(84));
}

TEST(Poly, Products) {
  EXPECT_EQ(x * x, Poly::monomial(1, 2, 0));
  EXPECT_EQ((x * x - c) * 1, x * x - c);
  Poly p = c * (c + 1) * (c + 2);
  EXPECT_EQ(p, c.pow(3) + 3 * c.pow(2) + 2 * c);
  EXPECT_EQ(p.eval(0, 1), Rational(6));
}

TEST(Poly, Accessors) {
  Poly h3 = x.pow(3) - (2 * c + 1) * x;
  EXPECT_EQ(h3.degree_x(), 3);
  EXPECT_EQ(h3.degree_c(), 1);
  EXPECT_EQ(h3.coefficient_of_x(1), -(2 * c + 1));
  EXPECT_EQ(h3.coefficient(1, 1), Rational(-2));
  EXPECT_EQ(Poly().degree_x(), -1);
  EXPECT_TRUE(Poly().is_zero());
}

TEST(Poly, Printing) {
  EXPECT_EQ((x * x - c).to_string(), "x^2 - c");
  EXPECT_EQ((5 * c.pow(3) + 7 * c.pow(2) + 3 * c).to_string(), "5c^3 + 7c^2 + 3c");
  EXPECT_EQ(Poly().to_string(), "0");
  EXPECT_EQ(Poly(1).to_string(), "1");
  EXPECT_EQ((Rational(1, 2) * c.pow(2) + Rational(1, 2) * c).to_string(), "(1/2)c^2 + (1/2)c");
}

TEST(Poly, Evaluation) {
  EXPECT_EQ((x * x - c).eval(0, 0), Rational(0));
  EXPECT_EQ((5 * c.pow(3) + 7 * c.pow(2) + 3 * c).eval(0, 1), Rational(15));
  EXPECT_EQ((c.pow(3) + 4 * c.pow(2) + 3 * c).eval(0, 1), Rational(8));
  EXPECT_EQ((x * c - x).eval(Rational(1, 3), Rational(4)), Rational(1));
}

TEST(Poly, NonnegativeIntegerCheck) {
  EXPECT_TRUE((c.pow(2) + 3 * c).has_nonnegative_integer_coefficients());
  EXPECT_FALSE((c.pow(2) - c).has_nonnegative_integer_coefficients());
  EXPECT_FALSE((Rational(1, 2) * c).has_nonnegative_integer_coefficients());
}

TEST(Poly, ShiftMatchesSubstitutionAtPoints) {
  Poly p = x.pow(2) * c.pow(3) - 4 * c.pow(2) + Rational(2, 3) * x;
  Poly q = p.shift_c(1);
  for (int xv = -2; xv <= 2; ++xv)
    for (int cv = -3; cv <= 3; ++cv) EXPECT_EQ(q.eval(xv, cv), p.eval(xv, cv + 1));
  EXPECT_EQ(p.substitute_c(2).degree_c(), 0);
  EXPECT_EQ(p.substitute_c(2).eval(1, 99), p.eval(1, 2));
}

TEST(Poly, NegativePowerThrows) { EXPECT_THROW(c.pow(-1), std::domain_error); }

TEST(Poly, RingAxiomsOnRandomPolynomials) {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 300; ++trial) {
    Poly a = random_poly(rng), b = random_poly(rng), d = random_poly(rng);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ((a + b) + d, a + (b + d));
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a * b) * d, a * (b * d));
    ASSERT_EQ(a * (b + d), a * b + a * d);
    ASSERT_EQ(a * Poly(1), a);
    ASSERT_TRUE((a - a).is_zero());
    // evaluation is a ring homomorphism
    Rational xv(trial % 5 - 2, 3), cv(trial % 7 - 3, 2);
    ASSERT_EQ((a * b + d).eval(xv, cv), a.eval(xv, cv) * b.eval(xv, cv) + d.eval(xv, cv));
  }
}

TEST(Poly, NoZeroTermsStored) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    Poly a = random_poly(rng), b = random_poly(rng);
    const Poly p = a * b - b * a + a;
    for (const auto& [e, v] : p.terms()) ASSERT_NE(v, 0);
  }
}

TEST(Rising, SmallCases) {
  EXPECT_EQ(rising_factorial(c, 0), Poly(1));
  EXPECT_EQ(rising_factorial(c, 2), c.pow(2) + c);
  EXPECT_EQ(rising_factorial(c, 3), c.pow(3) + 3 * c.pow(2) + 2 * c);
}

TEST(Rising, AtOneIsFactorial) {
  Integer f = 1;
  for (int n = 0; n <= 10; ++n) {
    if (n > 0) f *= n;
    EXPECT_EQ(rising_factorial(c, n).eval(0, 1), Rational(f)) << n;
  }
}

TEST(Binomial, PolynomialBinomials) {
  EXPECT_EQ(binomial_poly(c + 1, 1), c + 1);
  EXPECT_EQ(binomial_poly(c + 1, 2), Rational(1, 2) * (c.pow(2) + c));
  EXPECT_EQ(binomial_poly(c + 1, 0), Poly(1));
  // top n-1+c with n = 2, k = 1
  EXPECT_EQ(binomial_poly(c + (2 - 1), 1), c + 1);
}

TEST(Binomial, IntegerValuesMatchPascal) {
  // Pascal triangle built independently
  std::vector<std::vector<Integer>> pascal(20, std::vector<Integer>(20, 0));
  for (int n = 0; n < 20; ++n) {
    pascal[n][0] = 1;
    for (int k = 1; k <= n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + (k < n ? pascal[n - 1][k] : Integer(0));
  }
  for (int k = 0; k <= 6; ++k)
    for (int t = 1; t <= 10; ++t) {
      EXPECT_EQ(binomial_poly(c + (k - 1), k).eval(0, t), Rational(pascal[t + k - 1][k])) << k << " " << t;
      EXPECT_EQ(binomial(t + k - 1, k), pascal[t + k - 1][k]);
    }
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(3, -1), 0);
}

TEST(Tally, MatchesDirectSum) {
  MonomialTally t;
  t.add(1, 2, 0);
  t.add(-1, 0, 1);
  t.add(1, 0, 1);
  t.add(-1, 0, 1);
  EXPECT_EQ(t.to_poly(), x * x - c);
}
