#include <gtest/gtest.h>

#include "assoc_hermite/models.hpp"
#include "assoc_hermite/permutations.hpp"

using namespace hermite;

namespace {

const Poly x = Poly::x();
const Poly c = Poly::c();

// scalar three-term recurrence at a point
Rational assoc_at(int n, const Rational& xv, const Rational& cv) {
  Rational prev = 0, cur = 1;
  for (int k = 0; k < n; ++k) {
    Rational next = xv * cur - (Rational(k - 1) + cv) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// unsigned Stirling numbers of the first kind as a polynomial in c
Poly stirling_gf(int n) {
  std::vector<std::vector<Integer>> s(n + 1, std::vector<Integer>(n + 1, 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int k = 1; k <= i; ++k) s[i][k] = s[i - 1][k - 1] + Integer(i - 1) * s[i - 1][k];
  Poly p;
  for (int k = 0; k <= n; ++k) p += Poly::monomial(Rational(s[n][k]), 0, k);
  return p;
}

// fake-edge matchings on `vertices` vertices
std::vector<Matching> fake_edge_matchings(int vertices) {
  std::vector<Matching> out;
  for (const auto& m : enumerate_incomplete(vertices))
    if (is_fake_edge_matching(m)) out.push_back(m);
  return out;
}

}  // namespace

TEST(Recurrence, FirstPolynomials) {
  auto h = hermite_assoc_table(4);
  EXPECT_EQ(h[0], Poly(1));
  EXPECT_EQ(h[1], x);
  EXPECT_EQ(h[2], x * x - c);
  EXPECT_EQ(h[3], x.pow(3) - (2 * c + 1) * x);
  EXPECT_EQ(h[4], x.pow(4) - (3 * c + 3) * x * x + c * c + 2 * c);
  EXPECT_TRUE(hermite_assoc(-1).is_zero());
}

TEST(Recurrence, AgreesWithScalarRecurrenceAtPoints) {
  for (int n = 0; n <= 14; ++n) {
    Poly h = hermite_assoc(n);
    EXPECT_EQ(h.degree_x(), n);
    EXPECT_EQ(h.coefficient(n, 0), Rational(1));
    for (int a = -3; a <= 3; ++a)
      for (int b = -2; b <= 4; ++b) {
        Rational xv(a, 2), cv(b, 3);
        ASSERT_EQ(h.eval(xv, cv), assoc_at(n, xv, cv)) << n;
      }
  }
}

TEST(Recurrence, ParityAndUsualAtOne) {
  for (int n = 0; n <= 12; ++n) {
    const Poly h = hermite_assoc(n);
    for (const auto& [e, v] : h.terms()) ASSERT_EQ((n - e.xd) % 2, 0);
    EXPECT_EQ(hermite_assoc(n).substitute_c(1), hermite_usual(n));
  }
  EXPECT_EQ(hermite_usual(4), x.pow(4) - 6 * x * x + 3);
}

TEST(Matchings, EverySchemeReproducesTheRecurrence) {
  for (auto s : {WeightScheme::PolyRightmost, WeightScheme::PolyLeftmost, WeightScheme::PolyRightmostReversed,
                 WeightScheme::PolyLeftmostReversed})
    for (int n = 0; n <= 10; ++n) EXPECT_EQ(hermite_assoc_from_matchings(n, s), hermite_assoc(n)) << n;
  EXPECT_THROW(hermite_assoc_from_matchings(4, WeightScheme::MomentNonnested), std::domain_error);
}

TEST(Matchings, XCoefficientOfThree) {
  // (1,2) nests nothing: -c; (2,3): -c; (1,3) nests 2: -1
  EXPECT_EQ(hermite_assoc_from_matchings(3).coefficient_of_x(1), -(2 * c + 1));
}

TEST(FakeEdge, Predicate) {
  EXPECT_TRUE(is_fake_edge_matching(Matching(2, {{1, 2}})));
  EXPECT_TRUE(is_fake_edge_matching(Matching(3, {{1, 3}})));
  EXPECT_FALSE(is_fake_edge_matching(Matching(3, {{1, 2}})));  // fixed point to the right
  EXPECT_FALSE(is_fake_edge_matching(Matching(4, {{1, 2}, {3, 4}})));
  EXPECT_TRUE(is_fake_edge_matching(Matching(4, {{1, 3}, {2, 4}})));
  EXPECT_FALSE(is_fake_edge_matching(Matching(3, {{2, 3}})));
  EXPECT_THROW(fake_edge_weight(Matching(2)), std::domain_error);
}

TEST(FakeEdge, ModelEqualsShiftedPolynomial) {
  for (int n = 0; n <= 10; ++n) EXPECT_EQ(hermite_fake_edge_model(n), hermite_assoc_shifted(n)) << n;
  EXPECT_EQ(hermite_fake_edge_model(2), x * x - (c + 1));
}

TEST(FakeEdge, CaseSplitOnRightmostNestedVertex) {
  // Split fake-edge matchings on n+3 vertices by the vertex just left of the
  // fake edge's right end: fixed, joined to the last vertex, or elsewhere.
  auto gf = [](const std::vector<Matching>& ms) {
    Poly s;
    for (const auto& m : ms) s += fake_edge_weight(m).to_poly();
    return s;
  };
  for (int n = 1; n <= 6; ++n) {
    const int N = n + 3;
    std::vector<Matching> fixed, to_last, other;
    for (const auto& m : fake_edge_matchings(N)) {
      int v = m.mate(1) - 1;
      ASSERT_GE(v, 2);
      if (m.is_fixed(v))
        fixed.push_back(m);
      else if (m.mate(v) == N)
        to_last.push_back(m);
      else
        other.push_back(m);
    }
    Poly smaller = gf(fake_edge_matchings(N - 1)), smallest = gf(fake_edge_matchings(N - 2));
    EXPECT_EQ(gf(fixed), x * smaller) << n;
    EXPECT_EQ(gf(to_last), -c * smallest) << n;
    EXPECT_EQ(gf(other), -Rational(n) * smallest) << n;
    EXPECT_EQ(static_cast<int>(other.size()), n * static_cast<int>(fake_edge_matchings(N - 2).size()));
  }
}

TEST(FakeEdge, ExpansionInUsualHermites) {
  for (int n = 0; n <= 12; ++n) {
    EXPECT_EQ(identity_rhs(n), hermite_assoc_shifted(n)) << n;
    EXPECT_EQ(identity_rhs(n).substitute_c(0), hermite_usual(n));
  }
  EXPECT_EQ(identity_rhs(2), x * x - 1 - c);
}

TEST(Chebyshev, ClosedForm) {
  for (int n = 0; n <= 12; ++n) {
    Poly closed;
    for (int k = 0; 2 * k <= n; ++k)
      closed += Poly::monomial(Rational(k % 2 == 0 ? binomial(n - k, k) : -binomial(n - k, k)), n - 2 * k, 0);
    EXPECT_EQ(chebyshev_U(n), closed) << n;
    EXPECT_EQ(chebyshev_U_from_matchings(n), closed) << n;
    ChebyshevLimit lim = chebyshev_limit(n);
    EXPECT_EQ(lim.limit, closed) << n;
    EXPECT_LE(lim.max_c_exponent, 0);
  }
}

TEST(Chebyshev, LimitNumerically) {
  // c^{-n/2} H_n(x sqrt c; c) at x = 1, c = 10^6 with c a perfect square
  const int n = 6;
  Rational root = 1000, cv = root * root;
  Rational scaled = assoc_at(n, root, cv) / (cv * cv * cv);
  Rational target = chebyshev_U(n).eval(1, 0);
  Rational diff = scaled - target;
  if (diff < 0) diff = -diff;
  EXPECT_LT(diff, Rational(1, 1000));
}

TEST(Lemma, ConfigurationsGiveSignedRisingFactorial) {
  for (int k = 0; k <= 5; ++k) {
    Poly expected = stirling_gf(k);
    if (k % 2 != 0) expected = -expected;
    EXPECT_EQ(claim1_gf(k), expected) << k;
  }
  EXPECT_THROW(enumerate_claim1_configs(7), std::domain_error);
}

TEST(Lemma, InsertionSlots) {
  for (int k = 0; k <= 4; ++k)
    for (const auto& cfg : enumerate_claim1_configs(k)) {
      EXPECT_EQ(claim1_slots(cfg), std::make_pair(k, 1));
      EXPECT_EQ(claim2_slots(cfg), k + 1);
    }
}

TEST(Lemma, SmallConfigurations) {
  auto two = enumerate_claim1_configs(2);
  // (1,2)(3,4) with both -c, (1,3)(2,4) with (1,3) -c and (2,4) -1, ...
  Poly sum;
  for (const auto& cfg : two) sum += claim1_weight(cfg);
  EXPECT_EQ(sum, c * c + c);
}

TEST(Permutations, StatisticsGiveRisingFactorial) {
  for (int n = 1; n <= 7; ++n) {
    EXPECT_EQ(lrm_gf(n), stirling_gf(n));
    EXPECT_EQ(cycle_gf(n), stirling_gf(n));
    EXPECT_EQ(lrm_gf(n), rising_factorial(c, n));
  }
  EXPECT_EQ(lrm(Permutation{{3, 1, 4, 2, 5}}), 3);
  EXPECT_EQ(cyc(Permutation{{2, 1, 3}}), 2);
}

TEST(Permutations, SpanningMatchingsCarryLeftToRightMaxima) {
  for (int n = 1; n <= 6; ++n) {
    for_each_permutation(n, [&](const Permutation& p) {
      for (auto conv : {SpanningConvention::NoRightCrossing, SpanningConvention::Nonnested}) {
        Matching m = permutation_to_spanning_matching(p, conv);
        ASSERT_TRUE(is_spanning(m));
        ASSERT_EQ(spanning_matching_to_permutation(m, conv), p);
        int count = 0;
        for (const Edge& e : m.edges()) {
          EdgeStats s = edge_stats(m, e);
          if (conv == SpanningConvention::NoRightCrossing ? !s.has_right_crossing : !s.is_nested_by_other) ++count;
        }
        ASSERT_EQ(count, lrm(p));
      }
    });
  }
  EXPECT_THROW(spanning_matching_to_permutation(Matching(4, {{1, 2}, {3, 4}}), SpanningConvention::Nonnested),
               std::domain_error);
}

TEST(Permutations, SpanningGfIsShiftedRisingFactorial) {
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(permutation_matchings_gf(n), rising_factorial(c + 1, n - 1)) << n;
  EXPECT_THROW(permutation_matchings_gf(0), std::domain_error);
}
