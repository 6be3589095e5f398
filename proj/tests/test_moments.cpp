#include <gtest/gtest.h>

#include "assoc_hermite/moments.hpp"

using namespace hermite;

namespace {

const Poly x = Poly::x();
const Poly c = Poly::c();

// Dyck paths as bit strings; a down step from height j weighs j-1+c+shift
Poly dyck_by_bits(int n, int shift) {
  if (n % 2 != 0) return Poly();
  Poly sum;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    int h = 0;
    bool ok = true;
    Poly w(1);
    for (int i = 0; i < n && ok; ++i) {
      if (mask >> i & 1u) {
        ++h;
      } else {
        w *= c + Poly(h - 1 + shift);
        if (--h < 0) ok = false;
      }
    }
    if (ok && h == 0) sum += w;
  }
  return sum;
}

Poly rising_by_hand(const Poly& base, int n) {
  Poly p(1);
  for (int i = 0; i < n; ++i) p *= base + Poly(i);
  return p;
}

}  // namespace

TEST(Dyck, PathListing) {
  int count = 0;
  for_each_dyck_path(8, [&](const DyckPath& p) {
    EXPECT_TRUE(p.is_valid());
    ++count;
  });
  EXPECT_EQ(count, 14);
  EXPECT_FALSE((DyckPath{{-1, 1}}).is_valid());
  EXPECT_FALSE((DyckPath{{1, 1}}).is_valid());
}

TEST(Dyck, SmallMoments) {
  EXPECT_EQ(moment_dyck(0), Poly(1));
  EXPECT_EQ(moment_dyck(2), c);
  EXPECT_EQ(moment_dyck(4), 2 * c * c + c);
  EXPECT_EQ(moment_dyck(6), 5 * c.pow(3) + 7 * c.pow(2) + 3 * c);
  EXPECT_TRUE(moment_dyck(5).is_zero());
  EXPECT_EQ(moment_dyck(4, 1), 2 * c * c + 5 * c + 3);
}

TEST(Dyck, TransferAgreesWithBitStrings) {
  for (int shift = 0; shift <= 2; ++shift)
    for (int n = 0; n <= 14; ++n) {
      EXPECT_EQ(moment_dyck(n, shift), dyck_by_bits(n, shift)) << n << " " << shift;
      Poly listed;
      for_each_dyck_path(n, [&](const DyckPath& p) { listed += dyck_path_weight(p, shift); });
      EXPECT_EQ(listed, dyck_by_bits(n, shift));
    }
}

TEST(Dyck, AtOneCountsMatchings) {
  long long df = 1;
  for (int n = 2; n <= 16; n += 2) {
    df *= n - 1;
    EXPECT_EQ(moment_dyck(n).eval(0, 1), Rational(df)) << n;
  }
}

TEST(Moments, EverySchemeMatchesDyck) {
  for (auto s : {WeightScheme::MomentNonnested, WeightScheme::MomentNoRightCrossing, WeightScheme::MomentNoLeftCrossing})
    for (int n = 0; n <= 10; ++n) EXPECT_EQ(moment_matchings(n, s), dyck_by_bits(n, 0)) << n;
  EXPECT_THROW(moment_matchings(4, WeightScheme::PolyRightmost), std::domain_error);
}

TEST(Functional, ReplacesPowersByMoments) {
  EXPECT_EQ(linear_functional(Poly(1)), Poly(1));
  EXPECT_EQ(linear_functional(x * x), c);
  EXPECT_EQ(linear_functional(x.pow(3)), Poly());
  EXPECT_EQ(linear_functional(x.pow(4) - c * x * x), c * c + c);
  EXPECT_EQ(linear_functional(hermite_assoc(2).pow(2)), c * (c + 1));
}

TEST(Functional, Orthogonality) {
  for (int n = 0; n <= 7; ++n)
    for (int m = 0; m <= 7; ++m) {
      Poly ip = inner_product(n, m);
      if (n == m)
        EXPECT_EQ(ip, rising_by_hand(c, n)) << n;
      else
        EXPECT_TRUE(ip.is_zero()) << n << " " << m;
    }
}

TEST(Paired, SingleInhomogeneousEdge) {
  auto all = enumerate_paired(1, 1);
  ASSERT_EQ(all.size(), 1u);
  EXPECT_EQ(all[0].color({1, 2}), EdgeColor::Green);
  EXPECT_EQ(paired_weight(all[0]), c);
  EXPECT_TRUE(enumerate_paired(2, 1).empty());
}

TEST(Paired, CountsIncludeColorChoices) {
  // [2] ⊔ [2]: (1,2)(3,4) with 4 colorings, (1,3)(2,4), (1,4)(2,3)
  EXPECT_EQ(enumerate_paired(2, 2).size(), 6u);
  EXPECT_EQ(paired_sum(2, 2), c * c + c);
}

TEST(Paired, SumsAreInnerProducts) {
  for (int n = 0; n <= 6; ++n)
    for (int m = 0; m + n <= 8; ++m) EXPECT_EQ(paired_sum(n, m), inner_product(n, m)) << n << " " << m;
}

TEST(Paired, ColorValidation) {
  std::vector<EdgeColor> colors(5, EdgeColor::Green);
  colors[1] = EdgeColor::Black;
  EXPECT_THROW(PairedMatching(2, 2, Matching(4, {{1, 3}, {2, 4}}), colors), std::domain_error);
  PairedMatching ok(2, 2, Matching(4, {{1, 2}, {3, 4}}), colors);
  EXPECT_EQ(ok.color({1, 2}), EdgeColor::Black);
  EXPECT_EQ(paired_weight(ok), -c * c);
  PairedMatching cross(2, 2, Matching(4, {{1, 3}, {2, 4}}), std::vector<EdgeColor>(5, EdgeColor::Green));
  EXPECT_THROW(cross.with_flipped({1, 3}), std::domain_error);
  EXPECT_THROW(PairedMatching(2, 2, Matching(4, {{1, 2}}), colors), std::domain_error);
}

TEST(Involution, SignReversingWithPermutationFixedPoints) {
  for (int total = 0; total <= 8; total += 2)
    for (int n = (total + 1) / 2; n <= total; ++n) {
      const int m = total - n;
      Poly fixed_sum;
      for (const auto& pm : enumerate_paired(n, m)) {
        auto image = orthogonality_involution(pm);
        if (!image) {
          ASSERT_FALSE(pm.has_homogeneous_edge());
          ASSERT_EQ(n, m);
          Permutation p = fixed_points_to_permutation(pm);
          int maxima = 0, best = 0;
          for (int v : p.one_line)
            if (v > best) best = v, ++maxima;
          ASSERT_EQ(paired_weight(pm), Poly::c(maxima));
          fixed_sum += paired_weight(pm);
          continue;
        }
        ASSERT_EQ(paired_weight(*image), -paired_weight(pm));
        auto back = orthogonality_involution(*image);
        ASSERT_TRUE(back);
        ASSERT_EQ(*back, pm);
      }
      EXPECT_EQ(fixed_sum, n == m ? rising_by_hand(c, n) : Poly()) << n << " " << m;
    }
}

TEST(Involution, NeedsLargerLeftBlock) {
  auto all = enumerate_paired(1, 3);
  ASSERT_FALSE(all.empty());
  EXPECT_THROW(orthogonality_involution(all[0]), std::domain_error);
}

TEST(Involution, FlipsLeftmostUnnestingHomogeneousEdge) {
  PairedMatching pm(5, 3, parse_matching("(1,6)(2,4)(3,7)(5,8)"), std::vector<EdgeColor>(9, EdgeColor::Green));
  auto image = orthogonality_involution(pm);
  ASSERT_TRUE(image);
  EXPECT_EQ(image->color({2, 4}), EdgeColor::Black);
  EXPECT_EQ(image->color({5, 8}), EdgeColor::Green);
}

TEST(Involution, PermutationOfFixedPoint) {
  Matching m = permutation_to_spanning_matching(Permutation{{3, 1, 4, 2}}, SpanningConvention::NoRightCrossing);
  EXPECT_EQ(format_matching(m), "(1,7)(2,5)(3,8)(4,6)");
  PairedMatching pm(4, 4, m, std::vector<EdgeColor>(9, EdgeColor::Green));
  EXPECT_FALSE(orthogonality_involution(pm));
  EXPECT_EQ(fixed_points_to_permutation(pm), (Permutation{{3, 1, 4, 2}}));
  // 3 and 4 are the left-to-right maxima; the edges at 3 and 4 have no right crossing
  EXPECT_EQ(paired_weight(pm), c * c);
  EXPECT_TRUE(paired_edge_is_special(pm, {3, 8}));
  EXPECT_TRUE(paired_edge_is_special(pm, {4, 6}));
  EXPECT_FALSE(paired_edge_is_special(pm, {1, 7}));
  EXPECT_FALSE(paired_edge_is_special(pm, {2, 5}));
}

TEST(ContinuedFraction, TruncationsGiveMoments) {
  for (int shift = 0; shift <= 1; ++shift)
    for (int n = 0; n <= 6; ++n) {
      auto series = moment_gf_truncation(n + 1, 2 * n, shift);
      EXPECT_EQ(series[2 * n], dyck_by_bits(2 * n, shift)) << n;
      EXPECT_EQ(moment_gf_truncation(std::max(n, 1), 2 * n, shift)[2 * n], dyck_by_bits(2 * n, shift)) << n;
      if (n >= 2) {
        // depth n-1 loses exactly the path that reaches height n
        Poly lost = dyck_by_bits(2 * n, shift) - moment_gf_truncation(n - 1, 2 * n, shift)[2 * n];
        EXPECT_EQ(lost, rising_by_hand(c + Poly(shift), n)) << n;
      }
      for (int k = 1; k <= 2 * n; k += 2) EXPECT_TRUE(series[k].is_zero());
    }
  EXPECT_THROW(moment_gf_truncation(0, 4), std::domain_error);
  EXPECT_THROW(moment_gf_truncation(2, -1), std::domain_error);
}
