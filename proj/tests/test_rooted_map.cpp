#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "assoc_hermite/moments.hpp"
#include "assoc_hermite/rooted_map.hpp"

using namespace hermite;

namespace {

const Poly c = Poly::c();

RootedMap worked_map() {
  return RootedMap({1, 2, 0, 4, 5, 6, 7, 8, 3, 9}, {8, 6, 9, 4, 3, 7, 1, 5, 0, 2}, 0);
}

// same map with half-edges renamed by sigma
RootedMap relabel(const RootedMap& rm, const std::vector<int>& sigma) {
  const int h = rm.half_edge_count();
  std::vector<int> rot(h), pair(h);
  for (int g = 0; g < h; ++g) {
    rot[sigma[g]] = sigma[rm.rotation()[g]];
    pair[sigma[g]] = sigma[rm.pairing()[g]];
  }
  return RootedMap(rot, pair, sigma[rm.root()]);
}

}  // namespace

TEST(RootedMap, Validation) {
  EXPECT_NO_THROW(RootedMap());
  EXPECT_EQ(RootedMap().vertex_count(), 1);
  EXPECT_THROW(RootedMap({}, {}, 0), std::domain_error);
  EXPECT_THROW(RootedMap({0, 1}, {1, 0}, 2), std::domain_error);
  EXPECT_THROW(RootedMap({0, 0}, {1, 0}, 0), std::domain_error);
  EXPECT_THROW(RootedMap({0, 1}, {0, 1}, 0), std::domain_error);
  // two separate loops
  EXPECT_THROW(RootedMap({1, 0, 3, 2}, {1, 0, 3, 2}, 0), std::domain_error);
}

TEST(RootedMap, SingleEdgeMaps) {
  RootedMap loop({1, 0}, {1, 0}, 0), bridge({0, 1}, {1, 0}, 0);
  EXPECT_EQ(loop.vertex_count(), 1);
  EXPECT_EQ(bridge.vertex_count(), 2);
  EXPECT_EQ(rooted_map_weight(loop), Poly(1));
  EXPECT_EQ(rooted_map_weight(bridge), c);
  // the loop nests the new one; the bridge is read as 0 1 0 1
  EXPECT_EQ(format_matching(map_to_connected_matching(loop)), "(1,4)(2,3)");
  EXPECT_EQ(format_matching(map_to_connected_matching(bridge)), "(1,3)(2,4)");
}

TEST(RootedMap, Counts) {
  const std::vector<std::size_t> counts = {1, 2, 10, 74, 706};
  for (int e = 0; e <= 4; ++e) EXPECT_EQ(enumerate_rooted_maps(e).size(), counts[e]) << e;
  EXPECT_THROW(enumerate_rooted_maps(5), std::domain_error);
  EXPECT_THROW(enumerate_rooted_maps(-1), std::domain_error);
}

TEST(RootedMap, VertexGeneratingFunction) {
  // shifted moments worked out by hand: 1, c+1, 2c^2+5c+3
  const std::vector<Poly> expected = {Poly(1), c + 1, 2 * c * c + 5 * c + 3};
  for (int e = 0; e <= 2; ++e) {
    Poly sum;
    for (const auto& rm : enumerate_rooted_maps(e)) sum += rooted_map_weight(rm);
    EXPECT_EQ(sum, expected[e]);
  }
  for (int e = 3; e <= 4; ++e) {
    Poly sum;
    for (const auto& rm : enumerate_rooted_maps(e)) sum += rooted_map_weight(rm);
    EXPECT_EQ(sum, moment_dyck(2 * e, 1));
  }
}

TEST(RootedMap, CanonicalFormIgnoresLabels) {
  std::mt19937 rng(2024);
  for (const auto& rm : enumerate_rooted_maps(3)) {
    EXPECT_EQ(rm.canonical(), rm);
    std::vector<int> sigma(rm.half_edge_count());
    std::iota(sigma.begin(), sigma.end(), 0);
    for (int trial = 0; trial < 3; ++trial) {
      std::shuffle(sigma.begin(), sigma.end(), rng);
      RootedMap moved = relabel(rm, sigma);
      ASSERT_EQ(moved.vertex_count(), rm.vertex_count());
      ASSERT_EQ(moved.canonical(), rm);
    }
  }
}

TEST(Word, WorkedExample) {
  RootedMap rm = worked_map();
  EXPECT_EQ(rm.vertex_count(), 3);
  DoubleOccurrenceWord w = map_to_word(rm);
  EXPECT_EQ(w.letters, (std::vector<int>{0, 1, 2, 3, 0, 4, 4, 5, 2, 5, 1, 3}));
  Matching m = map_to_connected_matching(rm);
  EXPECT_EQ(format_matching(m), "(1,5)(2,11)(3,9)(4,12)(6,7)(8,10)");
  EXPECT_TRUE(is_connected(m));
  // (1,5) is exempt; (2,11) and (4,12) are the nonnested ones
  EXPECT_EQ(connected_matching_weight(m), c * c);
  EXPECT_EQ(rooted_map_weight(rm), c * c);
  EXPECT_EQ(map_to_word(rm.canonical()).letters, w.letters);
}

TEST(Word, MatchingRoundTrip) {
  for (const auto& m : enumerate_complete(8)) {
    DoubleOccurrenceWord w = DoubleOccurrenceWord::from_matching(m);
    ASSERT_TRUE(w.is_valid());
    ASSERT_EQ(w.to_matching(), m);
  }
  EXPECT_EQ(DoubleOccurrenceWord::from_matching(parse_matching("(1,3)(2,4)"), 0).letters,
            (std::vector<int>{0, 1, 0, 1}));
  EXPECT_THROW((DoubleOccurrenceWord{{1, 2, 1}}).to_matching(), std::domain_error);
  EXPECT_THROW(DoubleOccurrenceWord::from_matching(Matching(3, {{1, 2}})), std::domain_error);
}

TEST(Word, EmptyMap) {
  EXPECT_EQ(map_to_word(RootedMap()).letters, (std::vector<int>{0, 0}));
  EXPECT_EQ(connected_matching_weight(map_to_connected_matching(RootedMap())), Poly(1));
}

TEST(Word, MapsOntoConnectedMatchings) {
  for (int e = 0; e <= 4; ++e) {
    std::set<Matching> images;
    for (const auto& rm : enumerate_rooted_maps(e)) {
      Matching m = map_to_connected_matching(rm);
      ASSERT_EQ(m.size(), 2 * e + 2);
      ASSERT_TRUE(is_connected(m));
      ASSERT_EQ(connected_matching_weight(m), rooted_map_weight(rm)) << format_matching(m);
      images.insert(m);
    }
    std::size_t connected = 0;
    for (const auto& m : enumerate_complete(2 * e + 2))
      if (is_connected(m)) ++connected;
    EXPECT_EQ(images.size(), connected) << e;
    EXPECT_EQ(images.size(), enumerate_rooted_maps(e).size());
  }
}
