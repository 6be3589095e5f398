#include <gtest/gtest.h>

#include "assoc_hermite/io.hpp"
#include "assoc_hermite/models.hpp"

using namespace hermite;

TEST(Json, PolyOrderAndRoundTrip) {
  Poly p = hermite_assoc(4);
  json j = poly_to_json(p);
  // x^4 - 3c x^2 - 3x^2 + c^2 + 2c
  ASSERT_EQ(j.size(), 5u);
  EXPECT_EQ(j[0]["xd"], 4);
  EXPECT_EQ(j[1]["xd"], 2);
  EXPECT_EQ(j[1]["cd"], 1);
  EXPECT_EQ(j[2]["cd"], 0);
  EXPECT_EQ(j[3]["cd"], 2);
  EXPECT_EQ(j[4]["num"], "2");
  EXPECT_EQ(j[1]["num"], "-3");
  EXPECT_EQ(poly_from_json(j), p);
  EXPECT_EQ(j.dump(), poly_to_json(poly_from_json(j)).dump());
}

TEST(Json, PolyFieldsAreStrings) {
  Poly half = Poly::monomial(Rational(-1, 2), 0, 3);
  json j = poly_to_json(half);
  EXPECT_EQ(j.dump(), R"([{"xd":0,"cd":3,"num":"-1","den":"2"}])");
  EXPECT_EQ(poly_from_json(json::parse(R"([{"xd":1,"cd":0,"num":"6","den":"4"}])")),
            Poly::monomial(Rational(3, 2), 1, 0));
  EXPECT_EQ(poly_to_json(Poly()).dump(), "[]");
}

TEST(Json, PolyErrors) {
  EXPECT_THROW(poly_from_json(json::object()), std::invalid_argument);
  EXPECT_THROW(poly_from_json(json::parse(R"([{"xd":0,"cd":0,"num":"1","den":"0"}])")), std::invalid_argument);
  EXPECT_THROW(poly_from_json(json::parse(R"([{"xd":0,"num":"1","den":"1"}])")), json::exception);
}

TEST(Json, Matchings) {
  Matching m = parse_matching("(1,4)(2,3)", 5);
  json j = matching_to_json(m);
  EXPECT_EQ(j.dump(), R"({"n":5,"edges":[[1,4],[2,3]]})");
  EXPECT_EQ(matching_from_json(j), m);
  EXPECT_EQ(matching_from_json(json::parse(R"({"n":4,"edges":[[3,1],[4,2]]})")), parse_matching("(1,3)(2,4)"));
  EXPECT_THROW(matching_from_json(json::parse(R"({"n":3,"edges":[[1,2],[2,3]]})")), std::domain_error);
}

TEST(Json, TaggedMatching) {
  TaggedMatching tm{parse_matching("(1,3)(2,4)(5,6)"), {{5, 6}, {2, 4}}};
  json j = tagged_matching_to_json(tm);
  EXPECT_EQ(j["text"], "(1,3)(2,4)(5,6)");
  TaggedMatching back = tagged_matching_from_json(j);
  EXPECT_EQ(back.matching, tm.matching);
  EXPECT_EQ(back.tagged, (std::vector<Edge>{{2, 4}, {5, 6}}));
}

TEST(Json, RootedMap) {
  RootedMap rm({1, 2, 0, 4, 5, 6, 7, 8, 3, 9}, {8, 6, 9, 4, 3, 7, 1, 5, 0, 2}, 0);
  json j = rooted_map_to_json(rm);
  EXPECT_EQ(j["root"], 0);
  EXPECT_EQ(rooted_map_from_json(j), rm);
  EXPECT_THROW(rooted_map_from_json(json::parse(R"({"rotation":[0],"pairing":[0],"root":0})")), std::domain_error);
}

TEST(Json, QuadrupleLine) {
  RootedMap rm({1, 2, 0, 4, 5, 6, 7, 8, 3, 9}, {8, 6, 9, 4, 3, 7, 1, 5, 0, 2}, 0);
  Quadruple q = make_quadruple(rm);
  EXPECT_EQ(format_matching(q.connected), "(1,5)(2,11)(3,9)(4,12)(6,7)(8,10)");
  EXPECT_EQ(q.weight, Poly::c(2));
  EXPECT_EQ(q.complete.weight(), q.weight);
  EXPECT_EQ(tableau_to_matching(q.tableau), q.complete.matching);
  json j = quadruple_to_json(q);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"map", "vertices", "connected_matching", "complete_matching", "tableau",
                                            "tableau_c_labels", "weight"}));
  EXPECT_EQ(j["vertices"], 3);
  EXPECT_EQ(j["tableau_c_labels"].size(), 2u);
  EXPECT_EQ(poly_from_json(j["weight"]), Poly::c(2));
  EXPECT_EQ(j.dump(), quadruple_to_json(make_quadruple(rm)).dump());
}
