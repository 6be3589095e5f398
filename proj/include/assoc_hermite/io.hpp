#pragma once

// JSON encodings shared by the command-line tool and interchange files.

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "assoc_hermite/algebra.hpp"
#include "assoc_hermite/matching.hpp"
#include "assoc_hermite/rooted_map.hpp"
#include "assoc_hermite/tableaux.hpp"
#include "assoc_hermite/tail_swap.hpp"

namespace hermite {

using json = nlohmann::ordered_json;

/// [{"xd","cd","num","den"}, ...] sorted by (xd, cd) descending.
inline json poly_to_json(const Poly& p) {
  json arr = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    arr.push_back({{"xd", it->first.xd},
                   {"cd", it->first.cd},
                   {"num", numerator(it->second).str()},
                   {"den", denominator(it->second).str()}});
  }
  return arr;
}

inline Poly poly_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("poly_from_json: expected an array");
  Poly p;
  for (const auto& t : j) {
    Integer num(t.at("num").get<std::string>());
    Integer den(t.at("den").get<std::string>());
    if (den == 0) throw std::invalid_argument("poly_from_json: zero denominator");
    p += Poly::monomial(Rational(num, den), t.at("xd").get<int>(), t.at("cd").get<int>());
  }
  return p;
}

/// {"n": int, "edges": [[i, j], ...]} with i < j, sorted by i.
inline json matching_to_json(const Matching& m) {
  json edges = json::array();
  for (const Edge& e : m.edges()) edges.push_back({e.left, e.right});
  return {{"n", m.size()}, {"edges", edges}};
}

inline Matching matching_from_json(const json& j) {
  Matching m(j.at("n").get<int>());
  for (const auto& e : j.at("edges")) {
    int a = e.at(0).get<int>(), b = e.at(1).get<int>();
    if (a > b) std::swap(a, b);
    m.add_edge({a, b});
  }
  return m;
}

inline json tagged_matching_to_json(const TaggedMatching& tm) {
  json j = matching_to_json(tm.matching);
  json tags = json::array();
  for (const Edge& e : tm.tagged) tags.push_back({e.left, e.right});
  j["tagged"] = tags;
  j["text"] = format_matching(tm.matching);
  return j;
}

inline TaggedMatching tagged_matching_from_json(const json& j) {
  TaggedMatching tm{matching_from_json(j), {}};
  for (const auto& e : j.at("tagged")) {
    int a = e.at(0).get<int>(), b = e.at(1).get<int>();
    tm.tagged.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(tm.tagged.begin(), tm.tagged.end());
  return tm;
}

/// {"rotation": [...], "pairing": [...], "root": id}
inline json rooted_map_to_json(const RootedMap& rm) {
  return {{"rotation", rm.rotation()}, {"pairing", rm.pairing()}, {"root", rm.root()}};
}

inline RootedMap rooted_map_from_json(const json& j) {
  return RootedMap(j.at("rotation").get<std::vector<int>>(), j.at("pairing").get<std::vector<int>>(),
                   j.at("root").get<int>());
}

/// A rooted map and its images: the connected matching, the tagged complete
/// matching, and the oscillating tableau, all carrying the same weight.
struct Quadruple {
  RootedMap map;
  Matching connected;
  TaggedMatching complete;
  OscillatingTableau tableau;
  Poly weight;
};

inline Quadruple make_quadruple(const RootedMap& rm) {
  Quadruple q{rm, map_to_connected_matching(rm), {}, {}, rooted_map_weight(rm)};
  q.complete = tail_swap(q.connected);
  q.tableau = matching_to_tableau(q.complete.matching);
  return q;
}

/// One line of the interchange file.
inline json quadruple_to_json(const Quadruple& q) {
  auto labels = tableau_edge_labels(q.complete.matching);
  json tagged_labels = json::array();
  for (const Edge& e : q.complete.tagged) tagged_labels.push_back(labels[e.left]);
  std::sort(tagged_labels.begin(), tagged_labels.end());
  return {{"map", rooted_map_to_json(q.map)},
          {"vertices", q.map.vertex_count()},
          {"connected_matching", format_matching(q.connected)},
          {"complete_matching", tagged_matching_to_json(q.complete)},
          {"tableau", format_tableau(q.tableau)},
          {"tableau_c_labels", tagged_labels},
          {"weight", poly_to_json(q.weight)}};
}

}  // namespace hermite
