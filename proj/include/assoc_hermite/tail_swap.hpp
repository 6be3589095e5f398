#pragma once

// Tail swapping: connected matchings on 2n+2 vertices (nonnested edges other
// than the fake edge at vertex 1 weigh c) to complete matchings on 2n
// vertices in which each nonnested edge independently weighs 1 or c.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "assoc_hermite/algebra.hpp"
#include "assoc_hermite/matching.hpp"

namespace hermite {

/// A complete matching with a chosen set of nonnested edges weighted c.
struct TaggedMatching {
  Matching matching;
  /// Sorted.
  std::vector<Edge> tagged;

  Poly weight() const { return Poly::c(static_cast<int>(tagged.size())); }
  friend bool operator==(const TaggedMatching&, const TaggedMatching&) = default;
  friend auto operator<=>(const TaggedMatching& a, const TaggedMatching& b) {
    if (auto c = a.matching <=> b.matching; c != 0) return c;
    return a.tagged <=> b.tagged;
  }
};

inline bool tags_are_valid(const TaggedMatching& tm) {
  if (!tm.matching.is_complete()) return false;
  for (const Edge& e : tm.tagged)
    if (!tm.matching.contains(e) || edge_stats(tm.matching, e).is_nested_by_other) return false;
  return std::is_sorted(tm.tagged.begin(), tm.tagged.end()) &&
         std::adjacent_find(tm.tagged.begin(), tm.tagged.end()) == tm.tagged.end();
}

namespace detail {

/// Renumbers an edge after vertex 1 is removed.
inline Edge drop_first_vertex(const Edge& e) { return {e.left - 1, e.right - 1}; }

}  // namespace detail

/// While the fake edge (1,f) is crossed, swap tails with the crossing edge of
/// leftmost endpoint (a,b): the edges become (1,b) and (a,f), and (a,f) is
/// tagged. Then remove the fake edge, which by then nests everything.
inline TaggedMatching tail_swap(const Matching& cm) {
  if (!cm.is_complete() || cm.size() < 2 || !is_connected(cm))
    throw std::domain_error("tail_swap: input must be a connected matching");
  const int n = cm.size();
  Matching m = cm;
  std::vector<char> weight_c(static_cast<std::size_t>(n) + 1, 0);  // by left endpoint
  for (const Edge& e : cm.edges())
    if (e.left != 1 && !edge_stats(cm, e).is_nested_by_other) weight_c[e.left] = 1;
  std::vector<Edge> swapped;
  while (true) {
    Edge fake{1, m.mate(1)};
    std::vector<Edge> crossing;
    for (const Edge& e : m.edges())
      if (left_crosses(fake, e)) crossing.push_back(e);
    if (crossing.empty()) break;
    Edge e = crossing.front();  // edges() is sorted by left endpoint
    // the fake edge's right end moves strictly right, so this terminates
    if (e.right <= fake.right) throw std::logic_error("tail_swap: fake edge did not grow");
    if (!weight_c[e.left]) throw std::logic_error("tail_swap: crossing edge does not weigh c");
    m.remove_edge(fake);
    m.remove_edge(e);
    m.add_edge({1, e.right});
    m.add_edge({e.left, fake.right});
    swapped.push_back({e.left, fake.right});
  }
  if (m.mate(1) != n) throw std::logic_error("tail_swap: fake edge does not span the matching");
  TaggedMatching out{Matching(n - 2), {}};
  for (const Edge& e : m.edges())
    if (e.left != 1) out.matching.add_edge(detail::drop_first_vertex(e));
  for (const Edge& e : swapped) out.tagged.push_back(detail::drop_first_vertex(e));
  std::sort(out.tagged.begin(), out.tagged.end());
  if (!tags_are_valid(out)) throw std::logic_error("tail_swap: a tagged edge ended up nested");
  return out;
}

/// Adds an edge nesting everything and swaps its tail with each tagged edge,
/// rightmost first.
inline Matching tail_swap_inverse(const TaggedMatching& tm) {
  if (!tm.matching.is_complete()) throw std::domain_error("tail_swap_inverse: matching is not complete");
  for (const Edge& e : tm.tagged) {
    if (!tm.matching.contains(e)) throw std::domain_error("tail_swap_inverse: tagged edge not in matching");
    if (edge_stats(tm.matching, e).is_nested_by_other)
      throw std::domain_error("tail_swap_inverse: tag on a nested edge");
  }
  const int n = tm.matching.size() + 2;
  Matching m(n);
  for (const Edge& e : tm.matching.edges()) m.add_edge({e.left + 1, e.right + 1});
  m.add_edge({1, n});
  std::vector<Edge> tags = tm.tagged;
  std::sort(tags.begin(), tags.end(), [](const Edge& a, const Edge& b) { return a.right > b.right; });
  for (const Edge& t : tags) {
    Edge e{t.left + 1, t.right + 1};
    Edge fake{1, m.mate(1)};
    m.remove_edge(fake);
    m.remove_edge(e);
    m.add_edge({1, e.right});
    m.add_edge({e.left, fake.right});
  }
  return m;
}

/// Every tagging of the nonnested edges of m.
inline std::vector<TaggedMatching> all_taggings(const Matching& m) {
  std::vector<Edge> free;
  for (const Edge& e : m.edges())
    if (!edge_stats(m, e).is_nested_by_other) free.push_back(e);
  std::vector<TaggedMatching> out;
  for (unsigned mask = 0; mask < (1u << free.size()); ++mask) {
    TaggedMatching tm{m, {}};
    for (std::size_t i = 0; i < free.size(); ++i)
      if (mask >> i & 1u) tm.tagged.push_back(free[i]);
    out.push_back(std::move(tm));
  }
  return out;
}

}  // namespace hermite
