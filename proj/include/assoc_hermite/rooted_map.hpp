#pragma once

// Rooted maps on orientable surfaces as rotation systems, and their bijection
// with connected matchings through double occurrence words.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <vector>

#include "assoc_hermite/algebra.hpp"
#include "assoc_hermite/matching.hpp"

namespace hermite {

/// Half-edges 0..2E-1. `rotation` sends a half-edge to the next one
/// counterclockwise around its vertex; `pairing` sends it to the other end of
/// its edge. The map with no edges is the single-vertex map, with root -1.
class RootedMap {
 public:
  RootedMap() = default;
  RootedMap(std::vector<int> rotation, std::vector<int> pairing, int root)
      : rotation_(std::move(rotation)), pairing_(std::move(pairing)), root_(root) {
    const int h = half_edge_count();
    if (static_cast<int>(pairing_.size()) != h || h % 2 != 0)
      throw std::domain_error("RootedMap: rotation and pairing sizes differ");
    if (h == 0) {
      if (root_ != -1) throw std::domain_error("RootedMap: the vertex map has no root half-edge");
      return;
    }
    if (root_ < 0 || root_ >= h) throw std::domain_error("RootedMap: root out of range");
    std::vector<char> hit(static_cast<std::size_t>(h), 0);
    for (int v : rotation_) {
      if (v < 0 || v >= h || hit[v]++) throw std::domain_error("RootedMap: rotation is not a permutation");
    }
    for (int i = 0; i < h; ++i) {
      int j = pairing_[i];
      if (j < 0 || j >= h || j == i || pairing_[j] != i)
        throw std::domain_error("RootedMap: pairing must be a fixed-point-free involution");
    }
    if (!is_transitive()) throw std::domain_error("RootedMap: map is not connected");
  }

  int half_edge_count() const { return static_cast<int>(rotation_.size()); }
  int edge_count() const { return half_edge_count() / 2; }
  const std::vector<int>& rotation() const { return rotation_; }
  const std::vector<int>& pairing() const { return pairing_; }
  int root() const { return root_; }

  int vertex_count() const {
    if (half_edge_count() == 0) return 1;
    std::vector<char> seen(rotation_.size(), 0);
    int count = 0;
    for (int h = 0; h < half_edge_count(); ++h) {
      if (seen[h]) continue;
      ++count;
      for (int g = h; !seen[g]; g = rotation_[g]) seen[g] = 1;
    }
    return count;
  }

  /// Relabels half-edges in breadth-first order from the root, trying the
  /// rotation successor before the other end. Isomorphic rooted maps have
  /// identical canonical forms.
  RootedMap canonical() const {
    const int h = half_edge_count();
    if (h == 0) return *this;
    std::vector<int> label(static_cast<std::size_t>(h), -1), order;
    order.reserve(static_cast<std::size_t>(h));
    label[root_] = 0;
    order.push_back(root_);
    for (std::size_t i = 0; i < order.size(); ++i)
      for (int next : {rotation_[order[i]], pairing_[order[i]]})
        if (label[next] < 0) {
          label[next] = static_cast<int>(order.size());
          order.push_back(next);
        }
    std::vector<int> rot(static_cast<std::size_t>(h)), pair(static_cast<std::size_t>(h));
    for (int g = 0; g < h; ++g) {
      rot[label[g]] = label[rotation_[g]];
      pair[label[g]] = label[pairing_[g]];
    }
    RootedMap out;
    out.rotation_ = std::move(rot);
    out.pairing_ = std::move(pair);
    out.root_ = 0;
    return out;
  }

  friend bool operator==(const RootedMap&, const RootedMap&) = default;
  friend auto operator<=>(const RootedMap& a, const RootedMap& b) {
    if (auto c = a.rotation_ <=> b.rotation_; c != 0) return c;
    if (auto c = a.pairing_ <=> b.pairing_; c != 0) return c;
    return a.root_ <=> b.root_;
  }

 private:
  bool is_transitive() const {
    const int h = half_edge_count();
    std::vector<char> seen(static_cast<std::size_t>(h), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int g = stack.back();
      stack.pop_back();
      for (int next : {rotation_[g], pairing_[g]})
        if (!seen[next]) {
          seen[next] = 1;
          ++reached;
          stack.push_back(next);
        }
    }
    return reached == h;
  }

  std::vector<int> rotation_;
  std::vector<int> pairing_;
  int root_ = -1;
};

/// One canonical representative per rooted map with E edges, sorted.
/// Counts for E = 0..4 are 1, 2, 10, 74, 706.
inline std::vector<RootedMap> enumerate_rooted_maps(int edges, int max_edges = 4) {
  if (edges < 0) throw std::domain_error("enumerate_rooted_maps: negative edge count");
  if (edges > max_edges)
    throw std::domain_error("enumerate_rooted_maps: edge count exceeds cap " + std::to_string(max_edges));
  if (edges == 0) return {RootedMap()};
  const int h = 2 * edges;
  std::vector<int> pairing(static_cast<std::size_t>(h));
  for (int i = 0; i < h; ++i) pairing[i] = i ^ 1;
  std::vector<int> rotation(static_cast<std::size_t>(h));
  std::iota(rotation.begin(), rotation.end(), 0);
  std::set<RootedMap> found;
  do {
    // skip disconnected rotation systems cheaply before validating
    std::vector<char> seen(static_cast<std::size_t>(h), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
      int g = stack.back();
      stack.pop_back();
      for (int next : {rotation[g], pairing[g]})
        if (!seen[next]) {
          seen[next] = 1;
          ++reached;
          stack.push_back(next);
        }
    }
    if (reached != h) continue;
    for (int root = 0; root < h; ++root) found.insert(RootedMap(rotation, pairing, root).canonical());
  } while (std::next_permutation(rotation.begin(), rotation.end()));
  return {found.begin(), found.end()};
}

/// A word in which every letter appears exactly twice.
struct DoubleOccurrenceWord {
  std::vector<int> letters;

  bool is_valid() const {
    std::map<int, int> count;
    for (int l : letters) ++count[l];
    for (const auto& [l, k] : count)
      if (k != 2) return false;
    return true;
  }

  /// Positions of equal letters become edges.
  Matching to_matching() const {
    if (!is_valid()) throw std::domain_error("DoubleOccurrenceWord: a letter does not occur twice");
    Matching m(static_cast<int>(letters.size()));
    std::map<int, int> first;
    for (int i = 0; i < static_cast<int>(letters.size()); ++i) {
      auto [it, fresh] = first.emplace(letters[i], i + 1);
      if (!fresh) m.add_edge({it->second, i + 1});
    }
    return m;
  }

  /// Letters numbered by order of first appearance, starting at `first_letter`.
  static DoubleOccurrenceWord from_matching(const Matching& m, int first_letter = 1) {
    if (!m.is_complete()) throw std::domain_error("DoubleOccurrenceWord: matching is not complete");
    DoubleOccurrenceWord w;
    std::vector<int> letter(static_cast<std::size_t>(m.size()) + 1, 0);
    int next = first_letter;
    for (int v = 1; v <= m.size(); ++v) {
      int u = m.mate(v);
      if (u > v) letter[v] = next++;
      w.letters.push_back(u > v ? letter[v] : letter[u]);
    }
    return w;
  }
};

/// The word of the map with a new loop (letter 0) added at the root vertex,
/// just before the root half-edge. Each vertex is read counterclockwise
/// starting after the half-edge we arrived by; the next vertex visited is the
/// one behind the leftmost letter seen only once. Other letters are numbered
/// by first appearance.
inline DoubleOccurrenceWord map_to_word(const RootedMap& rm) {
  const int h = rm.half_edge_count();
  if (h == 0) return DoubleOccurrenceWord{{0, 0}};
  // extended map: half-edges h (loop start) and h+1 (loop end)
  std::vector<int> rot = rm.rotation();
  std::vector<int> pair = rm.pairing();
  rot.resize(static_cast<std::size_t>(h) + 2);
  pair.resize(static_cast<std::size_t>(h) + 2);
  const int loop_a = h, loop_b = h + 1;
  int before_root = static_cast<int>(std::find(rot.begin(), rot.begin() + h, rm.root()) - rot.begin());
  rot[before_root] = loop_b;
  rot[loop_b] = loop_a;
  rot[loop_a] = rm.root();
  pair[loop_a] = loop_b;
  pair[loop_b] = loop_a;

  std::vector<int> sequence;  // half-edges in reading order
  std::vector<char> listed(static_cast<std::size_t>(h) + 2, 0);
  auto visit = [&](int arrival) {
    int g = arrival;
    do {
      g = rot[g];
      sequence.push_back(g);
      listed[g] = 1;
    } while (g != arrival);
  };
  visit(loop_b);
  for (std::size_t pos = 0; pos < sequence.size(); ++pos) {
    int other = pair[sequence[pos]];
    if (!listed[other]) visit(other);
    // every position before pos now has its partner listed, so pos is the
    // leftmost unmatched letter whenever we visit
  }
  if (static_cast<int>(sequence.size()) != h + 2) throw std::logic_error("map_to_word: traversal incomplete");

  std::vector<int> letter_of(static_cast<std::size_t>(h) + 2, -1);
  letter_of[loop_a] = letter_of[loop_b] = 0;
  int next = 1;
  DoubleOccurrenceWord w;
  for (int g : sequence) {
    if (letter_of[g] < 0) letter_of[g] = letter_of[pair[g]] = next++;
    w.letters.push_back(letter_of[g]);
  }
  return w;
}

inline Matching map_to_connected_matching(const RootedMap& rm) { return map_to_word(rm).to_matching(); }

/// Nonnested edges other than the one at vertex 1 weigh c.
inline Poly connected_matching_weight(const Matching& m) {
  int k = 0;
  for (const Edge& e : m.edges())
    if (e.left != 1 && !edge_stats(m, e).is_nested_by_other) ++k;
  return Poly::c(k);
}

/// c^{#vertices - 1}.
inline Poly rooted_map_weight(const RootedMap& rm) { return Poly::c(rm.vertex_count() - 1); }

}  // namespace hermite
