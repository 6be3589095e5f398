#pragma once

// Permutations, their left-to-right maxima and cycles, and the bijection with
// complete matchings of [n] ⊔ [n] whose edges all span the two halves.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "assoc_hermite/algebra.hpp"
#include "assoc_hermite/matching.hpp"

namespace hermite {

/// One-line notation; values are 1..n.
struct Permutation {
  std::vector<int> one_line;

  int size() const { return static_cast<int>(one_line.size()); }
  bool is_valid() const {
    std::vector<int> sorted = one_line;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < size(); ++i)
      if (sorted[i] != i + 1) return false;
    return true;
  }
  auto operator<=>(const Permutation&) const = default;
};

/// Number of entries larger than every entry before them.
inline int lrm(const Permutation& p) {
  int best = 0, count = 0;
  for (int v : p.one_line)
    if (v > best) {
      best = v;
      ++count;
    }
  return count;
}

inline int cyc(const Permutation& p) {
  std::vector<char> seen(p.one_line.size() + 1, 0);
  int cycles = 0;
  for (int start = 1; start <= p.size(); ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (int v = start; !seen[v]; v = p.one_line[v - 1]) seen[v] = 1;
  }
  return cycles;
}

template <class Fn>
void for_each_permutation(int n, Fn&& fn) {
  Permutation p{std::vector<int>(static_cast<std::size_t>(n))};
  std::iota(p.one_line.begin(), p.one_line.end(), 1);
  do {
    fn(static_cast<const Permutation&>(p));
  } while (std::next_permutation(p.one_line.begin(), p.one_line.end()));
}

/// Which edge statistic of a spanning matching should line up with the
/// left-to-right maxima of the permutation.
enum class SpanningConvention {
  /// Edges with no right crossing; left vertices keep their labels.
  NoRightCrossing,
  /// Nonnested edges; left vertex i is labelled n+1-i.
  Nonnested,
};

/// Every edge of a matching on 2n vertices joins {1..n} to {n+1..2n}.
inline bool is_spanning(const Matching& m) {
  const int n = m.size() / 2;
  if (m.size() % 2 != 0 || !m.is_complete()) return false;
  for (const Edge& e : m.edges())
    if (!(e.left <= n && e.right > n)) return false;
  return true;
}

/// The right half is the domain, read from the far right inwards; the left
/// half is the range.
inline Permutation spanning_matching_to_permutation(const Matching& m, SpanningConvention conv) {
  if (!is_spanning(m)) throw std::domain_error("spanning_matching_to_permutation: homogeneous edge present");
  const int n = m.size() / 2;
  Permutation p;
  for (int pos = 1; pos <= n; ++pos) {
    int left = m.mate(2 * n + 1 - pos);
    p.one_line.push_back(conv == SpanningConvention::NoRightCrossing ? left : n + 1 - left);
  }
  return p;
}

inline Matching permutation_to_spanning_matching(const Permutation& p, SpanningConvention conv) {
  if (!p.is_valid()) throw std::domain_error("permutation_to_spanning_matching: not a permutation");
  const int n = p.size();
  Matching m(2 * n);
  for (int pos = 1; pos <= n; ++pos) {
    int v = p.one_line[pos - 1];
    int left = conv == SpanningConvention::NoRightCrossing ? v : n + 1 - v;
    m.add_edge({left, 2 * n + 1 - pos});
  }
  return m;
}

inline Poly lrm_gf(int n) {
  MonomialTally t;
  for_each_permutation(n, [&](const Permutation& p) { t.add(1, 0, lrm(p)); });
  return t.to_poly();
}

inline Poly cycle_gf(int n) {
  MonomialTally t;
  for_each_permutation(n, [&](const Permutation& p) { t.add(1, 0, cyc(p)); });
  return t.to_poly();
}

/// Weight of a spanning matching: nonnested edges get c except the one at vertex 1.
inline SignedMonomial spanning_weight_nonnested_except_first(const Matching& m) {
  SignedMonomial w;
  for (const Edge& e : m.edges())
    if (e.left != 1 && !edge_stats(m, e).is_nested_by_other) ++w.cd;
  return w;
}

/// Sum over spanning matchings on [n] ⊔ [n]; equals (c+1)_{n-1}.
inline Poly permutation_matchings_gf(int n) {
  if (n < 1 || n > 8) throw std::domain_error("permutation_matchings_gf: n must be in 1..8");
  MonomialTally t;
  for_each_inhomogeneous_matching(BlockStructure({n, n}), [&](const Matching& m) {
    SignedMonomial w = spanning_weight_nonnested_except_first(m);
    t.add(w.sign, w.xd, w.cd);
  });
  return t.to_poly();
}

}  // namespace hermite
