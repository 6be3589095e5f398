#pragma once

// Partial matchings on [n], their edge statistics, exhaustive enumerators,
// and the weightings used by the polynomial and moment models.

#include <algorithm>
#include <cctype>
#include <compare>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "assoc_hermite/algebra.hpp"

namespace hermite {

/// Largest vertex count the enumerators accept unless told otherwise.
/// 16 vertices already means 2 027 025 complete matchings.
inline constexpr int kDefaultVertexCap = 16;

/// An edge (left, right) with 1 <= left < right.
struct Edge {
  int left = 0;
  int right = 0;
  auto operator<=>(const Edge&) const = default;
};

/// outer nests inner: outer.left < inner.left < inner.right < outer.right.
inline bool nests(const Edge& outer, const Edge& inner) {
  return outer.left < inner.left && inner.right < outer.right;
}

/// `from` gives `to` a left crossing: from.left < to.left < from.right < to.right.
/// Equivalently `to` gives `from` a right crossing.
inline bool left_crosses(const Edge& from, const Edge& to) {
  return from.left < to.left && to.left < from.right && from.right < to.right;
}

inline bool crosses(const Edge& a, const Edge& b) { return left_crosses(a, b) || left_crosses(b, a); }

class Matching {
 public:
  Matching() = default;
  explicit Matching(int n) : mate_(static_cast<std::size_t>(n) + 1, 0) {
    if (n < 0) throw std::domain_error("Matching: negative vertex count");
  }
  Matching(int n, std::span<const Edge> edges) : Matching(n) {
    for (const Edge& e : edges) add_edge(e);
  }
  Matching(int n, std::initializer_list<Edge> edges)
      : Matching(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  int size() const { return mate_.empty() ? 0 : static_cast<int>(mate_.size()) - 1; }

  /// Partner of v, or 0 when v is a fixed point.
  int mate(int v) const { return mate_.at(static_cast<std::size_t>(v)); }
  bool is_fixed(int v) const { return mate(v) == 0; }

  bool is_complete() const {
    for (int v = 1; v <= size(); ++v)
      if (is_fixed(v)) return false;
    return true;
  }

  int edge_count() const {
    int k = 0;
    for (int v = 1; v <= size(); ++v)
      if (mate_[v] > v) ++k;
    return k;
  }

  int fixed_point_count() const { return size() - 2 * edge_count(); }

  /// Edges sorted by left endpoint.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int v = 1; v <= size(); ++v)
      if (mate_[v] > v) out.push_back({v, mate_[v]});
    return out;
  }

  std::vector<int> fixed_points() const {
    std::vector<int> out;
    for (int v = 1; v <= size(); ++v)
      if (mate_[v] == 0) out.push_back(v);
    return out;
  }

  bool contains(const Edge& e) const {
    return e.left >= 1 && e.right <= size() && e.left < e.right && mate_[e.left] == e.right;
  }

  void add_edge(const Edge& e) {
    if (e.left < 1 || e.right > size() || e.left >= e.right)
      throw std::domain_error("Matching: edge (" + std::to_string(e.left) + "," +
                              std::to_string(e.right) + ") out of range");
    if (mate_[e.left] != 0 || mate_[e.right] != 0)
      throw std::domain_error("Matching: edges share an endpoint at (" + std::to_string(e.left) +
                              "," + std::to_string(e.right) + ")");
    mate_[e.left] = e.right;
    mate_[e.right] = e.left;
  }

  void remove_edge(const Edge& e) {
    if (!contains(e)) throw std::domain_error("Matching: removing an absent edge");
    mate_[e.left] = 0;
    mate_[e.right] = 0;
  }

  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching& a, const Matching& b) { return a.mate_ <=> b.mate_; }

 private:
  std::vector<int> mate_;  // 1-based; mate_[0] unused
};

/// Consecutive vertex blocks [n1] ⊔ [n2] ⊔ ... laid out left to right.
class BlockStructure {
 public:
  BlockStructure() = default;
  explicit BlockStructure(std::vector<int> sizes) : sizes_(std::move(sizes)) {
    for (int s : sizes_)
      if (s < 0) throw std::domain_error("BlockStructure: negative block size");
    for (std::size_t b = 0; b < sizes_.size(); ++b)
      for (int i = 0; i < sizes_[b]; ++i) block_of_.push_back(static_cast<int>(b));
  }

  const std::vector<int>& sizes() const { return sizes_; }
  int total() const { return static_cast<int>(block_of_.size()); }
  /// Block index of vertex v (1-based).
  int block_of(int v) const { return block_of_.at(static_cast<std::size_t>(v) - 1); }
  bool is_homogeneous(const Edge& e) const { return block_of(e.left) == block_of(e.right); }

  /// Blocks reordered so that position i holds original block order[i].
  BlockStructure arranged(std::span<const int> order) const {
    if (order.size() != sizes_.size()) throw std::domain_error("BlockStructure: bad arrangement");
    std::vector<int> seen(sizes_.size(), 0);
    std::vector<int> out;
    for (int b : order) {
      if (b < 0 || b >= static_cast<int>(sizes_.size()) || seen[b]++)
        throw std::domain_error("BlockStructure: arrangement is not a permutation");
      out.push_back(sizes_[b]);
    }
    return BlockStructure(std::move(out));
  }

 private:
  std::vector<int> sizes_;
  std::vector<int> block_of_;
};

struct EdgeStats {
  bool is_nested_by_other = false;
  bool has_left_crossing = false;
  bool has_right_crossing = false;
  /// A fixed point lies strictly inside, or an edge lies entirely inside.
  bool nests_edge_or_fixed_point = false;
};

inline EdgeStats edge_stats(const Matching& m, const Edge& e) {
  if (!m.contains(e)) throw std::domain_error("edge_stats: edge not in matching");
  EdgeStats s;
  for (int v = 1; v <= m.size(); ++v) {
    int w = m.mate(v);
    if (w == 0) {
      if (e.left < v && v < e.right) s.nests_edge_or_fixed_point = true;
      continue;
    }
    if (w < v) continue;
    Edge f{v, w};
    if (f == e) continue;
    if (nests(f, e)) s.is_nested_by_other = true;
    if (nests(e, f)) s.nests_edge_or_fixed_point = true;
    if (left_crosses(f, e)) s.has_left_crossing = true;
    if (left_crosses(e, f)) s.has_right_crossing = true;
  }
  return s;
}

/// Mirror image: vertex i becomes n+1-i.
inline Matching reverse(const Matching& m) {
  const int n = m.size();
  Matching out(n);
  for (const Edge& e : m.edges()) out.add_edge({n + 1 - e.right, n + 1 - e.left});
  return out;
}

/// A complete matching is connected when no proper prefix {1..2j} is a union
/// of whole edges.
inline bool is_connected(const Matching& m) {
  if (!m.is_complete()) throw std::domain_error("is_connected: matching is not complete");
  int reach = 0;
  for (int v = 1; v < m.size(); ++v) {
    reach = std::max(reach, m.mate(v));
    if (reach == v) return false;
  }
  return true;
}

/// No edge has both endpoints in the same block.
inline bool is_inhomogeneous(const Matching& m, const BlockStructure& blocks) {
  for (const Edge& e : m.edges())
    if (blocks.is_homogeneous(e)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace detail {

inline void check_cap(int n, int cap, const char* who) {
  if (n < 0) throw std::domain_error(std::string(who) + ": negative vertex count");
  if (n > cap)
    throw std::domain_error(std::string(who) + ": " + std::to_string(n) +
                            " vertices exceeds the enumeration cap " + std::to_string(cap));
}

template <class Fn>
void complete_rec(Matching& m, int v, const BlockStructure* blocks, Fn& fn) {
  const int n = m.size();
  while (v <= n && !m.is_fixed(v)) ++v;
  if (v > n) {
    fn(static_cast<const Matching&>(m));
    return;
  }
  for (int w = v + 1; w <= n; ++w) {
    if (!m.is_fixed(w)) continue;
    if (blocks && blocks->block_of(v) == blocks->block_of(w)) continue;
    m.add_edge({v, w});
    complete_rec(m, v + 1, blocks, fn);
    m.remove_edge({v, w});
  }
}

template <class Fn>
void incomplete_rec(Matching& m, std::vector<char>& decided, int v, Fn& fn) {
  const int n = m.size();
  while (v <= n && decided[v]) ++v;
  if (v > n) {
    fn(static_cast<const Matching&>(m));
    return;
  }
  decided[v] = 1;
  incomplete_rec(m, decided, v + 1, fn);  // v stays fixed
  for (int w = v + 1; w <= n; ++w) {
    if (decided[w]) continue;
    decided[w] = 1;
    m.add_edge({v, w});
    incomplete_rec(m, decided, v + 1, fn);
    m.remove_edge({v, w});
    decided[w] = 0;
  }
  decided[v] = 0;
}

}  // namespace detail

/// Visits every complete matching of [n] exactly once. Order: the smallest
/// unmatched vertex is paired with each larger free vertex in increasing order.
template <class Fn>
void for_each_complete_matching(int n, Fn&& fn, int cap = kDefaultVertexCap) {
  detail::check_cap(n, cap, "enumerate_complete");
  if (n % 2 != 0) throw std::domain_error("enumerate_complete: odd vertex count");
  Matching m(n);
  detail::complete_rec(m, 1, nullptr, fn);
}

/// Visits every (possibly incomplete) matching of [n]; at each step the
/// smallest undecided vertex is first left fixed, then paired left to right.
template <class Fn>
void for_each_incomplete_matching(int n, Fn&& fn, int cap = kDefaultVertexCap) {
  detail::check_cap(n, cap, "enumerate_incomplete");
  Matching m(n);
  std::vector<char> decided(static_cast<std::size_t>(n) + 1, 0);
  detail::incomplete_rec(m, decided, 1, fn);
}

/// Complete matchings with no edge inside a single block.
template <class Fn>
void for_each_inhomogeneous_matching(const BlockStructure& blocks, Fn&& fn,
                                     int cap = kDefaultVertexCap) {
  detail::check_cap(blocks.total(), cap, "enumerate_inhomogeneous");
  if (blocks.total() % 2 != 0) throw std::domain_error("enumerate_inhomogeneous: odd total size");
  Matching m(blocks.total());
  detail::complete_rec(m, 1, &blocks, fn);
}

inline std::vector<Matching> enumerate_complete(int n, int cap = kDefaultVertexCap) {
  std::vector<Matching> out;
  for_each_complete_matching(n, [&](const Matching& m) { out.push_back(m); }, cap);
  return out;
}

inline std::vector<Matching> enumerate_incomplete(int n, int cap = kDefaultVertexCap) {
  std::vector<Matching> out;
  for_each_incomplete_matching(n, [&](const Matching& m) { out.push_back(m); }, cap);
  return out;
}

inline std::vector<Matching> enumerate_inhomogeneous(const BlockStructure& blocks,
                                                     int cap = kDefaultVertexCap) {
  std::vector<Matching> out;
  for_each_inhomogeneous_matching(blocks, [&](const Matching& m) { out.push_back(m); }, cap);
  return out;
}

// ---------------------------------------------------------------------------
// Weightings

enum class WeightScheme {
  /// Complete matchings: edges nested by no other edge get c.
  MomentNonnested,
  /// Complete matchings: edges with no right crossing get c.
  MomentNoRightCrossing,
  /// Mirror of MomentNoRightCrossing: edges with no left crossing get c.
  MomentNoLeftCrossing,
  /// Fixed points x; edges that nest nothing and have no left crossing get
  /// -c (the rightmost available partner); other edges -1.
  PolyRightmost,
  /// Built right to left with the leftmost available partner special: edge
  /// (a,b) gets -c when every vertex left of a is matched beyond b.
  PolyLeftmost,
  /// PolyRightmost applied to the mirror image (built left to right).
  PolyRightmostReversed,
  /// PolyLeftmost applied to the mirror image.
  PolyLeftmostReversed,
};

inline bool is_moment_scheme(WeightScheme s) {
  return s == WeightScheme::MomentNonnested || s == WeightScheme::MomentNoRightCrossing ||
         s == WeightScheme::MomentNoLeftCrossing;
}

inline std::string_view scheme_name(WeightScheme s) {
  switch (s) {
    case WeightScheme::MomentNonnested: return "nonnested";
    case WeightScheme::MomentNoRightCrossing: return "no-right-crossing";
    case WeightScheme::MomentNoLeftCrossing: return "no-left-crossing";
    case WeightScheme::PolyRightmost: return "rightmost";
    case WeightScheme::PolyLeftmost: return "leftmost";
    case WeightScheme::PolyRightmostReversed: return "rightmost-reversed";
    case WeightScheme::PolyLeftmostReversed: return "leftmost-reversed";
  }
  return "?";
}

inline WeightScheme parse_scheme(std::string_view name) {
  for (auto s : {WeightScheme::MomentNonnested, WeightScheme::MomentNoRightCrossing,
                 WeightScheme::MomentNoLeftCrossing, WeightScheme::PolyRightmost,
                 WeightScheme::PolyLeftmost, WeightScheme::PolyRightmostReversed,
                 WeightScheme::PolyLeftmostReversed})
    if (scheme_name(s) == name) return s;
  throw std::invalid_argument("unknown weight scheme '" + std::string(name) + "'");
}

/// A weight of the form sign * x^xd * c^cd. Every scheme produces one.
struct SignedMonomial {
  int sign = 1;
  int xd = 0;
  int cd = 0;
  Poly to_poly() const { return Poly::monomial(Rational(sign), xd, cd); }
};

namespace detail {

inline bool leftmost_choice(const Matching& m, const Edge& e) {
  for (int v = 1; v < e.left; ++v)
    if (m.mate(v) < e.right) return false;  // fixed (0) or closes before e.right
  return true;
}

}  // namespace detail

inline SignedMonomial weight_monomial(const Matching& m, WeightScheme scheme) {
  switch (scheme) {
    case WeightScheme::PolyRightmostReversed:
      return weight_monomial(reverse(m), WeightScheme::PolyRightmost);
    case WeightScheme::PolyLeftmostReversed:
      return weight_monomial(reverse(m), WeightScheme::PolyLeftmost);
    default: break;
  }
  if (is_moment_scheme(scheme) && !m.is_complete())
    throw std::domain_error("weight: moment scheme needs a complete matching");

  SignedMonomial w;
  w.xd = m.fixed_point_count();
  for (const Edge& e : m.edges()) {
    bool special = false;
    if (scheme == WeightScheme::PolyLeftmost) {
      special = detail::leftmost_choice(m, e);
    } else {
      EdgeStats s = edge_stats(m, e);
      switch (scheme) {
        case WeightScheme::MomentNonnested: special = !s.is_nested_by_other; break;
        case WeightScheme::MomentNoRightCrossing: special = !s.has_right_crossing; break;
        case WeightScheme::MomentNoLeftCrossing: special = !s.has_left_crossing; break;
        case WeightScheme::PolyRightmost:
          special = !s.nests_edge_or_fixed_point && !s.has_left_crossing;
          break;
        default: break;
      }
    }
    if (special) ++w.cd;
    if (!is_moment_scheme(scheme)) w.sign = -w.sign;
  }
  return w;
}

inline Poly weight(const Matching& m, WeightScheme scheme) {
  return weight_monomial(m, scheme).to_poly();
}

// ---------------------------------------------------------------------------
// Text form "(1,5)(2,11)(3,9)"

inline std::string format_matching(const Matching& m) {
  std::string s;
  for (const Edge& e : m.edges())
    s += "(" + std::to_string(e.left) + "," + std::to_string(e.right) + ")";
  return s;
}

/// Parses the parenthesized-pairs form. Pairs may come in any order and with
/// either endpoint first. When n is omitted the largest endpoint is used.
inline Matching parse_matching(std::string_view text, int n = -1) {
  std::vector<Edge> edges;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto read_int = [&]() -> int {
    skip_ws();
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i) throw std::invalid_argument("parse_matching: expected a vertex number");
    return std::stoi(std::string(text.substr(start, i - start)));
  };
  auto expect = [&](char ch) {
    skip_ws();
    if (i >= text.size() || text[i] != ch)
      throw std::invalid_argument(std::string("parse_matching: expected '") + ch + "'");
    ++i;
  };
  int max_v = 0;
  skip_ws();
  while (i < text.size()) {
    expect('(');
    int a = read_int();
    expect(',');
    int b = read_int();
    expect(')');
    if (a == b) throw std::invalid_argument("parse_matching: loop edge");
    if (a > b) std::swap(a, b);
    edges.push_back({a, b});
    max_v = std::max(max_v, b);
    skip_ws();
  }
  if (n < 0) n = max_v;
  if (max_v > n) throw std::invalid_argument("parse_matching: endpoint exceeds vertex count");
  try {
    return Matching(n, edges);
  } catch (const std::domain_error& e) {
    throw std::invalid_argument(e.what());
  }
}

}  // namespace hermite
