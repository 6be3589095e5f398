#pragma once

// Associated Hermite polynomials H_n(x;c): the three-term recurrence and the
// combinatorial models that reproduce it.

#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "assoc_hermite/algebra.hpp"
#include "assoc_hermite/matching.hpp"

namespace hermite {

/// H_{n+1}(x;c) = x H_n(x;c) - (n-1+c) H_{n-1}(x;c), H_0 = 1, H_{-1} = 0.
inline std::vector<Poly> hermite_assoc_table(int n_max) {
  std::vector<Poly> h;
  if (n_max < 0) return h;
  h.push_back(Poly(1));
  if (n_max >= 1) h.push_back(Poly::x());
  for (int n = 1; n < n_max; ++n)
    h.push_back(Poly::x() * h[n] - (Poly(n - 1) + Poly::c()) * h[n - 1]);
  return h;
}

inline Poly hermite_assoc(int n) {
  if (n < 0) return Poly();
  return hermite_assoc_table(n).back();
}

/// H_n(x;c+1).
inline Poly hermite_assoc_shifted(int n) { return hermite_assoc(n).shift_c(1); }

/// Classical Hermite polynomials in the monic normalization
/// H_{n+1}(x) = x H_n(x) - n H_{n-1}(x).
inline std::vector<Poly> hermite_usual_table(int n_max) {
  std::vector<Poly> h;
  if (n_max < 0) return h;
  h.push_back(Poly(1));
  if (n_max >= 1) h.push_back(Poly::x());
  for (int n = 1; n < n_max; ++n) h.push_back(Poly::x() * h[n] - Poly(n) * h[n - 1]);
  return h;
}

inline Poly hermite_usual(int n) {
  if (n < 0) return Poly();
  return hermite_usual_table(n).back();
}

/// Sum of weights over all incomplete matchings of [n] under a polynomial scheme.
inline Poly hermite_assoc_from_matchings(int n, WeightScheme scheme = WeightScheme::PolyRightmost,
                                         int cap = kDefaultVertexCap) {
  if (is_moment_scheme(scheme))
    throw std::domain_error("hermite_assoc_from_matchings: moment scheme given");
  MonomialTally tally;
  for_each_incomplete_matching(
      n,
      [&](const Matching& m) {
        SignedMonomial w = weight_monomial(m, scheme);
        tally.add(w.sign, w.xd, w.cd);
      },
      cap);
  return tally.to_poly();
}

// ---------------------------------------------------------------------------
// Second model: matchings on n+2 vertices with a fake edge at vertex 1.

/// The edge through vertex 1, if vertex 1 is matched.
inline std::optional<Edge> fake_edge(const Matching& m) {
  if (m.size() < 1 || m.is_fixed(1)) return std::nullopt;
  return Edge{1, m.mate(1)};
}

/// Vertex 1 is matched, every fixed point sits under the fake edge, and
/// every other edge crosses or is nested by it.
inline bool is_fake_edge_matching(const Matching& m) {
  auto fake = fake_edge(m);
  if (!fake) return false;
  for (int v : m.fixed_points())
    if (v > fake->right) return false;
  for (const Edge& e : m.edges()) {
    if (e == *fake) continue;
    if (!nests(*fake, e) && !crosses(*fake, e)) return false;
  }
  return true;
}

/// Fake edge 1, fixed points x, nonnested non-fake edges -c, nested edges -1.
inline SignedMonomial fake_edge_weight(const Matching& m) {
  auto fake = fake_edge(m);
  if (!fake) throw std::domain_error("fake_edge_weight: vertex 1 is unmatched");
  SignedMonomial w;
  w.xd = m.fixed_point_count();
  for (const Edge& e : m.edges()) {
    if (e == *fake) continue;
    w.sign = -w.sign;
    if (!edge_stats(m, e).is_nested_by_other) ++w.cd;
  }
  return w;
}

/// Generating function of fake-edge matchings on n+2 vertices; equals H_n(x;c+1).
inline Poly hermite_fake_edge_model(int n, int cap = kDefaultVertexCap) {
  if (n < 0) throw std::domain_error("hermite_fake_edge_model: negative n");
  MonomialTally tally;
  for_each_incomplete_matching(
      n + 2,
      [&](const Matching& m) {
        if (!is_fake_edge_matching(m)) return;
        SignedMonomial w = fake_edge_weight(m);
        tally.add(w.sign, w.xd, w.cd);
      },
      cap);
  return tally.to_poly();
}

/// Right-hand side of H_n(x;c+1) = sum_k (-1)^k (c)_k C(n-k,k) H_{n-2k}(x).
inline Poly identity_rhs(int n) {
  if (n < 0) return Poly();
  auto usual = hermite_usual_table(n);
  Poly sum;
  for (int k = 0; 2 * k <= n; ++k) {
    Poly term = rising_factorial(Poly::c(), k) * Rational(binomial(n - k, k)) * usual[n - 2 * k];
    sum += (k % 2 == 0) ? term : -term;
  }
  return sum;
}

// ---------------------------------------------------------------------------
// Chebyshev polynomials of the second kind and the c -> infinity limit.

/// U_{n+1} = x U_n - U_{n-1}, U_0 = 1, U_1 = x.
inline Poly chebyshev_U(int n) {
  if (n < 0) return Poly();
  Poly prev(1), cur = Poly::x();
  if (n == 0) return prev;
  for (int k = 1; k < n; ++k) {
    Poly next = Poly::x() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// U_n as matchings whose edges join adjacent vertices, edges -1, fixed points x.
inline Poly chebyshev_U_from_matchings(int n, int cap = kDefaultVertexCap) {
  MonomialTally tally;
  for_each_incomplete_matching(
      n,
      [&](const Matching& m) {
        for (const Edge& e : m.edges())
          if (e.right != e.left + 1) return;
        tally.add(m.edge_count() % 2 == 0 ? 1 : -1, m.fixed_point_count(), 0);
      },
      cap);
  return tally.to_poly();
}

struct ChebyshevLimit {
  Poly limit;
  /// Largest c-exponent left after rescaling; the limit exists when it is <= 0.
  int max_c_exponent = 0;
};

/// Exact c -> infinity limit of c^{-n/2} H_n(x sqrt(c); c).
/// The monomial a x^k c^j becomes a x^k c^{j - (n-k)/2}; (n-k) is always even
/// since H_n has the parity of n. The limit keeps the c^0 part.
inline ChebyshevLimit chebyshev_limit(int n) {
  ChebyshevLimit out;
  out.max_c_exponent = std::numeric_limits<int>::min();
  const Poly h = hermite_assoc(n);
  for (const auto& [e, v] : h.terms()) {
    if ((n - e.xd) % 2 != 0) throw std::logic_error("chebyshev_limit: parity violated");
    int shifted = e.cd - (n - e.xd) / 2;
    out.max_c_exponent = std::max(out.max_c_exponent, shifted);
    if (shifted == 0) out.limit += Poly::monomial(v, e.xd, 0);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lemma configurations: complete matchings on 2k vertices under the c+1
// weighting, in which an edge that nests nothing and has no left crossing may
// carry -c or -1 and every other edge carries -1.

enum class EdgeTag { MinusOne, MinusC };

struct Claim1Config {
  Matching matching;
  /// Indexed by left endpoint; entries at right endpoints are unused.
  std::vector<EdgeTag> tag;

  EdgeTag tag_of(const Edge& e) const { return tag.at(static_cast<std::size_t>(e.left)); }
};

/// The edge may carry -c under the c+1 weighting.
inline bool is_rightmost_special(const Matching& m, const Edge& e) {
  EdgeStats s = edge_stats(m, e);
  return !s.nests_edge_or_fixed_point && !s.has_left_crossing;
}

/// Tags are admissible and every -1 edge is left-crossed by a -c edge.
inline bool is_claim1_config(const Claim1Config& cfg) {
  const Matching& m = cfg.matching;
  if (!m.is_complete()) return false;
  auto edges = m.edges();
  for (const Edge& e : edges) {
    if (cfg.tag_of(e) == EdgeTag::MinusC) {
      if (!is_rightmost_special(m, e)) return false;
      continue;
    }
    bool covered = false;
    for (const Edge& f : edges)
      if (cfg.tag_of(f) == EdgeTag::MinusC && left_crosses(f, e)) covered = true;
    if (!covered) return false;
  }
  return true;
}

inline Poly claim1_weight(const Claim1Config& cfg) {
  SignedMonomial w;
  for (const Edge& e : cfg.matching.edges()) {
    w.sign = -w.sign;
    if (cfg.tag_of(e) == EdgeTag::MinusC) ++w.cd;
  }
  return w.to_poly();
}

inline std::vector<Claim1Config> enumerate_claim1_configs(int k) {
  if (k < 0 || k > 6) throw std::domain_error("enumerate_claim1_configs: k out of range");
  std::vector<Claim1Config> out;
  for_each_complete_matching(2 * k, [&](const Matching& m) {
    auto edges = m.edges();
    for (unsigned mask = 0; mask < (1u << edges.size()); ++mask) {
      Claim1Config cfg{m, std::vector<EdgeTag>(static_cast<std::size_t>(2 * k) + 1, EdgeTag::MinusOne)};
      for (std::size_t i = 0; i < edges.size(); ++i)
        if (mask & (1u << i)) cfg.tag[edges[i].left] = EdgeTag::MinusC;
      if (is_claim1_config(cfg)) out.push_back(std::move(cfg));
    }
  });
  return out;
}

/// Generating function of the lemma configurations; equals (-1)^k (c)_k.
inline Poly claim1_gf(int k) {
  Poly sum;
  for (const auto& cfg : enumerate_claim1_configs(k)) sum += claim1_weight(cfg);
  return sum;
}

namespace detail {

/// Inserts a new vertex in gap g (g vertices to its left) and a new rightmost
/// vertex, joined by an edge carrying `tag`.
inline Claim1Config extend_config(const Claim1Config& cfg, int gap, EdgeTag tag) {
  const int n = cfg.matching.size();
  auto shift = [gap](int v) { return v > gap ? v + 1 : v; };
  Claim1Config out{Matching(n + 2), std::vector<EdgeTag>(static_cast<std::size_t>(n) + 3, EdgeTag::MinusOne)};
  for (const Edge& e : cfg.matching.edges()) {
    Edge moved{shift(e.left), shift(e.right)};
    out.matching.add_edge(moved);
    out.tag[moved.left] = cfg.tag_of(e);
  }
  Edge fresh{gap + 1, n + 2};
  out.matching.add_edge(fresh);
  out.tag[fresh.left] = tag;
  return out;
}

}  // namespace detail

/// (number of gaps where a new -1 edge from a new rightmost vertex keeps the
///  configuration valid, same count for a new -c edge). Expected (k, 1).
inline std::pair<int, int> claim1_slots(const Claim1Config& cfg) {
  const int n = cfg.matching.size();
  int minus_one = 0, minus_c = 0;
  for (int gap = 0; gap <= n; ++gap) {
    if (is_claim1_config(detail::extend_config(cfg, gap, EdgeTag::MinusOne))) ++minus_one;
    if (is_claim1_config(detail::extend_config(cfg, gap, EdgeTag::MinusC))) ++minus_c;
  }
  return {minus_one, minus_c};
}

/// Gaps not strictly inside any -c edge: the places a weight-1 green edge may
/// start without touching the configuration's weight. Expected k+1.
inline int claim2_slots(const Claim1Config& cfg) {
  const int n = cfg.matching.size();
  int count = 0;
  for (int gap = 0; gap <= n; ++gap) {
    bool inside = false;
    for (const Edge& e : cfg.matching.edges())
      if (cfg.tag_of(e) == EdgeTag::MinusC && e.left <= gap && gap < e.right) inside = true;
    if (!inside) ++count;
  }
  return count;
}

}  // namespace hermite
