#pragma once

// Moments of the functional L_c, the paired matchings behind the
// orthogonality proof, and the continued fraction of the moment series.

#include <optional>
#include <stdexcept>
#include <vector>

#include "assoc_hermite/algebra.hpp"
#include "assoc_hermite/matching.hpp"
#include "assoc_hermite/models.hpp"
#include "assoc_hermite/permutations.hpp"

namespace hermite {

// ---------------------------------------------------------------------------
// Dyck paths

/// Steps are +1 (up) and -1 (down).
struct DyckPath {
  std::vector<int> steps;

  bool is_valid() const {
    int h = 0;
    for (int s : steps) {
      if (s != 1 && s != -1) return false;
      h += s;
      if (h < 0) return false;
    }
    return h == 0;
  }
};

template <class Fn>
void for_each_dyck_path(int length, Fn&& fn) {
  if (length < 0 || length % 2 != 0) return;
  DyckPath p;
  p.steps.reserve(static_cast<std::size_t>(length));
  auto rec = [&](auto& self, int height) -> void {
    int remaining = length - static_cast<int>(p.steps.size());
    if (remaining == 0) {
      fn(static_cast<const DyckPath&>(p));
      return;
    }
    if (height < remaining) {
      p.steps.push_back(1);
      self(self, height + 1);
      p.steps.pop_back();
    }
    if (height > 0) {
      p.steps.push_back(-1);
      self(self, height - 1);
      p.steps.pop_back();
    }
  };
  rec(rec, 0);
}

/// Up steps weigh 1; a down step leaving height j weighs j-1+c+shift.
inline Poly dyck_path_weight(const DyckPath& p, int shift = 0) {
  Poly w(1);
  int h = 0;
  for (int s : p.steps) {
    if (s < 0) w *= Poly(h - 1 + shift) + Poly::c();
    h += s;
  }
  return w;
}

/// mu_0 .. mu_{n_max} of L_c (with c -> c+shift), by transfer over heights.
inline std::vector<Poly> moment_table(int n_max, int shift = 0) {
  std::vector<Poly> out;
  if (n_max < 0) return out;
  std::vector<Poly> state(static_cast<std::size_t>(n_max) + 2);
  state[0] = Poly(1);
  out.push_back(state[0]);
  for (int step = 1; step <= n_max; ++step) {
    std::vector<Poly> next(state.size());
    for (int h = 0; h <= step - 1 && h + 1 < static_cast<int>(state.size()); ++h) {
      if (state[h].is_zero()) continue;
      next[h + 1] += state[h];
      if (h > 0) next[h - 1] += state[h] * (Poly(h - 1 + shift) + Poly::c());
    }
    state = std::move(next);
    out.push_back(state[0]);
  }
  return out;
}

/// mu_n(c), the weighted sum over Dyck paths of length n; zero for odd n.
inline Poly moment_dyck(int n, int shift = 0) {
  if (n < 0) throw std::domain_error("moment_dyck: negative n");
  return moment_table(n, shift).back();
}

/// Sum of a moment weighting over complete matchings of [n]; zero for odd n.
inline Poly moment_matchings(int n, WeightScheme scheme, int cap = kDefaultVertexCap) {
  if (!is_moment_scheme(scheme)) throw std::domain_error("moment_matchings: polynomial scheme given");
  if (n < 0) throw std::domain_error("moment_matchings: negative n");
  if (n % 2 != 0) return Poly();
  MonomialTally tally;
  for_each_complete_matching(
      n,
      [&](const Matching& m) {
        SignedMonomial w = weight_monomial(m, scheme);
        tally.add(w.sign, w.xd, w.cd);
      },
      cap);
  return tally.to_poly();
}

/// L_c: replaces each x^k by mu_k(c).
inline Poly linear_functional(const Poly& p) {
  int d = p.degree_x();
  if (d < 0) return Poly();
  auto mu = moment_table(d);
  Poly out;
  for (const auto& [e, v] : p.terms()) out += Poly::monomial(v, 0, e.cd) * mu[e.xd];
  return out;
}

/// L_c(H_n H_m).
inline Poly inner_product(int n, int m) { return linear_functional(hermite_assoc(n) * hermite_assoc(m)); }

// ---------------------------------------------------------------------------
// Paired matchings

enum class EdgeColor { Black, Green };

/// A complete matching of [n] ⊔ [m] (left block first) with colored edges.
/// Black edges come from the two polynomial matchings and are homogeneous;
/// green edges form the moment matching on the remaining vertices.
class PairedMatching {
 public:
  PairedMatching(int left_size, int right_size, Matching m, std::vector<EdgeColor> color_by_left)
      : left_size_(left_size), right_size_(right_size), matching_(std::move(m)),
        color_(std::move(color_by_left)) {
    if (matching_.size() != left_size_ + right_size_ || !matching_.is_complete())
      throw std::domain_error("PairedMatching: matching must be complete on [n] ⊔ [m]");
    color_.resize(static_cast<std::size_t>(matching_.size()) + 1, EdgeColor::Green);
    for (const Edge& e : matching_.edges())
      if (color(e) == EdgeColor::Black && !is_homogeneous(e))
        throw std::domain_error("PairedMatching: black edge joins the two blocks");
  }

  int left_size() const { return left_size_; }
  int right_size() const { return right_size_; }
  const Matching& matching() const { return matching_; }
  std::vector<Edge> edges() const { return matching_.edges(); }

  EdgeColor color(const Edge& e) const { return color_.at(static_cast<std::size_t>(e.left)); }
  bool is_homogeneous(const Edge& e) const { return (e.left <= left_size_) == (e.right <= left_size_); }
  bool has_homogeneous_edge() const {
    for (const Edge& e : edges())
      if (is_homogeneous(e)) return true;
    return false;
  }

  PairedMatching with_flipped(const Edge& e) const {
    PairedMatching out = *this;
    auto& slot = out.color_.at(static_cast<std::size_t>(e.left));
    slot = slot == EdgeColor::Black ? EdgeColor::Green : EdgeColor::Black;
    if (slot == EdgeColor::Black && !is_homogeneous(e))
      throw std::domain_error("PairedMatching: cannot blacken an inhomogeneous edge");
    return out;
  }

  friend bool operator==(const PairedMatching&, const PairedMatching&) = default;

 private:
  int left_size_;
  int right_size_;
  Matching matching_;
  std::vector<EdgeColor> color_;  // by left endpoint
};

/// Black: -c when the edge nests no edge, has no green crossing and no left
/// black crossing, else -1. Green: c when no green edge crosses it from the
/// right, else 1.
inline bool paired_edge_is_special(const PairedMatching& pm, const Edge& e) {
  const auto edges = pm.edges();
  for (const Edge& f : edges) {
    if (f == e) continue;
    if (pm.color(e) == EdgeColor::Black) {
      if (nests(e, f)) return false;
      if (pm.color(f) == EdgeColor::Green && crosses(e, f)) return false;
      if (pm.color(f) == EdgeColor::Black && left_crosses(f, e)) return false;
    } else if (pm.color(f) == EdgeColor::Green && left_crosses(e, f)) {
      return false;
    }
  }
  return true;
}

inline SignedMonomial paired_weight_monomial(const PairedMatching& pm) {
  SignedMonomial w;
  for (const Edge& e : pm.edges()) {
    if (pm.color(e) == EdgeColor::Black) w.sign = -w.sign;
    if (paired_edge_is_special(pm, e)) ++w.cd;
  }
  return w;
}

inline Poly paired_weight(const PairedMatching& pm) { return paired_weight_monomial(pm).to_poly(); }

/// All paired matchings on [n] ⊔ [m]: every complete matching with each
/// homogeneous edge colored black or green.
template <class Fn>
void for_each_paired_matching(int n, int m, Fn&& fn, int cap = kDefaultVertexCap) {
  if (n < 0 || m < 0) throw std::domain_error("enumerate_paired: negative block size");
  if ((n + m) % 2 != 0) return;
  for_each_complete_matching(
      n + m,
      [&](const Matching& mm) {
        std::vector<Edge> homogeneous;
        for (const Edge& e : mm.edges())
          if ((e.left <= n) == (e.right <= n)) homogeneous.push_back(e);
        std::vector<EdgeColor> colors(static_cast<std::size_t>(n + m) + 1, EdgeColor::Green);
        for (unsigned mask = 0; mask < (1u << homogeneous.size()); ++mask) {
          for (std::size_t i = 0; i < homogeneous.size(); ++i)
            colors[homogeneous[i].left] = (mask >> i & 1u) ? EdgeColor::Black : EdgeColor::Green;
          fn(PairedMatching(n, m, mm, colors));
        }
      },
      cap);
}

inline std::vector<PairedMatching> enumerate_paired(int n, int m, int cap = kDefaultVertexCap) {
  std::vector<PairedMatching> out;
  for_each_paired_matching(n, m, [&](const PairedMatching& pm) { out.push_back(pm); }, cap);
  return out;
}

inline Poly paired_sum(int n, int m, int cap = kDefaultVertexCap) {
  MonomialTally tally;
  for_each_paired_matching(
      n, m,
      [&](const PairedMatching& pm) {
        SignedMonomial w = paired_weight_monomial(pm);
        tally.add(w.sign, w.xd, w.cd);
      },
      cap);
  return tally.to_poly();
}

/// Flips the color of the leftmost homogeneous edge that nests no other edge.
/// Returns nullopt on a fixed point (no homogeneous edge). The left block
/// must be at least as large as the right one.
inline std::optional<PairedMatching> orthogonality_involution(const PairedMatching& pm) {
  if (pm.left_size() < pm.right_size())
    throw std::domain_error("orthogonality_involution: left block must not be smaller");
  auto edges = pm.edges();
  for (const Edge& e : edges) {  // sorted by left endpoint
    if (!pm.is_homogeneous(e)) continue;
    bool nests_any = false;
    for (const Edge& f : edges)
      if (nests(e, f)) nests_any = true;
    if (!nests_any) return pm.with_flipped(e);
  }
  return std::nullopt;
}

/// A fixed point of the involution (n = m, every edge spans the blocks) as a
/// permutation whose left-to-right maxima are the edges weighted c.
inline Permutation fixed_points_to_permutation(const PairedMatching& pm) {
  if (pm.left_size() != pm.right_size())
    throw std::domain_error("fixed_points_to_permutation: blocks differ in size");
  if (pm.has_homogeneous_edge())
    throw std::domain_error("fixed_points_to_permutation: homogeneous edge present");
  return spanning_matching_to_permutation(pm.matching(), SpanningConvention::NoRightCrossing);
}

// ---------------------------------------------------------------------------
// Continued fraction 1/(1 - (c+s)t^2/(1 - (c+s+1)t^2/(1 - ...)))

namespace detail {

/// Truncated power series in t with polynomial coefficients.
using Series = std::vector<Poly>;

inline Series series_mul(const Series& a, const Series& b, int order) {
  Series out(static_cast<std::size_t>(order) + 1);
  for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j)
      if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
  }
  return out;
}

/// 1/(1 - u) for u with zero constant term.
inline Series series_geometric(const Series& u, int order) {
  Series out(static_cast<std::size_t>(order) + 1);
  out[0] = Poly(1);
  for (int k = 1; k <= order; ++k)
    for (int i = 1; i <= k && i < static_cast<int>(u.size()); ++i)
      if (!u[i].is_zero()) out[k] += u[i] * out[k - i];
  return out;
}

}  // namespace detail

/// Coefficients t^0..t^order of the depth-d truncation
/// T_{d+1} = 1, T_i = 1/(1 - (c+shift+i-1) t^2 T_{i+1}), result T_1.
/// The t^{2n} coefficient equals mu_{2n}(c+shift) once d >= n.
inline std::vector<Poly> moment_gf_truncation(int depth, int order, int shift = 1) {
  if (depth < 1) throw std::domain_error("moment_gf_truncation: depth must be positive");
  if (order < 0) throw std::domain_error("moment_gf_truncation: negative order");
  detail::Series tail(static_cast<std::size_t>(order) + 1);
  tail[0] = Poly(1);
  for (int level = depth; level >= 1; --level) {
    detail::Series u(static_cast<std::size_t>(order) + 1);
    Poly a = Poly::c() + Poly(shift + level - 1);
    for (int k = 0; k + 2 <= order; ++k) u[k + 2] = a * tail[k];
    tail = detail::series_geometric(u, order);
  }
  return tail;
}

}  // namespace hermite
