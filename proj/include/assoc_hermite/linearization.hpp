#pragma once

// Linearization coefficients of products of associated Hermite polynomials,
// the mixed product with classical Hermites, and the inhomogeneous-matching
// generating functions compared against L_c of longer products.

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "assoc_hermite/algebra.hpp"
#include "assoc_hermite/matching.hpp"
#include "assoc_hermite/models.hpp"
#include "assoc_hermite/moments.hpp"

namespace hermite {

/// Coefficients a_d with p = sum_d a_d H_d(x;c); each a_d a polynomial in c.
/// H_d is monic of degree d, so peeling off leading terms is exact.
inline std::map<int, Poly> expand_in_assoc_basis(Poly p) {
  std::map<int, Poly> out;
  int d = p.degree_x();
  if (d < 0) return out;
  auto basis = hermite_assoc_table(d);
  for (; d >= 0; --d) {
    Poly lead = p.coefficient_of_x(d);
    if (lead.is_zero()) continue;
    out[d] = lead;
    p -= lead * basis[d];
  }
  if (!p.is_zero()) throw std::logic_error("expand_in_assoc_basis: remainder left over");
  return out;
}

/// sum_k C(N-j,k) C(M-j,k) (j-k+1)_k (N+M-2j+c)_{j-k}
inline Poly f_simplified(int N, int M, int j) {
  if (N < 0 || M < 0 || j < 0 || j > std::min(N, M))
    throw std::domain_error("f_simplified: need 0 <= j <= min(N, M)");
  Poly sum;
  const Poly base = Poly::c() + Poly(N + M - 2 * j);
  for (int k = 0; k <= std::min(N - j, j); ++k) {
    Integer scalar = binomial(N - j, k) * binomial(M - j, k) * rising(j - k + 1, k);
    if (scalar == 0) continue;
    sum += rising_factorial(base, j - k) * Rational(scalar);
  }
  return sum;
}

/// (N+M-2j+c)_j 3F2(j-N, j-M, -j; j-N-M-c+1, 1; 1) evaluated directly at c.
inline Rational f_hypergeometric_at(int N, int M, int j, const Rational& c_val) {
  if (N < 0 || M < 0 || j < 0 || j > std::min(N, M))
    throw std::domain_error("f_hypergeometric_at: need 0 <= j <= min(N, M)");
  auto rising_q = [](const Rational& a, int k) {
    Rational r = 1;
    for (int i = 0; i < k; ++i) r *= a + i;
    return r;
  };
  const Rational lower = Rational(j - N - M + 1) - c_val;
  const int top = std::min({N - j, M - j, j});  // the numerator terminates here
  Rational series = 0;
  Rational k_fact = 1;
  for (int k = 0; k <= top; ++k) {
    if (k > 0) k_fact *= k;
    Rational denom = rising_q(lower, k);
    if (denom == 0)
      throw std::domain_error("f_hypergeometric_at: denominator parameter vanishes at k = " + std::to_string(k));
    series += rising_q(Rational(j - N), k) * rising_q(Rational(j - M), k) * rising_q(Rational(-j), k) /
              (denom * k_fact * k_fact);
  }
  return rising_q(Rational(N + M - 2 * j) + c_val, j) * series;
}

struct LinearizationReport {
  int N = 0, M = 0;
  Poly lhs;
  Poly rhs;
  /// f(N, M, j) for j = 0..min(N, M).
  std::vector<Poly> coefficients;
  /// Coefficients recovered by expanding the product in the basis.
  std::map<int, Poly> expansion;
  bool holds = false;
};

inline LinearizationReport linearize(int N, int M) {
  if (N < 0 || M < 0) throw std::domain_error("linearize: negative index");
  LinearizationReport r;
  r.N = N;
  r.M = M;
  r.lhs = hermite_assoc(N) * hermite_assoc(M);
  auto basis = hermite_assoc_table(N + M);
  for (int j = 0; j <= std::min(N, M); ++j) {
    r.coefficients.push_back(f_simplified(N, M, j));
    r.rhs += r.coefficients.back() * basis[N + M - 2 * j];
  }
  r.expansion = expand_in_assoc_basis(r.lhs);
  r.holds = r.lhs == r.rhs;
  return r;
}

inline bool verify_linearization(int N, int M) { return linearize(N, M).holds; }

/// binom(n-1+c, k) C(m, k) k!
inline Poly mixed_coefficient(int n, int m, int k) {
  if (k < 0) return Poly();
  return binomial_poly(Poly::c() + Poly(n - 1), k) * Rational(binomial(m, k) * factorial(k));
}

struct MixedReport {
  int n = 0, m = 0;
  /// n >= m - 1, where the formula is claimed.
  bool in_range = false;
  Poly lhs;
  Poly rhs;
  /// lhs - rhs; zero exactly when the identity holds.
  Poly residual;
  /// H_n(x;c) H_m(x) expanded in the H_d(x;c) basis.
  std::map<int, Poly> expansion;
  bool holds = false;
  /// No basis coefficient outside k = 0..min(m, floor((n+m)/2)).
  bool range_tight = false;
};

/// H_n(x;c) H_m(x) against sum_{k=0}^{min(m, (n+m)/2)} binom(n-1+c,k) C(m,k) k! H_{n+m-2k}(x;c).
/// Outside n >= m-1 the residual is reported rather than treated as an error.
inline MixedReport verify_mixed(int n, int m) {
  if (n < 0 || m < 0) throw std::domain_error("verify_mixed: negative index");
  MixedReport r;
  r.n = n;
  r.m = m;
  r.in_range = n >= m - 1;
  r.lhs = hermite_assoc(n) * hermite_usual(m);
  auto basis = hermite_assoc_table(n + m);
  const int k_max = std::min(m, (n + m) / 2);
  for (int k = 0; k <= k_max; ++k) r.rhs += mixed_coefficient(n, m, k) * basis[n + m - 2 * k];
  r.residual = r.lhs - r.rhs;
  r.holds = r.residual.is_zero();
  r.expansion = expand_in_assoc_basis(r.lhs);
  r.range_tight = true;
  for (const auto& [d, coef] : r.expansion) {
    int twice_k = n + m - d;
    if (twice_k % 2 != 0 || twice_k / 2 > k_max) r.range_tight = false;
  }
  return r;
}

/// L_c(prod_i H_{n_i}(x;c)).
inline Poly product_functional(const std::vector<int>& ns) {
  int total = 0;
  for (int v : ns) {
    if (v < 0) throw std::domain_error("product_functional: negative index");
    total += v;
  }
  if (total % 2 != 0) return Poly();
  Poly prod(1);
  for (int v : ns) prod *= hermite_assoc(v);
  return linear_functional(prod);
}

/// Sum of a moment weighting over inhomogeneous matchings with the blocks
/// placed in the order given (a permutation of block indices).
inline Poly inhomogeneous_gf(const BlockStructure& blocks, WeightScheme scheme, const std::vector<int>& arrangement,
                             int cap = kDefaultVertexCap) {
  if (!is_moment_scheme(scheme)) throw std::domain_error("inhomogeneous_gf: polynomial scheme given");
  BlockStructure placed = blocks.arranged(arrangement);
  if (placed.total() % 2 != 0) return Poly();
  MonomialTally tally;
  for_each_inhomogeneous_matching(
      placed,
      [&](const Matching& m) {
        SignedMonomial w = weight_monomial(m, scheme);
        tally.add(w.sign, w.xd, w.cd);
      },
      cap);
  return tally.to_poly();
}

inline Poly inhomogeneous_gf(const BlockStructure& blocks, WeightScheme scheme, int cap = kDefaultVertexCap) {
  std::vector<int> identity(blocks.sizes().size());
  for (std::size_t i = 0; i < identity.size(); ++i) identity[i] = static_cast<int>(i);
  return inhomogeneous_gf(blocks, scheme, identity, cap);
}

struct ConjectureReport {
  std::vector<int> sizes;  // weakly increasing
  Poly lhs;
  Poly rhs;
  bool match = false;
  /// Swapping any two adjacent equal-size blocks leaves the generating
  /// function unchanged.
  bool ties_consistent = true;
};

/// Compares L_c(prod H_{n_i}) with the no-right-crossing generating function of
/// inhomogeneous matchings on the blocks sorted weakly increasing.
inline ConjectureReport conjecture_check(std::vector<int> ns, int sum_cap = 12) {
  int total = 0;
  for (int v : ns) {
    if (v <= 0) throw std::domain_error("conjecture_check: sizes must be positive");
    total += v;
  }
  if (total > sum_cap) throw std::domain_error("conjecture_check: total size exceeds cap");
  std::sort(ns.begin(), ns.end());
  ConjectureReport r;
  r.sizes = ns;
  r.lhs = product_functional(ns);
  BlockStructure blocks(ns);
  r.rhs = inhomogeneous_gf(blocks, WeightScheme::MomentNoRightCrossing);
  r.match = r.lhs == r.rhs;
  // swapping two equal blocks; these transpositions generate every ordering
  // that keeps the size sequence
  for (std::size_t i = 0; i + 1 < ns.size(); ++i) {
    if (ns[i] != ns[i + 1]) continue;
    std::vector<int> order(ns.size());
    for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
    std::swap(order[i], order[i + 1]);
    if (inhomogeneous_gf(blocks, WeightScheme::MomentNoRightCrossing, order) != r.rhs) r.ties_consistent = false;
  }
  return r;
}

/// All multisets of positive sizes with total at most sum_max, each sorted.
inline std::vector<std::vector<int>> multisets_up_to(int sum_max) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto& self, int remaining, int min_part) -> void {
    if (!cur.empty()) out.push_back(cur);
    for (int p = min_part; p <= remaining; ++p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, sum_max, 1);
  return out;
}

inline std::vector<ConjectureReport> conjecture_sweep(int sum_max) {
  std::vector<ConjectureReport> out;
  for (auto& ns : multisets_up_to(sum_max)) out.push_back(conjecture_check(ns, std::max(sum_max, 12)));
  return out;
}

}  // namespace hermite
