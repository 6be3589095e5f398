#pragma once

// Exhaustive verification suites: one per acceptance criterion and one per
// module, each producing a RunReport.

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "assoc_hermite/algebra.hpp"
#include "assoc_hermite/linearization.hpp"
#include "assoc_hermite/matching.hpp"
#include "assoc_hermite/models.hpp"
#include "assoc_hermite/moments.hpp"
#include "assoc_hermite/permutations.hpp"
#include "assoc_hermite/rooted_map.hpp"
#include "assoc_hermite/tableaux.hpp"
#include "assoc_hermite/tail_swap.hpp"

namespace hermite {

enum class Level { Desk, Extended };

struct Failure {
  std::string inputs;
  std::string expected;
  std::string actual;
};

struct RunReport {
  std::string suite;
  long long cases = 0;
  std::vector<Failure> failures;
  double seconds = 0;

  bool passed() const { return failures.empty(); }
};

namespace detail {

template <class T>
std::string show(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

inline std::string show(const Poly& p) { return p.to_string(); }
inline std::string show(bool b) { return b ? "true" : "false"; }
inline std::string show(const Rational& r) { return r.str(); }

inline std::string show(const std::pair<int, int>& p) {
  return "(" + std::to_string(p.first) + "," + std::to_string(p.second) + ")";
}

inline std::string show(const std::vector<int>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

inline std::string show(const Matching& m) { return format_matching(m); }

/// Collects cases and failures for one suite; stores at most the first 50 failures.
class Recorder {
 public:
  explicit Recorder(std::string suite) : start_(std::chrono::steady_clock::now()) { report_.suite = std::move(suite); }

  void check(bool ok, const std::string& inputs, const std::string& expected = "true",
             const std::string& actual = "false") {
    ++report_.cases;
    if (!ok) fail(inputs, expected, actual);
  }

  template <class A, class B>
  void equal(const A& actual, const B& expected, const std::string& inputs) {
    ++report_.cases;
    if (!(actual == expected)) fail(inputs, show(expected), show(actual));
  }

  template <class Fn>
  void guarded(const std::string& inputs, Fn&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      ++report_.cases;
      fail(inputs, "no exception", std::string("exception: ") + e.what());
    }
  }

  RunReport finish() {
    report_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  void fail(const std::string& inputs, const std::string& expected, const std::string& actual) {
    ++failure_count_;
    if (report_.failures.size() < 50) report_.failures.push_back({inputs, expected, actual});
    else if (report_.failures.size() == 50)
      report_.failures.push_back({"(further failures omitted)", "", ""});
  }

  RunReport report_;
  long long failure_count_ = 0;
  std::chrono::steady_clock::time_point start_;
};

inline std::string args(std::initializer_list<int> xs) {
  std::string s;
  for (int v : xs) s += (s.empty() ? "" : ",") + std::to_string(v);
  return "(" + s + ")";
}

inline const Poly& C() {
  static const Poly c = Poly::c();
  return c;
}

inline Poly poch(const Poly& base, int k) { return rising_factorial(base, k); }

/// Sum over complete matchings of the tagged model: every nonnested edge
/// independently weighs 1 or c.
inline Poly tagged_moment(int n) {
  Poly sum;
  for_each_complete_matching(n, [&](const Matching& m) {
    for (const auto& tm : all_taggings(m)) sum += tm.weight();
  });
  return sum;
}

/// The rooted map of the worked example, with three vertices and five edges.
inline RootedMap worked_example_map() {
  // half-edges: 0,1,2 at A (edges 1,2,3); 3..8 at B; 9 at C
  std::vector<int> rotation{1, 2, 0, 4, 5, 6, 7, 8, 3, 9};
  std::vector<int> pairing{8, 6, 9, 4, 3, 7, 1, 5, 0, 2};
  return RootedMap(rotation, pairing, 0);
}

/// The paired matching on [5] ⊔ [3] whose involution image turns (2,4) black.
inline PairedMatching worked_example_paired() {
  Matching m = parse_matching("(1,6)(2,4)(3,7)(5,8)", 8);
  std::vector<EdgeColor> colors(9, EdgeColor::Green);
  return PairedMatching(5, 3, m, colors);
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Acceptance criteria

inline RunReport criterion_moment_tables(Level = Level::Desk) {
  using detail::C;
  detail::Recorder r("moment tables");
  const std::map<int, Poly> plain{{2, C()}, {4, 2 * C().pow(2) + C()}, {6, 5 * C().pow(3) + 7 * C().pow(2) + 3 * C()}};
  const std::map<int, Poly> shifted{{2, C() + 1},
                                    {4, 2 * C().pow(2) + 5 * C() + 3},
                                    {6, 5 * C().pow(3) + 22 * C().pow(2) + 32 * C() + 15}};
  for (int shift : {0, 1}) {
    const auto& table = shift == 0 ? plain : shifted;
    const auto cf = moment_gf_truncation(4, 6, shift);
    for (const auto& [n, expected] : table) {
      const std::string tag = "mu_" + std::to_string(n) + (shift ? "(c+1)" : "(c)");
      r.equal(moment_dyck(n, shift), expected, tag + " by Dyck transfer");
      Poly paths;
      for_each_dyck_path(n, [&](const DyckPath& p) { paths += dyck_path_weight(p, shift); });
      r.equal(paths, expected, tag + " by Dyck path listing");
      for (WeightScheme s : {WeightScheme::MomentNonnested, WeightScheme::MomentNoRightCrossing}) {
        Poly v = moment_matchings(n, s);
        if (shift) v = v.shift_c(1);
        r.equal(v, expected, tag + " by matchings, " + std::string(scheme_name(s)));
      }
      if (shift) r.equal(detail::tagged_moment(n), expected, tag + " by 1-or-c tagged matchings");
      r.equal(cf[n], expected, tag + " by continued fraction, depth 4");
    }
  }
  return r.finish();
}

inline RunReport criterion_orthogonality(Level level = Level::Desk) {
  detail::Recorder r("orthogonality");
  for (int n = 0; n <= 8; ++n)
    for (int m = 0; m <= 8; ++m) {
      Poly expected = n == m ? detail::poch(detail::C(), n) : Poly();
      r.equal(inner_product(n, m), expected, "L_c(H_n H_m) at" + detail::args({n, m}));
    }
  const int bound = level == Level::Extended ? 12 : 10;
  for (int total = 0; total <= bound; total += 2)
    for (int n = 0; n <= total; ++n) {
      const int m = total - n;
      Poly expected = n == m ? detail::poch(detail::C(), n) : Poly();
      r.equal(paired_sum(n, m), expected, "paired-matching sum at" + detail::args({n, m}));
      if (n < m) continue;
      MonomialTally survivors;
      for_each_paired_matching(n, m, [&](const PairedMatching& pm) {
        if (orthogonality_involution(pm)) return;
        SignedMonomial w = paired_weight_monomial(pm);
        survivors.add(w.sign, w.xd, w.cd);
      });
      r.equal(survivors.to_poly(), expected, "involution survivors at" + detail::args({n, m}));
    }
  return r.finish();
}

inline RunReport criterion_involution(Level level = Level::Desk) {
  detail::Recorder r("involution properties");
  const int bound = level == Level::Extended ? 10 : 8;
  for (int total = 0; total <= bound; total += 2)
    for (int n = (total + 1) / 2; n <= total; ++n) {
      const int m = total - n;
      for_each_paired_matching(n, m, [&](const PairedMatching& pm) {
        const std::string at = "involution at" + detail::args({n, m}) + " on " + format_matching(pm.matching());
        auto image = orthogonality_involution(pm);
        if (!image) {
          r.check(n == m, at, "a homogeneous edge when n > m", "fixed point");
          return;
        }
        r.check(orthogonality_involution(*image) == pm, at, "involutive", "not involutive");
        SignedMonomial a = paired_weight_monomial(pm), b = paired_weight_monomial(*image);
        r.check(a.sign == -b.sign, at, "sign reversed", "same sign");
        r.check(a.cd == b.cd && a.xd == b.xd, at, "same |weight|", "different |weight|");
      });
    }
  for (int n = 0; n <= 6; ++n) {
    Poly fixed;
    bool pointwise = true;
    for_each_inhomogeneous_matching(BlockStructure({n, n}), [&](const Matching& m) {
      PairedMatching pm(n, n, m, std::vector<EdgeColor>(static_cast<std::size_t>(2 * n) + 1, EdgeColor::Green));
      Poly w = paired_weight(pm);
      fixed += w;
      if (w != Poly::c(lrm(fixed_points_to_permutation(pm)))) pointwise = false;
    });
    const Poly expected = detail::poch(detail::C(), n);
    const std::string at = detail::args({n});
    r.equal(fixed, expected, "fixed-point weight sum at n=" + at);
    r.equal(lrm_gf(n), expected, "sum of c^lrm over S_n at n=" + at);
    r.equal(cycle_gf(n), expected, "sum of c^cyc over S_n at n=" + at);
    r.check(pointwise, "fixed point weight equals c^lrm at n=" + at);
  }
  return r.finish();
}

inline RunReport criterion_linearization(Level = Level::Desk) {
  detail::Recorder r("linearization");
  for (int N = 0; N <= 6; ++N)
    for (int M = 0; M <= 6; ++M) r.check(verify_linearization(N, M), "product identity at" + detail::args({N, M}));
  for (int N = 0; N <= 8; ++N)
    for (int M = 0; M <= 8; ++M)
      for (int j = 0; j <= std::min(N, M); ++j) {
        const std::string at = detail::args({N, M, j});
        Poly f = f_simplified(N, M, j);
        r.check(f.has_nonnegative_integer_coefficients(), "nonnegative integer coefficients at" + at, "true",
                f.to_string());
        if (N <= 6 && M <= 6)
          for (int cv = 1; cv <= 10; ++cv)
            r.guarded("3F2 at" + at, [&] {
              r.equal(f_hypergeometric_at(N, M, j, Rational(cv)), f.eval(0, cv),
                      "3F2 form at" + at + " c=" + std::to_string(cv));
            });
        Rational at_one(rising(N + 1 - j, j) * rising(M + 1 - j, j), factorial(j));
        r.equal(f.eval(0, 1), at_one, "c=1 specialization at" + at);
      }
  return r.finish();
}

inline RunReport criterion_published_values(Level = Level::Desk) {
  using detail::C;
  detail::Recorder r("published values");
  const Poly c = C();
  r.equal(product_functional({2, 2, 2}), c.pow(3) + 4 * c.pow(2) + 3 * c, "L_c(H_2^3)");
  BlockStructure twos({2, 2, 2});
  r.equal(inhomogeneous_gf(twos, WeightScheme::MomentNonnested), 2 * c.pow(3) + 4 * c.pow(2) + 2 * c,
          "nonnested [2]+[2]+[2]");
  r.equal(enumerate_inhomogeneous(twos).size(), std::size_t{8}, "inhomogeneous matchings on [2]+[2]+[2]");
  const Poly c012 = c * (c + 1) * (c + 2);
  BlockStructure b334({3, 3, 4});
  struct Row {
    std::vector<int> order;
    const char* name;
    Poly no_right_crossing;
    Poly nonnested;
  };
  const std::vector<Row> rows{
      {{0, 1, 2}, "[3]+[3]+[4]", c012 * (c + 3) * (c + 8), 3 * c * (c + 1) * (c + 2).pow(2) * (c + 3)},
      {{0, 2, 1}, "[3]+[4]+[3]", c012 * (c.pow(2) + 7 * c + 28), 6 * c * (c + 1).pow(2) * (c + 2).pow(2)},
      {{2, 0, 1}, "[4]+[3]+[3]", c012 * (c.pow(2) + 8 * c + 27), 3 * c * (c + 1) * (c + 2).pow(2) * (c + 3)},
  };
  for (const auto& row : rows) {
    r.equal(inhomogeneous_gf(b334, WeightScheme::MomentNoRightCrossing, row.order), row.no_right_crossing,
            std::string("no-right-crossing ") + row.name);
    r.equal(inhomogeneous_gf(b334, WeightScheme::MomentNonnested, row.order), row.nonnested,
            std::string("nonnested ") + row.name);
  }
  r.equal(product_functional({3, 3, 4}), rows[0].no_right_crossing, "L_c(H_3 H_3 H_4)");
  return r.finish();
}

inline RunReport criterion_mixed(Level level = Level::Desk) {
  detail::Recorder r("mixed linearization");
  const int n_max = level == Level::Extended ? 10 : 8;
  for (int n = 0; n <= n_max; ++n)
    for (int m = 0; m <= n + 1; ++m) {
      MixedReport rep = verify_mixed(n, m);
      r.check(rep.holds, "mixed identity at" + detail::args({n, m}), "residual 0", rep.residual.to_string());
      r.check(rep.range_tight, "k-range bound at" + detail::args({n, m}));
    }
  return r.finish();
}

inline RunReport criterion_shifted_identity(Level = Level::Desk) {
  detail::Recorder r("shifted identity and lemmas");
  for (int n = 0; n <= 10; ++n) r.equal(identity_rhs(n), hermite_assoc_shifted(n), "usual-Hermite sum at n=" + detail::args({n}));
  for (int n = 0; n <= 8; ++n)
    r.equal(hermite_fake_edge_model(n), hermite_assoc_shifted(n), "fake-edge model at n=" + detail::args({n}));
  for (int k = 0; k <= 4; ++k) {
    Poly expected = detail::poch(detail::C(), k) * Rational(k % 2 ? -1 : 1);
    r.equal(claim1_gf(k), expected, "lemma configurations at k=" + detail::args({k}));
    for (const auto& cfg : enumerate_claim1_configs(k))
      r.equal(claim1_slots(cfg), std::pair<int, int>{k, 1}, "slots of " + format_matching(cfg.matching));
  }
  for (int n = 1; n <= 6; ++n)
    r.equal(permutation_matchings_gf(n), detail::poch(detail::C() + 1, n - 1),
            "spanning matchings at n=" + detail::args({n}));
  return r.finish();
}

inline RunReport criterion_bijections(Level level = Level::Desk) {
  detail::Recorder r("bijections");
  // tableaux
  const int tab_max = level == Level::Extended ? 6 : 5;
  for (int n = 0; n <= tab_max; ++n)
    for_each_complete_matching(2 * n, [&](const Matching& m) {
      r.guarded("tableau of " + format_matching(m), [&] {
        OscillatingTableau t = matching_to_tableau(m);
        r.check(tableau_to_matching(t) == m, "tableau round trip on " + format_matching(m));
        r.equal(tableau_weight(t), weight(m, WeightScheme::MomentNonnested), "tableau weight of " + format_matching(m));
      });
    });
  for (int n = 0; n <= 4; ++n)
    for_each_oscillating_tableau(2 * n, [&](const OscillatingTableau& t) {
      r.guarded("tableau " + format_tableau(t),
                [&] { r.check(matching_to_tableau(tableau_to_matching(t)) == t, "round trip on " + format_tableau(t)); });
    });
  {
    Matching m = parse_matching("(1,3)(2,6)(4,8)(5,7)");
    OscillatingTableau t = matching_to_tableau(m);
    r.equal(tableau_to_matching(t), m, "worked tableau instance");
    r.equal(tableau_weight(t), weight(m, WeightScheme::MomentNonnested), "worked tableau weight");
  }
  // tail swap
  for (int n = 0; n <= 4; ++n) {
    std::set<TaggedMatching> images;
    long long connected = 0;
    for_each_complete_matching(2 * n + 2, [&](const Matching& cm) {
      if (!is_connected(cm)) return;
      ++connected;
      r.guarded("tail swap on " + format_matching(cm), [&] {
        TaggedMatching tm = tail_swap(cm);
        r.equal(tm.weight(), connected_matching_weight(cm), "tail swap weight on " + format_matching(cm));
        r.equal(tail_swap_inverse(tm), cm, "tail swap round trip on " + format_matching(cm));
        images.insert(tm);
      });
    });
    long long taggings = 0;
    bool all_hit = true;
    for_each_complete_matching(2 * n, [&](const Matching& m) {
      for (const auto& tm : all_taggings(m)) {
        ++taggings;
        if (!images.count(tm)) all_hit = false;
      }
    });
    r.equal(static_cast<long long>(images.size()), connected, "tail swap injective at n=" + detail::args({n}));
    r.equal(connected, taggings, "tail swap onto tagged matchings at n=" + detail::args({n}));
    r.check(all_hit, "every tagged matching is hit at n=" + detail::args({n}));
  }
  {
    TaggedMatching tm = tail_swap(parse_matching("(1,5)(2,4)(3,8)(6,7)"));
    r.equal(format_matching(tm.matching), std::string("(1,3)(2,4)(5,6)"), "tail swap worked example");
    r.equal(tail_swap_inverse(tm), parse_matching("(1,5)(2,4)(3,8)(6,7)"), "tail swap worked example inverse");
  }
  // rooted maps
  const std::vector<std::size_t> counts{1, 2, 10, 74, 706};
  const int e_max = level == Level::Extended ? 4 : 3;
  for (int E = 0; E <= e_max; ++E) {
    auto maps = enumerate_rooted_maps(E);
    r.equal(maps.size(), counts[E], "rooted map count at E=" + detail::args({E}));
    Poly by_vertices, by_matchings;
    std::set<Matching> images;
    for (const auto& rm : maps) {
      by_vertices += rooted_map_weight(rm);
      Matching cm = map_to_connected_matching(rm);
      r.check(cm.size() == 2 * E + 2 && is_connected(cm), "map image is connected at E=" + detail::args({E}));
      r.equal(connected_matching_weight(cm), rooted_map_weight(rm), "map weight at E=" + detail::args({E}));
      images.insert(cm);
    }
    long long connected = 0;
    for_each_complete_matching(2 * E + 2, [&](const Matching& m) {
      if (!is_connected(m)) return;
      ++connected;
      by_matchings += connected_matching_weight(m);
    });
    r.equal(static_cast<long long>(images.size()), connected, "maps onto connected matchings at E=" + detail::args({E}));
    const Poly mu = moment_dyck(2 * E, 1);
    r.equal(by_vertices, mu, "vertex generating function at E=" + detail::args({E}));
    r.equal(by_matchings, mu, "connected-matching generating function at E=" + detail::args({E}));
    r.equal(detail::tagged_moment(2 * E), mu, "tagged complete matchings at E=" + detail::args({E}));
  }
  {
    const RootedMap rm = detail::worked_example_map();
    r.equal(map_to_word(rm).letters, std::vector<int>{0, 1, 2, 3, 0, 4, 4, 5, 2, 5, 1, 3}, "worked map word");
    r.equal(format_matching(map_to_connected_matching(rm)), std::string("(1,5)(2,11)(3,9)(4,12)(6,7)(8,10)"),
            "worked map matching");
    r.equal(connected_matching_weight(map_to_connected_matching(rm)), Poly::c(2), "worked map weight");
    r.equal(rooted_map_weight(rm), Poly::c(2), "worked map vertices");
  }
  return r.finish();
}

inline RunReport criterion_chebyshev(Level = Level::Desk) {
  detail::Recorder r("Chebyshev limit");
  for (int n = 0; n <= 8; ++n) {
    ChebyshevLimit lim = chebyshev_limit(n);
    r.equal(lim.limit, chebyshev_U(n), "limit at n=" + detail::args({n}));
    r.check(lim.max_c_exponent <= 0, "no positive power of c at n=" + detail::args({n}));
    r.equal(chebyshev_U_from_matchings(n), chebyshev_U(n), "adjacent-edge matchings at n=" + detail::args({n}));
  }
  return r.finish();
}

inline RunReport criterion_conjecture(Level level = Level::Desk) {
  detail::Recorder r("conjecture sweep");
  const int s = level == Level::Extended ? 12 : 10;
  for (const auto& rep : conjecture_sweep(s)) {
    r.check(rep.match, "conjecture at " + detail::show(rep.sizes), rep.lhs.to_string(), rep.rhs.to_string());
    r.check(rep.ties_consistent, "equal-size ties at " + detail::show(rep.sizes));
  }
  return r.finish();
}

inline RunReport criterion_shifted_sequence(Level = Level::Desk) {
  detail::Recorder r("shifted moment sequence");
  const std::vector<long long> expected{2, 10, 74, 706, 8162};
  const auto cf = moment_gf_truncation(6, 10, 1);
  for (int n = 1; n <= 5; ++n) {
    r.equal(moment_dyck(2 * n, 1).eval(0, 1), Rational(expected[n - 1]), "mu_2n(c+1) at c=1, n=" + detail::args({n}));
    r.equal(cf[2 * n].eval(0, 1), Rational(expected[n - 1]), "continued fraction at c=1, n=" + detail::args({n}));
  }
  return r.finish();
}

struct Criterion {
  int id;
  std::string title;
  std::function<RunReport(Level)> run;
};

inline std::vector<Criterion> acceptance_criteria() {
  return {
      {1, "moment tables by four routes", criterion_moment_tables},
      {2, "orthogonality and paired-matching sums", criterion_orthogonality},
      {3, "involution properties and L2 norm", criterion_involution},
      {4, "linearization coefficients", criterion_linearization},
      {5, "published block-ordering values", criterion_published_values},
      {6, "mixed linearization", criterion_mixed},
      {7, "shifted identity, fake-edge model, lemmas", criterion_shifted_identity},
      {8, "bijection round trips and weights", criterion_bijections},
      {9, "Chebyshev limit", criterion_chebyshev},
      {10, "conjecture sweep", criterion_conjecture},
      {11, "shifted moment sequence 2, 10, 74, 706, 8162", criterion_shifted_sequence},
  };
}

// ---------------------------------------------------------------------------
// Module suites

inline RunReport suite_algebra(Level = Level::Desk) {
  using detail::C;
  detail::Recorder r("algebra");
  const Poly x = Poly::x(), c = C();
  r.equal((x * x - c) + c, x * x, "cancellation");
  r.equal((2 * c.pow(2) + c) + (5 * c.pow(3) + 7 * c.pow(2) + 3 * c), 5 * c.pow(3) + 9 * c.pow(2) + 4 * c, "sum");
  r.equal(c * (c + 1) * (c + 2), c.pow(3) + 3 * c.pow(2) + 2 * c, "product");
  r.equal(binomial_poly(c + 1, 2), (c.pow(2) + c) * Rational(1, 2), "binomial of c+1");
  r.equal((5 * c.pow(3) + 7 * c.pow(2) + 3 * c).eval(0, 1), Rational(15), "evaluation");
  for (int n = 0; n <= 10; ++n) r.equal(rising_factorial(c, n).eval(0, 1), Rational(factorial(n)), "(c)_n at 1");
  for (int k = 0; k <= 6; ++k)
    for (int t = 1; t <= 6; ++t)
      r.equal(binomial_poly(c + (k - 1), k).eval(0, t), Rational(binomial(t + k - 1, k)),
              "binomial_poly at" + detail::args({k, t}));
  std::mt19937 rng(20240601);
  auto random_poly = [&] {
    std::uniform_int_distribution<int> deg(0, 6), coef(-5, 5), count(0, 5);
    Poly p;
    for (int i = count(rng); i > 0; --i) p += Poly::monomial(Rational(coef(rng), 1 + std::abs(coef(rng))), deg(rng), deg(rng));
    return p;
  };
  for (int trial = 0; trial < 200; ++trial) {
    Poly a = random_poly(), b = random_poly(), d = random_poly();
    const std::string at = "random trial " + std::to_string(trial);
    r.equal(a + b, b + a, at + " additive commutativity");
    r.equal(a * b, b * a, at + " multiplicative commutativity");
    r.equal((a * b) * d, a * (b * d), at + " associativity");
    r.equal(a * (b + d), a * b + a * d, at + " distributivity");
    r.equal(a - a, Poly(), at + " additive inverse");
    Rational xv(trial % 7 - 3, 2), cv(trial % 5 + 1);
    r.equal((a * b).eval(xv, cv), a.eval(xv, cv) * b.eval(xv, cv), at + " evaluation is multiplicative");
    r.equal(a.shift_c(1).shift_c(-1), a, at + " shift round trip");
  }
  return r.finish();
}

inline RunReport suite_matchings(Level = Level::Desk) {
  detail::Recorder r("matchings");
  for (int n = 0; n <= 12; n += 2) {
    Integer df = 1;
    for (int k = n - 1; k > 0; k -= 2) df *= k;
    r.equal(Integer(enumerate_complete(n).size()), df, "complete count at n=" + detail::args({n}));
  }
  const std::vector<int> involutions{1, 1, 2, 4, 10, 26, 76, 232, 764, 2620, 9496};
  for (int n = 0; n <= 10; ++n)
    r.equal(static_cast<int>(enumerate_incomplete(n).size()), involutions[n], "incomplete count at n=" + detail::args({n}));
  for (int n = 0; n <= 6; ++n)
    r.equal(Integer(enumerate_inhomogeneous(BlockStructure({n, n})).size()), factorial(n),
            "inhomogeneous count on [n]+[n] at n=" + detail::args({n}));
  for (int n = 0; n <= 12; n += 2)
    r.equal(moment_matchings(n, WeightScheme::MomentNonnested), moment_matchings(n, WeightScheme::MomentNoRightCrossing),
            "moment schemes agree at n=" + detail::args({n}));
  for (int n = 0; n <= 8; n += 2)
    for_each_complete_matching(n, [&](const Matching& m) {
      const std::string at = format_matching(m);
      int nonnested = 0, no_right = 0;
      Matching rev = reverse(m);
      r.check(reverse(rev) == m, "reverse is an involution on " + at);
      for (const Edge& e : m.edges()) {
        EdgeStats s = edge_stats(m, e);
        if (!s.is_nested_by_other) ++nonnested;
        if (!s.has_right_crossing) ++no_right;
        EdgeStats t = edge_stats(rev, {n + 1 - e.right, n + 1 - e.left});
        r.check(s.has_right_crossing == t.has_left_crossing && s.is_nested_by_other == t.is_nested_by_other,
                "reverse swaps crossing sides on " + at);
      }
      r.equal(weight(m, WeightScheme::MomentNonnested), Poly::c(nonnested), "nonnested weight of " + at);
      r.equal(weight(m, WeightScheme::MomentNoRightCrossing), Poly::c(no_right), "no-right-crossing weight of " + at);
    });
  r.check(!edge_stats(parse_matching("(1,5)(2,11)(3,9)(4,12)(6,7)(8,10)"), {2, 11}).is_nested_by_other,
          "edge (2,11) is not nested");
  r.check(is_connected(parse_matching("(1,5)(2,4)(3,8)(6,7)")), "(1,5)(2,4)(3,8)(6,7) is connected");
  r.check(!is_connected(parse_matching("(1,2)(3,4)")), "(1,2)(3,4) is not connected");
  return r.finish();
}

inline RunReport suite_models(Level = Level::Desk) {
  detail::Recorder r("models");
  for (int n = 0; n <= 10; ++n) {
    const Poly h = hermite_assoc(n);
    for (WeightScheme s : {WeightScheme::PolyRightmost, WeightScheme::PolyLeftmost, WeightScheme::PolyRightmostReversed,
                           WeightScheme::PolyLeftmostReversed})
      r.equal(hermite_assoc_from_matchings(n, s), h,
              "matching model " + std::string(scheme_name(s)) + " at n=" + detail::args({n}));
    r.equal(h.substitute_c(1), hermite_usual(n), "c=1 gives usual Hermite at n=" + detail::args({n}));
    r.equal(identity_rhs(n), hermite_assoc_shifted(n), "usual-Hermite sum at n=" + detail::args({n}));
  }
  for (int n = 0; n <= 8; ++n) {
    bool connected = true;
    for_each_incomplete_matching(n + 2, [&](const Matching& m) {
      if (!is_fake_edge_matching(m)) return;
      // drop the fixed points and renumber
      std::vector<int> index(static_cast<std::size_t>(m.size()) + 1, 0);
      int next = 0;
      for (int v = 1; v <= m.size(); ++v)
        if (!m.is_fixed(v)) index[v] = ++next;
      Matching reduced(next);
      for (const Edge& e : m.edges()) reduced.add_edge({index[e.left], index[e.right]});
      if (!is_connected(reduced)) connected = false;
    });
    r.check(connected, "fake-edge matchings are connected at n=" + detail::args({n}));
  }
  for (int k = 0; k <= 4; ++k)
    for (const auto& cfg : enumerate_claim1_configs(k)) r.equal(claim2_slots(cfg), k + 1, "green slots of " + format_matching(cfg.matching));
  for (int n = 1; n <= 6; ++n)
    for_each_permutation(n, [&](const Permutation& p) {
      Matching m = permutation_to_spanning_matching(p, SpanningConvention::Nonnested);
      r.equal(spanning_weight_nonnested_except_first(m).cd, lrm(p) - 1, "spanning weight is c^(lrm-1)");
      r.check(spanning_matching_to_permutation(m, SpanningConvention::Nonnested) == p, "spanning bijection round trip");
    });
  return r.finish();
}

inline RunReport suite_moments(Level = Level::Desk) {
  detail::Recorder r("moments");
  for (int n = 0; n <= 12; n += 2) {
    Poly paths;
    for_each_dyck_path(n, [&](const DyckPath& p) { paths += dyck_path_weight(p); });
    r.equal(moment_dyck(n), paths, "Dyck transfer against path listing at n=" + detail::args({n}));
    r.equal(moment_gf_truncation(n / 2 + 1, n, 0)[n], moment_dyck(n), "continued fraction at n=" + detail::args({n}));
  }
  r.equal(linear_functional(hermite_assoc(2).pow(2)), detail::C() * (detail::C() + 1), "L_c(H_2^2)");
  // the flip changes the weight of no edge other than the flipped one
  for (int total = 0; total <= 8; total += 2)
    for (int n = (total + 1) / 2; n <= total; ++n)
      for_each_paired_matching(n, total - n, [&](const PairedMatching& pm) {
        auto image = orthogonality_involution(pm);
        if (!image) return;
        int changed_color = 0;
        for (const Edge& e : pm.edges()) {
          if (pm.color(e) != image->color(e)) {
            ++changed_color;
            continue;
          }
          r.check(paired_edge_is_special(pm, e) == paired_edge_is_special(*image, e),
                  "flip leaves other edges on " + format_matching(pm.matching()));
        }
        r.equal(changed_color, 1, "flip changes one color on " + format_matching(pm.matching()));
      });
  {
    PairedMatching pm = detail::worked_example_paired();
    auto image = orthogonality_involution(pm);
    r.check(image && image->color({2, 4}) == EdgeColor::Black, "worked paired matching flips (2,4) to black");
  }
  {
    Matching m = permutation_to_spanning_matching(Permutation{{3, 1, 4, 2}}, SpanningConvention::NoRightCrossing);
    r.equal(format_matching(m), std::string("(1,7)(2,5)(3,8)(4,6)"), "3142 as a matching");
    std::vector<int> weighted;
    for (const Edge& e : m.edges())
      if (!edge_stats(m, e).has_right_crossing) weighted.push_back(e.left);
    r.equal(weighted, std::vector<int>{3, 4}, "left-to-right maxima of 3142");
  }
  return r.finish();
}

inline RunReport suite_bijections(Level = Level::Desk) {
  detail::Recorder r("bijections, structure");
  // insertion lemma and column proposition
  for (int n = 0; n <= 4; ++n)
    for_each_complete_matching(2 * n, [&](const Matching& m) {
      const std::string at = format_matching(m);
      const auto fillings = matching_to_fillings(m);
      const auto label = tableau_edge_labels(m);
      std::map<int, Edge> edge_of;
      for (const Edge& e : m.edges()) edge_of[label[e.left]] = e;
      std::set<int> deep_column;
      std::set<std::pair<int, int>> together;
      for (int v = 1; v <= m.size(); ++v) {
        const Filling& before = fillings[v - 1];
        std::vector<int> present;
        for (const auto& row : before) present.insert(present.end(), row.begin(), row.end());
        for (int a : present)
          for (int b : present) together.insert({a, b});
        if (m.mate(v) > v) {
          const int mine = label[v];
          const Edge e = edge_of[mine];
          for (int other : present) {
            const Edge f = edge_of[other];
            if (other < mine) r.check(nests(f, e), "smaller label nests the new edge on " + at);
            else r.check(left_crosses(f, e), "larger label left-crosses the new edge on " + at);
          }
        }
        for (const auto& row : fillings[v])
          for (std::size_t col = 1; col < row.size(); ++col) deep_column.insert(row[col]);
      }
      for (const auto& [a, e] : edge_of) {
        r.check(deep_column.count(a) == static_cast<std::size_t>(edge_stats(m, e).is_nested_by_other),
                "column proposition on " + at);
        for (const auto& [b, f] : edge_of)
          if (a < b && !together.count({a, b}) && !together.count({b, a}))
            r.check(!nests(e, f) && !nests(f, e) && !crosses(e, f), "labels never together are disjoint on " + at);
      }
    });
  // the first-row statistic tracks the no-right-crossing weighting only on
  // the smallest sizes
  for (int n = 0; n <= 2; ++n)
    for_each_complete_matching(2 * n, [&](const Matching& m) {
      r.equal(tableau_weight(matching_to_tableau(m), TableauStatistic::FirstRow),
              weight(m, WeightScheme::MomentNoRightCrossing), "first-row statistic on " + format_matching(m));
    });
  {
    Matching m = parse_matching("(1,5)(2,4)(3,6)");
    r.equal(tableau_weight(matching_to_tableau(m), TableauStatistic::FirstRow), Poly::c(2), "first-row count on " + format_matching(m));
    r.equal(weight(m, WeightScheme::MomentNoRightCrossing), Poly::c(1), "no-right-crossing weight on " + format_matching(m));
  }
  for (int n = 0; n <= 3; ++n)
    for_each_complete_matching(2 * n, [&](const Matching& m) {
      for (const auto& tm : all_taggings(m))
        r.guarded("tail swap inverse on " + format_matching(m), [&] {
          Matching cm = tail_swap_inverse(tm);
          r.check(is_connected(cm), "inverse image is connected");
          r.check(tail_swap(cm) == tm, "inverse then forward on " + format_matching(m));
        });
    });
  return r.finish();
}

inline RunReport suite_linearization(Level = Level::Desk) {
  detail::Recorder r("linearization, structure");
  for (int N = 0; N <= 8; ++N)
    for (int M = 0; M <= 8; ++M) {
      if (N + M > 8) continue;
      for (int j = 0; j <= std::min(N, M); ++j) {
        const int K = N + M - 2 * j;
        std::vector<int> sizes;
        for (int b : {N, M, K})
          if (b > 0) sizes.push_back(b);
        std::size_t count = enumerate_inhomogeneous(BlockStructure(sizes)).size();
        r.equal(f_simplified(N, M, j).eval(0, 1) * Rational(factorial(K)), Rational(Integer(count)),
                "inhomogeneous count on [N]+[M]+[N+M-2j] at" + detail::args({N, M, j}));
      }
    }
  r.equal(conjecture_check({1, 2, 3}).match, true, "conjecture at (1,2,3)");
  for (int n = 0; n <= 6; ++n)
    r.equal(product_functional({n, n}), detail::poch(detail::C(), n), "L_c(H_n^2) at n=" + detail::args({n}));
  return r.finish();
}

inline std::vector<std::function<RunReport(Level)>> module_suites() {
  return {suite_algebra, suite_matchings, suite_models, suite_moments, suite_bijections, suite_linearization};
}

}  // namespace hermite
