// ahermite: command-line front end for the associated Hermite library.

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "assoc_hermite/assoc_hermite.hpp"

using namespace hermite;

namespace {

struct Options {
  bool csv = false;
  int cap = kDefaultVertexCap;
  bool shifted = false;
  std::string scheme;
};

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return out + "\"";
}

json poly_entry(const Poly& p) { return {{"text", p.to_string()}, {"terms", poly_to_json(p)}}; }

json report_to_json(const RunReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"inputs", f.inputs}, {"expected", f.expected}, {"actual", f.actual}});
  return {{"suite", r.suite}, {"cases", r.cases}, {"passed", r.passed()}, {"failures", failures}};
}

std::vector<Edge> parse_edge_list(const std::string& text) {
  if (text.empty()) return {};
  Matching m = parse_matching(text);
  return m.edges();
}

WeightScheme scheme_or(const Options& o, WeightScheme fallback) {
  return o.scheme.empty() ? fallback : parse_scheme(o.scheme);
}

// ---------------------------------------------------------------------------

int cmd_poly(const Options& o, int n, const std::string& kind) {
  if (n < 0) throw std::invalid_argument("poly: n must be nonnegative");
  Poly p;
  if (kind == "assoc") p = o.shifted ? hermite_assoc_shifted(n) : hermite_assoc(n);
  else if (kind == "matchings") {
    p = hermite_assoc_from_matchings(n, scheme_or(o, WeightScheme::PolyRightmost), o.cap);
    if (o.shifted) p = p.shift_c(1);
  } else if (kind == "fake-edge") p = hermite_fake_edge_model(n, o.cap);
  else if (kind == "identity") p = identity_rhs(n);
  else if (kind == "usual") p = hermite_usual(n);
  else if (kind == "chebyshev") p = chebyshev_U(n);
  else if (kind == "chebyshev-limit") p = chebyshev_limit(n).limit;
  else throw std::invalid_argument("poly: unknown kind '" + kind + "'");
  if (o.csv) {
    std::cout << "n,kind,poly\n" << n << ',' << kind << ',' << csv_quote(p.to_string()) << '\n';
    return 0;
  }
  emit({{"command", "poly"}, {"n", n}, {"kind", kind}, {"shifted", o.shifted}, {"poly", poly_to_json(p)}, {"text", p.to_string()}});
  return 0;
}

int cmd_moments(const Options& o, int upto, const std::string& route) {
  if (upto < 0) throw std::invalid_argument("moments: --upto must be nonnegative");
  const int shift = o.shifted ? 1 : 0;
  std::vector<Poly> table;
  if (route == "dyck") {
    table = moment_table(upto, shift);
  } else if (route == "matchings") {
    WeightScheme s = scheme_or(o, WeightScheme::MomentNonnested);
    for (int n = 0; n <= upto; ++n) {
      Poly v = moment_matchings(n, s, o.cap);
      table.push_back(shift ? v.shift_c(1) : v);
    }
  } else if (route == "cf") {
    table = moment_gf_truncation(upto / 2 + 1, upto, shift);
  } else {
    throw std::invalid_argument("moments: unknown route '" + route + "'");
  }
  if (o.csv) {
    std::cout << "n,moment\n";
    for (int n = 0; n <= upto; ++n) std::cout << n << ',' << csv_quote(table[n].to_string()) << '\n';
    return 0;
  }
  json arr = json::array(), text = json::array();
  for (const Poly& p : table) {
    arr.push_back(poly_to_json(p));
    text.push_back(p.to_string());
  }
  emit({{"command", "moments"}, {"route", route}, {"shifted", o.shifted}, {"moments", arr}, {"text", text}});
  return 0;
}

int cmd_orthogonality(const Options& o, int max_n, bool paired) {
  if (max_n < 0) throw std::invalid_argument("orthogonality: --max must be nonnegative");
  json rows = json::array();
  if (o.csv) std::cout << "n,m,inner_product" << (paired ? ",paired_sum" : "") << '\n';
  for (int n = 0; n <= max_n; ++n)
    for (int m = 0; m <= max_n; ++m) {
      Poly ip = inner_product(n, m);
      std::optional<Poly> ps;
      if (paired) ps = paired_sum(n, m, o.cap);
      if (o.csv) {
        std::cout << n << ',' << m << ',' << csv_quote(ip.to_string());
        if (ps) std::cout << ',' << csv_quote(ps->to_string());
        std::cout << '\n';
        continue;
      }
      json row{{"n", n}, {"m", m}, {"inner_product", poly_to_json(ip)}};
      if (ps) row["paired_sum"] = poly_to_json(*ps);
      rows.push_back(row);
    }
  if (!o.csv) emit({{"command", "orthogonality"}, {"rows", rows}});
  return 0;
}

int cmd_linearize(const Options& o, int N, int M) {
  LinearizationReport r = linearize(N, M);
  if (o.csv) {
    std::cout << "N,M,j,f\n";
    for (std::size_t j = 0; j < r.coefficients.size(); ++j)
      std::cout << N << ',' << M << ',' << j << ',' << csv_quote(r.coefficients[j].to_string()) << '\n';
    return 0;
  }
  json coeffs = json::array();
  for (std::size_t j = 0; j < r.coefficients.size(); ++j) {
    json entry{{"j", j}, {"degree", N + M - 2 * static_cast<int>(j)}, {"f", poly_to_json(r.coefficients[j])},
               {"text", r.coefficients[j].to_string()}};
    if (N <= 6 && M <= 6) {
      json at = json::array();
      for (int cv = 1; cv <= 10; ++cv) at.push_back(f_hypergeometric_at(N, M, static_cast<int>(j), cv).str());
      entry["hypergeometric_at_c_1_to_10"] = at;
    }
    coeffs.push_back(entry);
  }
  emit({{"command", "linearize"},
        {"N", N},
        {"M", M},
        {"holds", r.holds},
        {"lhs", poly_to_json(r.lhs)},
        {"rhs", poly_to_json(r.rhs)},
        {"coefficients", coeffs}});
  return 0;
}

int cmd_mixed(const Options& o, int n, int m) {
  MixedReport r = verify_mixed(n, m);
  json expansion = json::array();
  for (auto it = r.expansion.rbegin(); it != r.expansion.rend(); ++it)
    expansion.push_back({{"degree", it->first}, {"coefficient", poly_to_json(it->second)}, {"text", it->second.to_string()}});
  if (o.csv) {
    std::cout << "degree,coefficient\n";
    for (auto it = r.expansion.rbegin(); it != r.expansion.rend(); ++it)
      std::cout << it->first << ',' << csv_quote(it->second.to_string()) << '\n';
    return 0;
  }
  emit({{"command", "mixed"},
        {"n", n},
        {"m", m},
        {"in_range", r.in_range},
        {"holds", r.holds},
        {"range_tight", r.range_tight},
        {"lhs", poly_to_json(r.lhs)},
        {"rhs", poly_to_json(r.rhs)},
        {"residual", poly_to_json(r.residual)},
        {"expansion", expansion}});
  return 0;
}

int cmd_conjecture(const Options& o, int sum_max, const std::vector<int>& sizes, const std::vector<int>& arrangement) {
  if (!sizes.empty()) {
    BlockStructure blocks(sizes);
    std::vector<int> order = arrangement;
    if (order.empty())
      for (std::size_t i = 0; i < sizes.size(); ++i) order.push_back(static_cast<int>(i));
    WeightScheme s = scheme_or(o, WeightScheme::MomentNoRightCrossing);
    Poly lhs = product_functional(sizes);
    Poly rhs = inhomogeneous_gf(blocks, s, order, o.cap);
    emit({{"command", "conjecture"},
          {"sizes", sizes},
          {"arrangement", order},
          {"scheme", scheme_name(s)},
          {"lhs", poly_to_json(lhs)},
          {"rhs", poly_to_json(rhs)},
          {"lhs_text", lhs.to_string()},
          {"rhs_text", rhs.to_string()},
          {"match", lhs == rhs}});
    return 0;
  }
  if (sum_max < 0) throw std::invalid_argument("conjecture: --sum-max must be nonnegative");
  if (sum_max > o.cap) throw std::invalid_argument("conjecture: --sum-max exceeds the vertex cap");
  auto reports = conjecture_sweep(sum_max);
  int mismatches = 0;
  if (o.csv) std::cout << "sizes,match,ties_consistent,lhs,rhs\n";
  json rows = json::array();
  for (const auto& r : reports) {
    if (!r.match || !r.ties_consistent) ++mismatches;
    if (o.csv) {
      std::string sz;
      for (int v : r.sizes) sz += (sz.empty() ? "" : " ") + std::to_string(v);
      std::cout << sz << ',' << r.match << ',' << r.ties_consistent << ',' << csv_quote(r.lhs.to_string()) << ','
                << csv_quote(r.rhs.to_string()) << '\n';
      continue;
    }
    rows.push_back({{"sizes", r.sizes},
                    {"match", r.match},
                    {"ties_consistent", r.ties_consistent},
                    {"lhs", poly_to_json(r.lhs)},
                    {"rhs", poly_to_json(r.rhs)}});
  }
  if (!o.csv) emit({{"command", "conjecture"}, {"sum_max", sum_max}, {"mismatches", mismatches}, {"reports", rows}});
  return mismatches == 0 ? 0 : 1;
}

int cmd_bijection(const Options& o, const std::string& kind, const std::string& input, const std::string& tags,
                  int edges, bool example) {
  (void)o;
  if (kind == "tableau") {
    Matching m = parse_matching(input);
    OscillatingTableau t = matching_to_tableau(m);
    emit({{"command", "bijection tableau"},
          {"matching", format_matching(m)},
          {"tableau", format_tableau(t)},
          {"weight", poly_to_json(tableau_weight(t))}});
  } else if (kind == "untableau") {
    OscillatingTableau t = parse_tableau(input);
    Matching m = tableau_to_matching(t);
    emit({{"command", "bijection untableau"},
          {"tableau", format_tableau(t)},
          {"matching", format_matching(m)},
          {"weight", poly_to_json(tableau_weight(t))}});
  } else if (kind == "tailswap") {
    Matching cm = parse_matching(input);
    TaggedMatching tm = tail_swap(cm);
    emit({{"command", "bijection tailswap"},
          {"input", format_matching(cm)},
          {"output", format_matching(tm.matching)},
          {"tagged", tagged_matching_to_json(tm)["tagged"]},
          {"weight", poly_to_json(tm.weight())}});
  } else if (kind == "untailswap") {
    TaggedMatching tm{parse_matching(input), parse_edge_list(tags)};
    std::sort(tm.tagged.begin(), tm.tagged.end());
    Matching cm = tail_swap_inverse(tm);
    emit({{"command", "bijection untailswap"},
          {"input", format_matching(tm.matching)},
          {"output", format_matching(cm)},
          {"weight", poly_to_json(connected_matching_weight(cm))}});
  } else if (kind == "map-word") {
    RootedMap rm = example ? detail::worked_example_map() : rooted_map_from_json(json::parse(input));
    DoubleOccurrenceWord w = map_to_word(rm);
    Matching cm = w.to_matching();
    emit({{"command", "bijection map-word"},
          {"map", rooted_map_to_json(rm)},
          {"word", w.letters},
          {"matching", format_matching(cm)},
          {"weight", poly_to_json(connected_matching_weight(cm))}});
  } else if (kind == "quadruples") {
    if (edges < 0) throw std::invalid_argument("bijection quadruples: --edges is required");
    for (const auto& rm : enumerate_rooted_maps(edges, std::max(4, edges)))
      std::cout << quadruple_to_json(make_quadruple(rm)).dump() << '\n';
  } else {
    throw std::invalid_argument("bijection: unknown kind '" + kind + "'");
  }
  return 0;
}

int cmd_gf(const Options& o, int depth, int order) {
  auto series = moment_gf_truncation(depth, order, o.shifted ? 1 : 0);
  if (o.csv) {
    std::cout << "power,coefficient\n";
    for (int k = 0; k <= order; ++k) std::cout << k << ',' << csv_quote(series[k].to_string()) << '\n';
    return 0;
  }
  json arr = json::array();
  for (const Poly& p : series) arr.push_back(poly_to_json(p));
  emit({{"command", "gf"}, {"depth", depth}, {"order", order}, {"shifted", o.shifted}, {"coefficients", arr}});
  return 0;
}

int cmd_verify_all(const std::string& level_name) {
  Level level;
  if (level_name == "desk") level = Level::Desk;
  else if (level_name == "extended") level = Level::Extended;
  else throw std::invalid_argument("verify-all: --level must be desk or extended");
  json suites = json::array();
  bool ok = true;
  for (const auto& suite : module_suites()) {
    RunReport r = suite(level);
    ok = ok && r.passed();
    suites.push_back(report_to_json(r));
  }
  for (const auto& crit : acceptance_criteria()) {
    RunReport r = crit.run(level);
    ok = ok && r.passed();
    json j = report_to_json(r);
    j["criterion"] = crit.id;
    suites.push_back(j);
  }
  emit({{"command", "verify-all"}, {"level", level_name}, {"passed", ok}, {"suites", suites}});
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Associated Hermite polynomials: models, moments, bijections, identities"};
  app.fallthrough();
  app.require_subcommand(1);
  Options o;
  bool json_flag = false;
  app.add_flag("--json", json_flag, "JSON output (default)");
  app.add_flag("--csv", o.csv, "CSV output for tables");
  app.add_option("--cap", o.cap, "vertex cap for enumerations")->check(CLI::PositiveNumber);
  app.add_flag("--shifted", o.shifted, "apply c -> c+1");
  app.add_option("--scheme", o.scheme,
                 "weighting: nonnested, no-right-crossing, no-left-crossing, rightmost, leftmost, "
                 "rightmost-reversed, leftmost-reversed");

  int poly_n = 0;
  std::string poly_kind = "assoc";
  auto* poly = app.add_subcommand("poly", "a polynomial family member");
  poly->add_option("n", poly_n, "index")->required();
  poly->add_option("--kind", poly_kind, "assoc, matchings, fake-edge, identity, usual, chebyshev, chebyshev-limit");

  int upto = 0;
  std::string route = "dyck";
  auto* moments = app.add_subcommand("moments", "moment table mu_0..mu_N");
  moments->add_option("--upto", upto, "largest index")->required();
  moments->add_option("--route", route, "dyck, matchings, cf");

  int orth_max = 4;
  bool orth_paired = false;
  auto* orth = app.add_subcommand("orthogonality", "L_c(H_n H_m) table");
  orth->add_option("--max", orth_max, "largest n and m");
  orth->add_flag("--paired", orth_paired, "also sum over paired matchings");

  int lin_n = 0, lin_m = 0;
  auto* lin = app.add_subcommand("linearize", "linearization coefficients of H_N H_M");
  lin->add_option("N", lin_n)->required();
  lin->add_option("M", lin_m)->required();

  int mix_n = 0, mix_m = 0;
  auto* mix = app.add_subcommand("mixed", "H_n(x;c) H_m(x) in the associated basis");
  mix->add_option("n", mix_n)->required();
  mix->add_option("m", mix_m)->required();

  int sum_max = 10;
  std::vector<int> sizes, arrangement;
  auto* conj = app.add_subcommand("conjecture", "L_c of products against inhomogeneous matchings");
  conj->add_option("--sum-max", sum_max, "largest total block size for the sweep");
  conj->add_option("--sizes", sizes, "one block structure instead of a sweep")->delimiter(',');
  conj->add_option("--arrangement", arrangement, "block order for --sizes")->delimiter(',');

  std::string bij_kind, bij_input, bij_tags;
  int bij_edges = -1;
  bool bij_example = false;
  auto* bij = app.add_subcommand("bijection", "tableau, untableau, tailswap, untailswap, map-word, quadruples");
  bij->add_option("kind", bij_kind)->required();
  bij->add_option("input", bij_input, "matching, tableau, or map JSON");
  bij->add_option("--tags", bij_tags, "tagged edges for untailswap, e.g. \"(1,3)\"");
  bij->add_option("--edges", bij_edges, "edge count for quadruples");
  bij->add_flag("--example", bij_example, "use the worked rooted map for map-word");

  int depth = 4, order = 8;
  auto* gf = app.add_subcommand("gf", "continued-fraction truncation of the moment series");
  gf->add_option("--depth", depth)->check(CLI::PositiveNumber);
  gf->add_option("--order", order)->check(CLI::NonNegativeNumber);

  std::string level = "desk";
  auto* verify = app.add_subcommand("verify-all", "run every verification suite");
  verify->add_option("--level", level, "desk or extended");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  if (o.cap > kDefaultVertexCap)
    std::cerr << "warning: --cap " << o.cap << " exceeds " << kDefaultVertexCap
              << "; enumeration time grows factorially\n";

  try {
    if (*poly) return cmd_poly(o, poly_n, poly_kind);
    if (*moments) return cmd_moments(o, upto, route);
    if (*orth) return cmd_orthogonality(o, orth_max, orth_paired);
    if (*lin) return cmd_linearize(o, lin_n, lin_m);
    if (*mix) return cmd_mixed(o, mix_n, mix_m);
    if (*conj) return cmd_conjecture(o, sum_max, sizes, arrangement);
    if (*bij) return cmd_bijection(o, bij_kind, bij_input, bij_tags, bij_edges, bij_example);
    if (*gf) return cmd_gf(o, depth, order);
    if (*verify) return cmd_verify_all(level);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
