#pragma once

// Exact sparse polynomials in two variables x and c over the rationals.

#include <compare>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hermite {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Pair of exponents (x-degree, c-degree) identifying a monomial x^xd c^cd.
struct Exponent {
  int xd = 0;
  int cd = 0;
  auto operator<=>(const Exponent&) const = default;
};

/// Sparse polynomial in x and c. Zero coefficients are never stored, so two
/// polynomials are equal exactly when their term maps are equal.
class Poly {
 public:
  using Terms = std::map<Exponent, Rational>;

  Poly() = default;
  Poly(long long constant) { add_term({0, 0}, Rational(constant)); }
  explicit Poly(const Rational& constant) { add_term({0, 0}, constant); }

  static Poly monomial(const Rational& coef, int xd, int cd) {
    if (xd < 0 || cd < 0) throw std::domain_error("Poly::monomial: negative exponent");
    Poly p;
    p.add_term({xd, cd}, coef);
    return p;
  }
  static Poly x(int power = 1) { return monomial(1, power, 0); }
  static Poly c(int power = 1) { return monomial(1, 0, power); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Rational coefficient(int xd, int cd) const {
    auto it = terms_.find({xd, cd});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  /// Coefficient of x^k as a polynomial in c alone.
  Poly coefficient_of_x(int k) const {
    Poly out;
    for (const auto& [e, v] : terms_)
      if (e.xd == k) out.terms_.emplace(Exponent{0, e.cd}, v);
    return out;
  }

  int degree_x() const {
    int d = -1;
    for (const auto& [e, v] : terms_) d = std::max(d, e.xd);
    return d;
  }
  int degree_c() const {
    int d = -1;
    for (const auto& [e, v] : terms_) d = std::max(d, e.cd);
    return d;
  }
  bool is_constant_in_x() const { return degree_x() <= 0; }

  bool has_nonnegative_integer_coefficients() const {
    for (const auto& [e, v] : terms_) {
      if (v < 0 || denominator(v) != 1) return false;
    }
    return true;
  }

  Poly& operator+=(const Poly& o) {
    for (const auto& [e, v] : o.terms_) add_term(e, v);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    for (const auto& [e, v] : o.terms_) add_term(e, -v);
    return *this;
  }
  Poly& operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
  }
  Poly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, v] : terms_) v *= s;
    return *this;
  }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& [e, v] : a.terms_) v = -v;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, va] : a.terms_)
      for (const auto& [eb, vb] : b.terms_)
        out.add_term({ea.xd + eb.xd, ea.cd + eb.cd}, va * vb);
    return out;
  }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator*(Poly a, long long s) { return a *= Rational(s); }
  friend Poly operator*(long long s, Poly a) { return a *= Rational(s); }
  friend bool operator==(const Poly&, const Poly&) = default;

  Poly pow(int k) const {
    if (k < 0) throw std::domain_error("Poly::pow: negative exponent");
    Poly out(1);
    for (int i = 0; i < k; ++i) out *= *this;
    return out;
  }

  Rational eval(const Rational& x_val, const Rational& c_val) const {
    Rational sum = 0;
    for (const auto& [e, v] : terms_) sum += v * ipow(x_val, e.xd) * ipow(c_val, e.cd);
    return sum;
  }

  /// Substitutes c -> c + delta, expanding each c^k binomially.
  Poly shift_c(const Rational& delta) const {
    Poly out;
    for (const auto& [e, v] : terms_) {
      Integer binom = 1;
      for (int i = 0; i <= e.cd; ++i) {
        // binom = C(cd, i)
        out.add_term({e.xd, e.cd - i}, v * Rational(binom) * ipow(delta, i));
        binom = binom * (e.cd - i) / (i + 1);
      }
    }
    return out;
  }

  /// Substitutes c -> value, leaving a polynomial in x.
  Poly substitute_c(const Rational& value) const {
    Poly out;
    for (const auto& [e, v] : terms_) out.add_term({e.xd, 0}, v * ipow(value, e.cd));
    return out;
  }

  /// Human-readable form, highest terms first: "x^2 - c", "5c^3 + 7c^2 + 3c".
  std::string to_string() const;

 private:
  static Rational ipow(const Rational& base, int k) {
    Rational r = 1;
    for (int i = 0; i < k; ++i) r *= base;
    return r;
  }

  void add_term(Exponent e, const Rational& v) {
    if (v == 0) return;
    auto [it, inserted] = terms_.emplace(e, v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Terms terms_;
};

inline std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, v] = *it;
    Rational mag = v < 0 ? Rational(-v) : v;
    if (first) {
      if (v < 0) os << "-";
    } else {
      os << (v < 0 ? " - " : " + ");
    }
    first = false;
    bool bare = e.xd == 0 && e.cd == 0;
    if (mag != 1 || bare) {
      if (denominator(mag) != 1)
        os << "(" << mag << ")";
      else
        os << mag;
    }
    if (e.xd > 0) os << "x" << (e.xd > 1 ? "^" + std::to_string(e.xd) : "");
    if (e.cd > 0) os << "c" << (e.cd > 1 ? "^" + std::to_string(e.cd) : "");
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

/// base (base+1) ... (base+k-1); the empty product for k = 0.
inline Poly rising_factorial(const Poly& base, int k) {
  if (k < 0) throw std::domain_error("rising_factorial: negative length");
  Poly out(1);
  for (int i = 0; i < k; ++i) out *= base + Poly(i);
  return out;
}

/// top (top-1) ... (top-k+1) / k!
inline Poly binomial_poly(const Poly& top, int k) {
  if (k < 0) throw std::domain_error("binomial_poly: negative k");
  Poly out(1);
  Integer fact = 1;
  for (int i = 0; i < k; ++i) {
    out *= top - Poly(i);
    fact *= i + 1;
  }
  return out * Rational(Integer(1), fact);
}

inline Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

/// Integer rising factorial (a)_k.
inline Integer rising(long long a, int k) {
  Integer r = 1;
  for (int i = 0; i < k; ++i) r *= Integer(a + i);
  return r;
}

/// Accumulates signed monomials +-x^xd c^cd with machine-integer counts.
/// Enumerators use it so that millions of objects never touch rational
/// arithmetic; to_poly() converts once at the end.
class MonomialTally {
 public:
  void add(int sign, int xd, int cd) { counts_[{xd, cd}] += sign; }
  void add(const MonomialTally& o) {
    for (const auto& [e, n] : o.counts_) counts_[e] += n;
  }
  Poly to_poly() const {
    Poly out;
    for (const auto& [e, n] : counts_)
      if (n != 0) out += Poly::monomial(Rational(n), e.xd, e.cd);
    return out;
  }

 private:
  std::map<Exponent, std::int64_t> counts_;
};

}  // namespace hermite
