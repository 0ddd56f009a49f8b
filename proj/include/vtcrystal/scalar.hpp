#pragma once

// Scalars of Q(v, t^{1/D}).  Inner variable s = t^{1/D}, outer variable v.
// D is not stored in the value; it is supplied when printing or when a
// rational t-exponent is converted to a power of s.

#include "poly.hpp"

#include <map>
#include <mutex>
#include <ostream>
#include <string>

namespace vtc {

using FracS = RationalFunction<Rational>;  // Q(s)
using Scalar = RationalFunction<FracS>;    // Q(s)(v)
using FracV = RationalFunction<Rational>;  // Q(v), used after t = 1

struct PoleAtZero : std::domain_error {
  int valuation;
  explicit PoleAtZero(int val)
      : std::domain_error("pole at v=0 (valuation " + std::to_string(val) + ")"), valuation(val) {}
};

inline Scalar vpow(int a) { return Scalar::monomial(FracS(1), a); }
inline FracS spow_inner(int b) { return FracS::monomial(Rational(1), b); }
/// s^b = t^{b/D}.
inline Scalar spow(int b) { return Scalar(spow_inner(b)); }
/// c * v^a * s^b.
inline Scalar monomial(const Rational& c, int a, int b) {
  return Scalar::monomial(FracS::monomial(c, b), a);
}

inline Scalar bar(const Scalar& x) { return x.reciprocal_variable(); }
inline FracS star_inner(const FracS& x) { return x.reciprocal_variable(); }
inline Scalar star(const Scalar& x) {
  return x.map_coefficients([](const FracS& c) { return star_inner(c); });
}

inline bool in_A(const Scalar& x) { return x.is_zero() || x.valuation() >= 0; }
inline bool in_Abar(const Scalar& x) { return x.is_zero() || x.valuation_at_infinity() >= 0; }
inline bool in_vA(const Scalar& x) { return x.is_zero() || x.valuation() >= 1; }

/// Value at v = 0; throws PoleAtZero if x has a pole there.
inline FracS eval_v0(const Scalar& x) {
  if (x.is_zero() || x.valuation() > 0) return FracS(0);
  if (x.valuation() < 0) throw PoleAtZero(x.valuation());
  return x.leading_low_coefficient();
}

enum class Tri { no, yes, unknown };

namespace detail {

inline bool integral_laurent_s(const FracS& c) {
  if (!c.is_laurent()) return false;
  for (const auto& q : c.num().coeffs())
    if (q.get_den() != 1) return false;
  return true;
}

// Cyclotomic polynomial Phi_m over Q.
inline Poly<Rational> cyclotomic_uncached(int m, std::map<int, Poly<Rational>>& cache) {
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  Poly<Rational> p = Poly<Rational>::monomial(Rational(1), m) - Poly<Rational>(Rational(1));
  for (int d = 1; d < m; ++d)
    if (m % d == 0) p = Poly<Rational>::divmod(p, cyclotomic_uncached(d, cache)).first;
  cache.emplace(m, p);
  return p;
}

inline Poly<Rational> cyclotomic(int m) {
  static std::map<int, Poly<Rational>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  return cyclotomic_uncached(m, cache);
}

}  // namespace detail

/// Membership in A_Z: no pole at v=0, denominator a product of factors
/// (1 - v^{2n}) times a unit, numerator with coefficients in Z[s, 1/s].
/// Denominators above `degree_cap` are reported as unknown.
inline Tri in_AZ(const Scalar& x, int degree_cap = 64, bool require_A = true) {
  if (x.is_zero()) return Tri::yes;
  if (require_A && x.valuation() < 0) return Tri::no;
  // Denominator must have constant rational coefficients.
  Poly<Rational> den;
  {
    std::vector<Rational> c;
    for (const auto& q : x.den().coeffs()) {
      if (!q.is_constant()) return Tri::unknown;
      c.push_back(q.is_zero() ? Rational(0) : q.value_at_zero());
    }
    den = Poly<Rational>(std::move(c));
  }
  if (den.degree() > degree_cap) return Tri::unknown;
  // Strip cyclotomic factors Phi_m; only even-index products (1-v^{2n}) are
  // allowed in the end, which are products of Phi_m with m | 2n; any Phi_m is
  // a factor of some 1 - v^{2n}, and the quotient of such a product by the
  // cyclotomic part is then a unit, so dividing out Phi_m is sufficient.
  Poly<Rational> rest = den;
  for (int m = 1; m <= 2 * degree_cap && rest.degree() > 0; ++m) {
    const Poly<Rational> phi = detail::cyclotomic(m);
    if (phi.degree() > rest.degree()) continue;
    while (rest.degree() >= phi.degree()) {
      auto [q, r] = Poly<Rational>::divmod(rest, phi);
      if (!r.is_zero()) break;
      rest = q;
    }
  }
  if (rest.degree() > 0) return Tri::no;
  // den is monic, so the remaining constant is 1.  The denominator's product
  // of (1-v^{2n}) differs from den by an integer sign and a power of
  // cyclotomic leading coefficients (all 1), so numerator integrality over
  // Z[s^{+-1}] decides (Gauss lemma: den is primitive with integer coefficients).
  for (const auto& q : den.coeffs())
    if (q.get_den() != 1) return Tri::no;
  for (const auto& c : x.num().coeffs())
    if (!c.is_zero() && !detail::integral_laurent_s(c)) return Tri::no;
  return Tri::yes;
}

/// K_Z: same test without the condition at v = 0.
inline Tri in_KZ(const Scalar& x, int degree_cap = 64) { return in_AZ(x, degree_cap, false); }

/// True when x is a Laurent polynomial in v and s with integer coefficients.
inline bool is_integral_laurent(const Scalar& x) {
  if (!x.is_laurent()) return false;
  for (const auto& c : x.num().coeffs())
    if (!c.is_zero() && !detail::integral_laurent_s(c)) return false;
  return true;
}

/// Substitutes s = 1 (hence t = 1); throws if that creates a pole.
inline FracV substitute_t1(const Scalar& x) {
  if (x.is_zero()) return FracV(0);
  auto at1 = [](const FracS& c) -> Rational {
    if (c.is_zero()) return Rational(0);
    Rational n = c.num().evaluate(Rational(1));
    Rational d = c.den().evaluate(Rational(1));
    if (sgn(d) == 0) throw DivisionByZero{};
    return Rational(n / d);
  };
  std::vector<Rational> n, d;
  for (const auto& c : x.num().coeffs()) n.push_back(at1(c));
  for (const auto& c : x.den().coeffs()) d.push_back(at1(c));
  Poly<Rational> dp(std::move(d));
  if (dp.is_zero()) throw DivisionByZero{};
  return FracV::make(x.shift(), Poly<Rational>(std::move(n)), dp);
}

// ---------------------------------------------------------------------------
// Printing.  A value is written as a sum of terms "(c) * v^a * t^(p/q)"
// ordered by v-exponent then t-exponent; a proper fraction prints as
// "[numerator] / [denominator]".

namespace detail {

// Bivariate Laurent terms keyed by (v exponent, s exponent).
using TermMap = std::map<std::pair<int, int>, Rational>;

inline std::string format_texp(int b, int D) {
  Rational e(b, D);
  e.canonicalize();
  if (e.get_den() == 1) return "t^" + e.get_num().get_str();
  return "t^(" + e.get_num().get_str() + "/" + e.get_den().get_str() + ")";
}

inline std::string format_terms(const TermMap& terms, int D) {
  if (terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [ex, c] : terms) {
    if (!first) out += " + ";
    first = false;
    out += "(" + c.get_str() + ")";
    if (ex.first != 0) out += " * v^" + std::to_string(ex.first);
    if (ex.second != 0) out += " * " + format_texp(ex.second, D);
  }
  return out;
}

inline void add_terms(TermMap& out, int vshift, const Poly<FracS>& p, const Poly<Rational>& mult) {
  for (int k = 0; k <= p.degree(); ++k) {
    const FracS& c = p.coeffs()[static_cast<size_t>(k)];
    if (c.is_zero()) continue;
    // c * mult is a Laurent polynomial in s by choice of mult.
    Poly<Rational> n = Poly<Rational>::divmod(c.num() * mult, c.den()).first;
    for (int j = 0; j <= n.degree(); ++j) {
      const Rational& q = n.coeffs()[static_cast<size_t>(j)];
      if (sgn(q) != 0) out[{vshift + k, c.shift() + j}] += q;
    }
  }
}

}  // namespace detail

/// Canonical exact string, e.g. "(-1) * v^2 * t^(1/3)".
inline std::string to_string(const Scalar& x, int D = 1) {
  if (x.is_zero()) return "0";
  // Common s-denominator of every coefficient of numerator and denominator.
  Poly<Rational> mult(Rational(1));
  auto absorb = [&](const Poly<FracS>& p) {
    for (const auto& c : p.coeffs()) {
      if (c.is_zero() || c.den().is_one()) continue;
      Poly<Rational> g = Poly<Rational>::gcd(mult, c.den());
      mult = Poly<Rational>::divmod(mult * c.den(), g).first;
    }
  };
  absorb(x.num());
  absorb(x.den());
  detail::TermMap num, den;
  detail::add_terms(num, x.shift(), x.num(), mult);
  detail::add_terms(den, 0, x.den(), mult);
  if (den.size() == 1) {
    const auto [ex, c] = *den.begin();
    detail::TermMap folded;
    for (const auto& [e, q] : num) folded[{e.first - ex.first, e.second - ex.second}] = q / c;
    return detail::format_terms(folded, D);
  }
  return "[" + detail::format_terms(num, D) + "] / [" + detail::format_terms(den, D) + "]";
}

inline std::string to_string(const FracS& x, int D = 1) { return to_string(Scalar(x), D); }

inline std::ostream& operator<<(std::ostream& os, const Scalar& x) { return os << to_string(x); }
inline std::ostream& operator<<(std::ostream& os, const FracS& x) { return os << to_string(x); }

}  // namespace vtc
