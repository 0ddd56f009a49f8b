#pragma once

// Dense univariate polynomials over an exact field, and reduced fractions of
// them with a separate power of the variable pulled out.
//
// The same two templates give both layers of the scalar tower:
//   RationalFunction<Rational>  ~ Q(s)            (s = t^{1/D})
//   RationalFunction<Q(s)>      ~ Q(s)(v)
// Canonical form of a RationalFunction: x = var^shift * num / den with
// num(0) != 0, den(0) != 0, den monic and gcd(num, den) = 1, so that equal
// values have identical representations.

#include <gmpxx.h>

#include <algorithm>
#include <cassert>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

namespace vtc {

using Rational = mpq_class;

/// Thrown for division by zero anywhere in the scalar tower.
struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

namespace detail {

// Field operations shared by both levels of the tower.
template <class F>
bool is_zero(const F& x) {
  if constexpr (std::is_same_v<F, Rational>) return sgn(x) == 0;
  else return x.is_zero();
}
template <class F>
bool is_one(const F& x) {
  if constexpr (std::is_same_v<F, Rational>) return x == 1;
  else return x.is_one();
}
template <class F>
int compare(const F& a, const F& b) {
  if constexpr (std::is_same_v<F, Rational>) {
    int c = cmp(a, b);
    return c < 0 ? -1 : (c > 0 ? 1 : 0);
  } else {
    return compare_values(a, b);
  }
}

template <class F>
struct is_fraction_field : std::false_type {};

// Arithmetic modulo the Mersenne prime 2^61 - 1, used for exact coprimality
// shortcuts: if images under a ring map are coprime and the leading
// coefficients survive, the originals are coprime.
namespace modp {
using u64 = std::uint64_t;
inline constexpr u64 P = (u64(1) << 61) - 1;
inline u64 mul(u64 a, u64 b) {
  unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  u64 lo = static_cast<u64>(r & P), hi = static_cast<u64>(r >> 61);
  u64 x = lo + hi;
  return x >= P ? x - P : x;
}
inline u64 add(u64 a, u64 b) {
  u64 x = a + b;
  return x >= P ? x - P : x;
}
inline u64 sub(u64 a, u64 b) { return a >= b ? a - b : a + P - b; }
inline u64 pow(u64 a, u64 e) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}
inline u64 inv(u64 a) { return pow(a, P - 2); }
// Returns false when the denominator vanishes mod P.
inline bool reduce(const Rational& q, u64& out) {
  u64 d = mpz_fdiv_ui(q.get_den_mpz_t(), P);
  if (d == 0) return false;
  u64 n = mpz_fdiv_ui(q.get_num_mpz_t(), P);
  out = mul(n, inv(d));
  return true;
}
// Degree of gcd in F_P[x] of two polynomials with nonzero leading terms.
inline int gcd_degree(std::vector<u64> a, std::vector<u64> b) {
  auto trim = [](std::vector<u64>& x) {
    while (!x.empty() && x.back() == 0) x.pop_back();
  };
  trim(a);
  trim(b);
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    const u64 il = inv(b.back());
    while (a.size() >= b.size()) {
      const u64 f = mul(a.back(), il);
      const size_t sh = a.size() - b.size();
      for (size_t k = 0; k < b.size(); ++k) a[sh + k] = sub(a[sh + k], mul(f, b[k]));
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}
}  // namespace modp

}  // namespace detail

template <class F>
class Poly;
template <class F>
class RationalFunction;

namespace detail {
template <class F>
struct is_fraction_field<RationalFunction<F>> : std::true_type {};
template <class F>
Poly<RationalFunction<F>> prs_gcd(const Poly<RationalFunction<F>>& a, const Poly<RationalFunction<F>>& b);
template <class F>
bool images_coprime(const Poly<F>& a, const Poly<F>& b);
Poly<Rational> integer_prs_gcd(const Poly<Rational>& a, const Poly<Rational>& b);
}  // namespace detail

template <class F>
class Poly {
 public:
  Poly() = default;
  explicit Poly(F c) {
    if (!detail::is_zero(c)) c_.push_back(std::move(c));
  }
  explicit Poly(std::vector<F> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly monomial(F c, int k) {
    Poly p;
    if (detail::is_zero(c)) return p;
    p.c_.assign(static_cast<size_t>(k) + 1, F(0));
    p.c_[static_cast<size_t>(k)] = std::move(c);
    return p;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && detail::is_one(c_[0]); }
  const F& lead() const { return c_.back(); }
  const std::vector<F>& coeffs() const { return c_; }
  F coeff(int k) const { return (k >= 0 && k <= degree()) ? c_[static_cast<size_t>(k)] : F(0); }

  /// Largest k with var^k dividing this polynomial (0 for the zero polynomial).
  int valuation() const {
    for (size_t k = 0; k < c_.size(); ++k)
      if (!detail::is_zero(c_[k])) return static_cast<int>(k);
    return 0;
  }
  Poly shift_down(int k) const {
    if (k <= 0) return *this;
    Poly p;
    p.c_.assign(c_.begin() + k, c_.end());
    return p;
  }
  Poly shift_up(int k) const {
    if (k <= 0 || is_zero()) return *this;
    Poly p;
    p.c_.assign(static_cast<size_t>(k), F(0));
    p.c_.insert(p.c_.end(), c_.begin(), c_.end());
    return p;
  }
  /// x^deg * p(1/x).
  Poly reversed() const {
    Poly p;
    p.c_.assign(c_.rbegin(), c_.rend());
    p.trim();
    return p;
  }

  Poly operator-() const {
    Poly p = *this;
    for (auto& x : p.c_) x = -x;
    return p;
  }
  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), F(0));
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly{};
    std::vector<F> r(a.c_.size() + b.c_.size() - 1, F(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) {
        if (detail::is_zero(b.c_[j])) continue;
        r[i + j] += a.c_[i] * b.c_[j];
      }
    }
    return Poly(std::move(r));
  }
  Poly scaled(const F& s) const {
    if (detail::is_zero(s)) return Poly{};
    Poly p = *this;
    for (auto& x : p.c_) x *= s;
    return p;
  }

  /// Euclidean division; b must be nonzero.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero{};
    if (a.degree() < b.degree()) return {Poly{}, a};
    std::vector<F> rem = a.c_;
    std::vector<F> q(static_cast<size_t>(a.degree() - b.degree() + 1), F(0));
    const F inv_lead = F(1) / b.lead();
    const bool monic = detail::is_one(b.lead());
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
      const size_t top = static_cast<size_t>(k + b.degree());
      if (detail::is_zero(rem[top])) continue;
      F f = monic ? rem[top] : F(rem[top] * inv_lead);
      for (size_t j = 0; j < b.c_.size(); ++j) {
        if (detail::is_zero(b.c_[j])) continue;
        rem[static_cast<size_t>(k) + j] -= f * b.c_[j];
      }
      q[static_cast<size_t>(k)] = std::move(f);
    }
    return {Poly(std::move(q)), Poly(std::move(rem))};
  }

  Poly monic() const {
    if (is_zero() || detail::is_one(lead())) return *this;
    return scaled(F(1) / lead());
  }

  /// Monic gcd (zero only when both inputs are zero).
  static Poly gcd(Poly a, Poly b) {
    if (!a.is_constant() && !b.is_constant()) {
      if (detail::images_coprime(a, b)) return Poly(F(1));
      if constexpr (detail::is_fraction_field<F>::value) return detail::prs_gcd(a, b);
      if constexpr (std::is_same_v<F, Rational>) return detail::integer_prs_gcd(a, b);
    }
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
      if (b.degree() == 0) return Poly(F(1));
      Poly r = divmod(a, b).second;
      a = std::move(b);
      b = r.monic();
    }
    return a.monic();
  }

  template <class G>
  G evaluate(const G& x) const {
    G acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + G(*it);
    return acc;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  /// Total order used for canonical sorting; not an algebraic order.
  friend int compare_values(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size() ? -1 : 1;
    for (size_t k = a.c_.size(); k-- > 0;) {
      int c = detail::compare(a.c_[k], b.c_[k]);
      if (c != 0) return c;
    }
    return 0;
  }

  size_t term_count() const {
    size_t n = 0;
    for (const auto& x : c_) n += detail::is_zero(x) ? 0 : 1;
    return n;
  }

 private:
  void trim() {
    while (!c_.empty() && detail::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<F> c_;
};

/// var^shift * num / den in canonical form over the field F.
template <class F>
class RationalFunction {
 public:
  using Coef = F;
  using P = Poly<F>;

  RationalFunction() : den_(F(1)) {}
  RationalFunction(const F& c) : num_(c), den_(F(1)) {}  // NOLINT: implicit embedding of the field
  RationalFunction(long c) : RationalFunction(F(c)) {}  // NOLINT
  RationalFunction(int c) : RationalFunction(F(c)) {}   // NOLINT

  static RationalFunction monomial(const F& c, int k) {
    RationalFunction r(c);
    if (!r.is_zero()) r.shift_ = k;
    return r;
  }
  static RationalFunction variable() { return monomial(F(1), 1); }
  /// Builds var^shift * num / den and reduces it.
  static RationalFunction make(int shift, P num, P den) {
    RationalFunction r;
    r.assign(shift, std::move(num), std::move(den));
    return r;
  }
  /// Laurent polynomial sum_k coeffs[k] var^(k + low).
  static RationalFunction laurent(int low, std::vector<F> coeffs) {
    return make(low, P(std::move(coeffs)), P(F(1)));
  }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return shift_ == 0 && num_.is_one() && den_.is_one(); }
  /// True when the denominator is 1, i.e. a Laurent polynomial.
  bool is_laurent() const { return den_.is_one(); }
  bool is_constant() const { return is_zero() || (shift_ == 0 && num_.degree() == 0 && den_.is_one()); }
  bool is_monomial() const { return is_zero() || (num_.degree() == 0 && den_.is_one()); }

  int shift() const { return shift_; }
  const P& num() const { return num_; }
  const P& den() const { return den_; }

  /// Order of vanishing at var = 0 (negative for a pole). Zero has valuation 0 by convention.
  int valuation() const { return shift_; }
  /// Order of vanishing at var = infinity, i.e. -(degree of the leading term).
  int valuation_at_infinity() const { return is_zero() ? 0 : -(shift_ + num_.degree() - den_.degree()); }

  F value_at_zero() const {
    if (is_zero() || shift_ > 0) return F(0);
    if (shift_ < 0) throw std::domain_error("pole at zero");
    return F(num_.coeff(0) / den_.coeff(0));
  }
  /// Coefficient of the lowest-order term (num(0)/den(0)); zero for zero.
  F leading_low_coefficient() const {
    if (is_zero()) return F(0);
    return F(num_.coeff(0) / den_.coeff(0));
  }

  /// Substitutes var -> 1/var.
  RationalFunction reciprocal_variable() const {
    if (is_zero()) return *this;
    return make(-shift_ - num_.degree() + den_.degree(), num_.reversed(), den_.reversed());
  }

  template <class Fn>
  RationalFunction map_coefficients(Fn&& fn) const {
    if (is_zero()) return *this;
    return make(shift_, map_poly(num_, fn), map_poly(den_, fn));
  }

  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const int s = std::min(a.shift_, b.shift_);
    P an = a.num_.shift_up(a.shift_ - s);
    P bn = b.num_.shift_up(b.shift_ - s);
    if (a.den_.is_one() && b.den_.is_one()) return make(s, an + bn, P(F(1)));
    if (a.den_ == b.den_) return make(s, an + bn, a.den_);
    P g = (a.den_.is_one() || b.den_.is_one()) ? P(F(1)) : P::gcd(a.den_, b.den_);
    if (g.is_one()) return make(s, an * b.den_ + bn * a.den_, a.den_ * b.den_);
    P ad = P::divmod(a.den_, g).first;
    P bd = P::divmod(b.den_, g).first;
    return make(s, an * bd + bn * ad, ad * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction{};
    if (a.den_.is_one() && b.den_.is_one()) {
      RationalFunction r;
      r.shift_ = a.shift_ + b.shift_;
      r.num_ = a.num_ * b.num_;
      r.den_ = P(F(1));
      return r;
    }
    // Cross-cancel before multiplying to keep degrees small.
    P g1 = (a.num_.is_constant() || b.den_.is_constant()) ? P(F(1)) : P::gcd(a.num_, b.den_);
    P g2 = (b.num_.is_constant() || a.den_.is_constant()) ? P(F(1)) : P::gcd(b.num_, a.den_);
    P an = g1.is_one() ? a.num_ : P::divmod(a.num_, g1).first;
    P bd = g1.is_one() ? b.den_ : P::divmod(b.den_, g1).first;
    P bn = g2.is_one() ? b.num_ : P::divmod(b.num_, g2).first;
    P ad = g2.is_one() ? a.den_ : P::divmod(a.den_, g2).first;
    RationalFunction r;
    r.assign_coprime(a.shift_ + b.shift_, an * bn, ad * bd);
    return r;
  }

  RationalFunction inverse() const {
    if (is_zero()) throw DivisionByZero{};
    RationalFunction r;
    r.assign_coprime(-shift_, den_, num_);
    return r;
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  RationalFunction pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    RationalFunction acc(F(1)), base = *this;
    while (n > 0) {
      if (n & 1) acc *= base;
      base *= base;
      n >>= 1;
    }
    return acc;
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.shift_ == b.shift_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

  friend int compare_values(const RationalFunction& a, const RationalFunction& b) {
    if (a.shift_ != b.shift_) return a.shift_ < b.shift_ ? -1 : 1;
    if (int c = compare_values(a.num_, b.num_); c != 0) return c;
    return compare_values(a.den_, b.den_);
  }

  /// Rough size measure used for pivot selection.
  size_t complexity() const { return num_.term_count() + den_.term_count(); }

 private:
  template <class Fn>
  static P map_poly(const P& p, Fn& fn) {
    std::vector<F> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.push_back(fn(x));
    return P(std::move(c));
  }

  void assign(int shift, P num, P den) {
    if (den.is_zero()) throw DivisionByZero{};
    if (num.is_zero()) {
      *this = RationalFunction{};
      return;
    }
    if (!den.is_constant() && !num.is_constant()) {
      // Cheap exact-division check first; it catches the common polynomial case.
      auto [q, r] = P::divmod(num, den);
      if (r.is_zero()) {
        num = std::move(q);
        den = P(F(1));
      } else {
        P g = P::gcd(num, den);
        if (!g.is_one()) {
          num = P::divmod(num, g).first;
          den = P::divmod(den, g).first;
        }
      }
    }
    assign_coprime(shift, std::move(num), std::move(den));
  }

  void assign_coprime(int shift, P num, P den) {
    if (den.is_zero()) throw DivisionByZero{};
    if (num.is_zero()) {
      *this = RationalFunction{};
      return;
    }
    const int vn = num.valuation();
    const int vd = den.valuation();
    num = num.shift_down(vn);
    den = den.shift_down(vd);
    if (!detail::is_one(den.lead())) {
      F inv = F(1) / den.lead();
      num = num.scaled(inv);
      den = den.scaled(inv);
    }
    shift_ = shift + vn - vd;
    num_ = std::move(num);
    den_ = std::move(den);
  }

  int shift_ = 0;
  P num_;
  P den_;
};

namespace detail {

// gcd in K(s)[v] computed as a primitive pseudo-remainder sequence in K[s][v]:
// coefficients stay polynomials in s, with contents removed at each step,
// which avoids the rational-function blowup of plain Euclid over K(s).
template <class F>
Poly<RationalFunction<F>> prs_gcd(const Poly<RationalFunction<F>>& a, const Poly<RationalFunction<F>>& b) {
  using Inner = Poly<F>;
  using RF = RationalFunction<F>;
  auto to_poly_coeffs = [](const Poly<RF>& p) {
    // Common denominator and minimal s-shift, then coefficients in K[s].
    Inner den(F(1));
    int low = 0;
    bool first = true;
    for (const auto& c : p.coeffs()) {
      if (c.is_zero()) continue;
      if (!c.den().is_one()) {
        Inner g = Inner::gcd(den, c.den());
        den = Inner::divmod(den * c.den(), g).first;
      }
      if (first || c.shift() < low) low = c.shift();
      first = false;
    }
    std::vector<Inner> out;
    for (const auto& c : p.coeffs()) {
      if (c.is_zero()) {
        out.emplace_back();
        continue;
      }
      Inner n = Inner::divmod(c.num() * den, c.den()).first;
      out.push_back(n.shift_up(c.shift() - low));
    }
    return out;
  };
  auto trim = [](std::vector<Inner>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
  };
  auto primitive = [&](std::vector<Inner>& p) {
    trim(p);
    if (p.empty()) return;
    Inner g;
    for (const auto& c : p) {
      if (c.is_zero()) continue;
      g = g.is_zero() ? c.monic() : Inner::gcd(g, c);
      if (g.is_one()) break;
    }
    if (!g.is_one())
      for (auto& c : p)
        if (!c.is_zero()) c = Inner::divmod(c, g).first;
    // Normalise the leading coefficient's leading term to 1.
    const F lc = p.back().lead();
    if (!is_one(lc))
      for (auto& c : p) c = c.scaled(F(1) / lc);
  };
  std::vector<Inner> x = to_poly_coeffs(a), y = to_poly_coeffs(b);
  primitive(x);
  primitive(y);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    if (y.size() == 1) return Poly<RF>(RF(1));
    // Pseudo-remainder of x by y.
    std::vector<Inner> r = x;
    const Inner ly = y.back();
    while (r.size() >= y.size()) {
      const Inner lr = r.back();
      const size_t sh = r.size() - y.size();
      for (auto& c : r) c = c * ly;
      for (size_t k = 0; k < y.size(); ++k) r[sh + k] -= lr * y[k];
      trim(r);
      if (r.empty()) break;
    }
    primitive(r);
    x = std::move(y);
    y = std::move(r);
  }
  std::vector<RF> c;
  for (const auto& q : x) c.push_back(RF::make(0, q, Inner(F(1))));
  return Poly<RF>(std::move(c)).monic();
}

}  // namespace detail

namespace detail {

inline bool image_of(const Rational& q, modp::u64 /*unused*/, modp::u64& out) { return modp::reduce(q, out); }

template <class F>
bool image_of(const RationalFunction<F>& c, modp::u64 s0, modp::u64& out) {
  if (c.is_zero()) {
    out = 0;
    return true;
  }
  auto eval = [&](const Poly<F>& p, modp::u64& r) {
    r = 0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
      modp::u64 x;
      if (!image_of(*it, s0 + 1, x)) return false;
      r = modp::add(modp::mul(r, s0), x);
    }
    return true;
  };
  modp::u64 n, d;
  if (!eval(c.num(), n) || !eval(c.den(), d) || d == 0) return false;
  modp::u64 sh = c.shift() >= 0 ? modp::pow(s0, static_cast<modp::u64>(c.shift()))
                                : modp::inv(modp::pow(s0, static_cast<modp::u64>(-c.shift())));
  out = modp::mul(modp::mul(n, modp::inv(d)), sh);
  return true;
}

template <class F>
bool images_coprime(const Poly<F>& a, const Poly<F>& b) {
  static constexpr modp::u64 points[] = {1000003, 7919, 104729, 15485863};
  for (modp::u64 s0 : points) {
    std::vector<modp::u64> ia, ib;
    bool ok = true;
    for (const auto& c : a.coeffs()) {
      modp::u64 x;
      if (!image_of(c, s0, x)) ok = false;
      ia.push_back(x);
    }
    for (const auto& c : b.coeffs()) {
      modp::u64 x;
      if (!image_of(c, s0, x)) ok = false;
      ib.push_back(x);
    }
    if (!ok || ia.back() == 0 || ib.back() == 0) continue;
    return modp::gcd_degree(std::move(ia), std::move(ib)) == 0;
  }
  return false;
}

// gcd over Q via a primitive pseudo-remainder sequence over Z.
inline Poly<Rational> integer_prs_gcd(const Poly<Rational>& a, const Poly<Rational>& b) {
  using Z = mpz_class;
  auto to_primitive = [](const Poly<Rational>& p) {
    Z den = 1;
    for (const auto& c : p.coeffs()) den = lcm(den, Z(c.get_den()));
    std::vector<Z> out;
    Z g = 0;
    for (const auto& c : p.coeffs()) {
      Z x = c.get_num() * (den / c.get_den());
      g = gcd(g, x);
      out.push_back(x);
    }
    if (g != 0 && g != 1)
      for (auto& x : out) x /= g;
    return out;
  };
  auto trim = [](std::vector<Z>& x) {
    while (!x.empty() && x.back() == 0) x.pop_back();
  };
  auto primitive = [&](std::vector<Z>& x) {
    trim(x);
    Z g = 0;
    for (const auto& c : x) {
      g = gcd(g, c);
      if (g == 1) return;
    }
    if (g != 0)
      for (auto& c : x) c /= g;
  };
  std::vector<Z> x = to_primitive(a), y = to_primitive(b);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    if (y.size() == 1) return Poly<Rational>(Rational(1));
    const Z ly = y.back();
    while (x.size() >= y.size()) {
      const Z lx = x.back();
      const size_t sh = x.size() - y.size();
      for (auto& c : x) c *= ly;
      for (size_t k = 0; k < y.size(); ++k) x[sh + k] -= lx * y[k];
      trim(x);
      if (x.empty()) break;
    }
    primitive(x);
    std::swap(x, y);
  }
  std::vector<Rational> c;
  for (const auto& z : x) c.emplace_back(z);
  return Poly<Rational>(std::move(c)).monic();
}

}  // namespace detail

}  // namespace vtc
