#pragma once

// Classical (t = 1, v = 1) data for finite type, computed from the Cartan
// matrix alone: positive roots, Kostant partition counts for dim U^-, and
// Freudenthal multiplicities for dim V(lambda).

#include "../cartan.hpp"

#include <map>
#include <set>

namespace vtc::oracle {

using RootCoords = std::vector<int>;

/// Positive roots by closing the simple roots under simple reflections.
inline std::vector<RootCoords> positive_roots(const CartanDatum& d, size_t cap = 500) {
  const int n = d.rank();
  std::set<RootCoords> seen;
  std::vector<RootCoords> todo;
  for (int i = 0; i < n; ++i) {
    RootCoords a(n, 0);
    a[i] = 1;
    seen.insert(a);
    todo.push_back(a);
  }
  while (!todo.empty()) {
    const RootCoords b = todo.back();
    todo.pop_back();
    for (int i = 0; i < n; ++i) {
      int h = 0;
      for (int j = 0; j < n; ++j) h += d.cartan(i, j) * b[j];
      RootCoords c = b;
      c[i] -= h;
      bool pos = true;
      for (int x : c) pos = pos && x >= 0;
      if (!pos || seen.count(c)) continue;
      if (seen.size() >= cap) throw std::invalid_argument("positive_roots: not of finite type");
      seen.insert(c);
      todo.push_back(c);
    }
  }
  std::vector<RootCoords> out(seen.begin(), seen.end());
  return out;
}

/// Number of ways to write n as a sum of positive roots (= dim U^-_{-n}).
inline size_t kostant(const std::vector<RootCoords>& roots, const std::vector<int>& n) {
  for (int x : n)
    if (x < 0) return 0;
  // Points of the box [0, n] in mixed radix; lexicographic order extends the
  // componentwise order, so one pass per root is the usual coin change.
  const size_t r = n.size();
  size_t total = 1;
  for (int x : n) total *= static_cast<size_t>(x + 1);
  auto index = [&](const std::vector<int>& c) {
    size_t k = 0;
    for (size_t q = 0; q < r; ++q) k = k * static_cast<size_t>(n[q] + 1) + static_cast<size_t>(c[q]);
    return k;
  };
  std::vector<size_t> ways(total, 0);
  ways[0] = 1;
  for (const auto& a : roots)
    for (size_t k = 0; k < total; ++k) {
      std::vector<int> c(r);
      size_t rest = k;
      for (size_t q = r; q-- > 0;) {
        c[q] = static_cast<int>(rest % static_cast<size_t>(n[q] + 1));
        rest /= static_cast<size_t>(n[q] + 1);
      }
      bool ok = true;
      for (size_t q = 0; q < r; ++q) {
        c[q] -= a[q];
        ok = ok && c[q] >= 0;
      }
      if (ok) ways[k] += ways[index(c)];
    }
  return ways[total - 1];
}

/// Weight multiplicities of V(lambda) at lambda - sum n_j alpha_j, for all
/// contents of height <= depth.
class Freudenthal {
 public:
  Freudenthal(const CartanDatum& d, std::vector<int> lambda) : d_(d), lambda_(std::move(lambda)), roots_(positive_roots(d)) {
    const int n = d.rank();
    const auto& F = d.fundamental_in_roots();
    lam_.assign(n, Rational(0));
    rho_.assign(n, Rational(0));
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) {
        lam_[j] += F[k][j] * lambda_[k];
        rho_[j] += F[k][j];
      }
    std::vector<Rational> lr(n);
    for (int j = 0; j < n; ++j) lr[j] = lam_[j] + rho_[j];
    top_ = form(lr, lr);
  }

  size_t mult(const std::vector<int>& content) {
    for (int x : content)
      if (x < 0) return 0;
    auto it = memo_.find(content);
    if (it != memo_.end()) return it->second;
    size_t m = 0;
    bool zero = true;
    for (int x : content) zero = zero && x == 0;
    if (zero) {
      m = 1;
    } else {
      const int n = d_.rank();
      std::vector<Rational> mu(n), mr(n);
      for (int j = 0; j < n; ++j) {
        mu[j] = lam_[j] - content[j];
        mr[j] = mu[j] + rho_[j];
      }
      Rational num = 0;
      for (const auto& a : roots_)
        for (int k = 1;; ++k) {
          std::vector<int> c = content;
          bool ok = true;
          for (int j = 0; j < n; ++j) {
            c[j] -= k * a[j];
            ok = ok && c[j] >= 0;
          }
          if (!ok) break;
          const size_t mk = mult(c);
          if (mk == 0) continue;
          std::vector<Rational> w(n), av(n);
          for (int j = 0; j < n; ++j) {
            w[j] = lam_[j] - c[j];
            av[j] = a[j];
          }
          num += Rational(static_cast<long>(mk)) * form(w, av);
        }
      const Rational den = top_ - form(mr, mr);
      if (sgn(den) == 0) {
        if (sgn(num) != 0) throw std::logic_error("Freudenthal: zero denominator");
        m = 0;
      } else {
        const Rational q = 2 * num / den;
        if (q.get_den() != 1 || sgn(q) < 0) throw std::logic_error("Freudenthal: non-integral multiplicity");
        m = q.get_num().get_ui();
      }
    }
    memo_[content] = m;
    return m;
  }

 private:
  Rational form(const std::vector<Rational>& x, const std::vector<Rational>& y) const {
    Rational r = 0;
    for (int i = 0; i < d_.rank(); ++i)
      for (int j = 0; j < d_.rank(); ++j) r += x[i] * y[j] * d_.dot(i, j);
    return r;
  }

  const CartanDatum& d_;
  std::vector<int> lambda_;
  std::vector<RootCoords> roots_;
  std::vector<Rational> lam_, rho_;
  Rational top_;
  std::map<std::vector<int>, size_t> memo_;
};

}  // namespace vtc::oracle
