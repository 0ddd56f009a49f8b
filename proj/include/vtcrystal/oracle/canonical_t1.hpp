#pragma once

// A separate one-parameter model of U_v^- (t = 1): words over Q(v) modulo
// the radical of Kashiwara's form (f_i x, y) = (x, e_i' y) with
// e_i' f_j = v^{-i.j} f_j e_i' + delta_ij.  Its canonical basis is known in
// closed form for rank one (divided powers) and type A2 (Lusztig's
// monomials f_i^{(a)} f_j^{(b)} f_i^{(c)} with b >= a + c).

#include "../matrix.hpp"
#include "../scalar.hpp"
#include "lie.hpp"

#include <map>
#include <unordered_map>

namespace vtc::oracle {

struct OracleUnavailable : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using VWord = std::vector<int>;
using VElt = std::map<VWord, FracV>;

inline FracV v_pow(int a) { return FracV::monomial(Rational(1), a); }

inline FracV v_int(int n, int d) {
  FracV r(0);
  for (int k = 0; k < n; ++k) r += v_pow(d * (n - 1 - 2 * k));
  return r;
}

class OneParamHalf {
 public:
  /// sym[i][j] = i.j (even diagonal).
  explicit OneParamHalf(std::vector<std::vector<int>> sym) : B_(std::move(sym)) {}

  int rank() const { return static_cast<int>(B_.size()); }
  int d(int i) const { return B_[i][i] / 2; }
  int cartan(int i, int j) const { return 2 * B_[i][j] / B_[i][i]; }

  VElt eprime(int i, const VWord& w) const {
    VElt out;
    FracV pre(1);
    for (size_t p = 0; p < w.size(); ++p) {
      if (w[p] == i) {
        VWord u(w.begin(), w.begin() + static_cast<long>(p));
        u.insert(u.end(), w.begin() + static_cast<long>(p) + 1, w.end());
        out[u] += pre;
      }
      pre *= v_pow(-B_[i][w[p]]);
    }
    return out;
  }

  FracV form(const VWord& a, const VWord& b) {
    if (a.size() != b.size()) return FracV(0);
    if (a.empty()) return FracV(1);
    const auto key = std::make_pair(a, b);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    const VWord rest(a.begin() + 1, a.end());
    FracV r(0);
    for (const auto& [u, c] : eprime(a[0], b)) r += c * form(rest, u);
    memo_[key] = r;
    return r;
  }
  FracV form(const VElt& x, const VElt& y) {
    FracV r(0);
    for (const auto& [a, ca] : x)
      for (const auto& [b, cb] : y) r += ca * cb * form(a, b);
    return r;
  }

  struct Grade {
    std::vector<VWord> reps;
    Matrix<FracV> Ginv;
  };
  const Grade& grade(const std::vector<int>& n) {
    auto it = grades_.find(n);
    if (it != grades_.end()) return it->second;
    VWord w;
    for (int i = 0; i < rank(); ++i)
      for (int k = 0; k < n[i]; ++k) w.push_back(i);
    std::vector<VWord> words;
    do words.push_back(w);
    while (std::next_permutation(w.begin(), w.end()));
    Grade g;
    IndependenceTracker<FracV> tr(words.size());
    for (const auto& a : words) {
      std::vector<FracV> col;
      for (const auto& b : words) col.push_back(form(a, b));
      if (tr.add(col)) g.reps.push_back(a);
    }
    Matrix<FracV> G(g.reps.size(), g.reps.size());
    for (size_t k = 0; k < g.reps.size(); ++k)
      for (size_t l = 0; l < g.reps.size(); ++l) G(k, l) = form(g.reps[k], g.reps[l]);
    g.Ginv = g.reps.empty() ? G : inverse(G);
    return grades_.emplace(n, std::move(g)).first->second;
  }
  size_t dim(const std::vector<int>& n) { return grade(n).reps.size(); }

  std::vector<FracV> coords(const VElt& x, const std::vector<int>& n) {
    const Grade& g = grade(n);
    std::vector<FracV> r;
    for (const auto& w : g.reps) r.push_back(form(VElt{{w, FracV(1)}}, x));
    return g.Ginv * r;
  }

  VElt product(const VElt& x, const VElt& y) const {
    VElt out;
    for (const auto& [a, ca] : x)
      for (const auto& [b, cb] : y) {
        VWord w = a;
        w.insert(w.end(), b.begin(), b.end());
        out[w] += ca * cb;
      }
    return out;
  }
  VElt divided(int i, int n) const {
    FracV f(1);
    for (int k = 2; k <= n; ++k) f *= v_int(k, d(i));
    return VElt{{VWord(static_cast<size_t>(n), i), f.inverse()}};
  }

  /// Canonical basis of grade n, as elements.
  std::vector<VElt> canonical(const std::vector<int>& n) {
    std::vector<VElt> out;
    if (rank() == 1) {
      out.push_back(divided(0, n[0]));
      return out;
    }
    if (rank() == 2 && cartan(0, 1) == -1 && cartan(1, 0) == -1) {
      std::vector<std::vector<FracV>> seen;
      for (int i = 0; i < 2; ++i) {
        const int j = 1 - i;
        for (int a = 0; a <= n[i]; ++a) {
          const int c = n[i] - a, b = n[j];
          if (b < a + c) continue;
          VElt x = product(product(divided(i, a), divided(j, b)), divided(i, c));
          auto cx = coords(x, n);
          if (std::find(seen.begin(), seen.end(), cx) != seen.end()) continue;
          seen.push_back(cx);
          out.push_back(std::move(x));
        }
      }
      if (out.size() != dim(n)) throw std::logic_error("A2 canonical monomials do not match the dimension");
      return out;
    }
    throw OracleUnavailable("one-parameter canonical basis is only tabulated for rank 1 and type A2");
  }

 private:
  std::vector<std::vector<int>> B_;
  std::map<std::pair<VWord, VWord>, FracV> memo_;
  std::map<std::vector<int>, Grade> grades_;
};

}  // namespace vtc::oracle
