#pragma once

// Cartan data given by an integer matrix Lambda, with the derived pairings
// <i,j> = Lambda_ij, i.j = <i,j> + <j,i>, the generalized Cartan matrix, and
// the pairings of simple roots with fundamental weights.  Fractional
// t-exponents are measured in units of 1/D.

#include "qnumbers.hpp"

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vtc {

/// Nonnegative multiplicities n_i; the U^- grade is xi = -sum n_i alpha_i.
using Content = std::vector<int>;

struct ValidationError : std::invalid_argument {
  std::vector<std::string> problems;
  explicit ValidationError(std::vector<std::string> p)
      : std::invalid_argument(join(p)), problems(std::move(p)) {}

 private:
  static std::string join(const std::vector<std::string>& p) {
    std::string s;
    for (const auto& x : p) s += (s.empty() ? "" : "; ") + x;
    return s;
  }
};

/// User-supplied pairings of fundamental weights, needed when the Cartan
/// matrix is singular: left[k][i] = D <i, Lambda_k>, right[k][i] = D <Lambda_k, i>.
struct PairingOverride {
  int denominator = 1;
  std::vector<std::vector<long>> left, right;
};

class CartanDatum {
 public:
  CartanDatum(std::vector<std::vector<int>> lambda, std::vector<std::string> labels = {},
              std::optional<PairingOverride> pairings = std::nullopt)
      : L_(std::move(lambda)), labels_(std::move(labels)) {
    validate();
    const int n = rank();
    if (labels_.empty())
      for (int i = 0; i < n; ++i) labels_.push_back(std::to_string(i + 1));
    if (static_cast<int>(labels_.size()) != n) throw ValidationError({"labels: expected " + std::to_string(n)});
    if (pairings) {
      use_override(*pairings);
    } else {
      compute_pairings();
    }
  }

  int rank() const { return static_cast<int>(L_.size()); }
  const std::vector<std::vector<int>>& lambda() const { return L_; }
  const std::vector<std::string>& labels() const { return labels_; }

  /// <i, j> = Lambda_ij.
  int ang(int i, int j) const { return L_[i][j]; }
  /// i.j = Lambda_ij + Lambda_ji.
  int dot(int i, int j) const { return L_[i][j] + L_[j][i]; }
  /// a_ij = <h_i, alpha_j> = 2 i.j / i.i.
  int cartan(int i, int j) const { return dot(i, j) / L_[i][i]; }
  /// Exponent d_i with v_i = v^{d_i}, t_i = t^{d_i}; d_i = i.i / 2.
  int d(int i) const { return L_[i][i]; }
  /// Denominator for t-exponents: scalars live in Q(v, s) with s = t^{1/D}.
  int D() const { return D_; }
  /// s-exponent of t_i.
  int sd(int i) const { return D_ * L_[i][i]; }

  /// D <i, Lambda_k> and D <Lambda_k, i>.
  long left_pairing(int k, int i) const { return left_[k][i]; }
  long right_pairing(int k, int i) const { return right_[k][i]; }
  /// Coordinates of Lambda_k in the root basis (only for invertible Cartan matrices).
  const std::vector<std::vector<Rational>>& fundamental_in_roots() const { return fund_; }

  // Weights are written mu = sum_k c_k Lambda_k + sum_j m_j alpha_j with
  // integer c (the dominant part) and integer m (a root-lattice shift).

  /// i . mu.
  long dot_weight(int i, const std::vector<int>& c, const std::vector<int>& m) const {
    long r = 0;
    if (!c.empty()) r += static_cast<long>(L_[i][i]) * c[i];
    for (int j = 0; j < rank(); ++j) r += static_cast<long>(dot(i, j)) * m[j];
    return r;
  }
  /// D (<i, mu> - <mu, i>).
  long twist(int i, const std::vector<int>& c, const std::vector<int>& m) const {
    long r = 0;
    for (int k = 0; k < static_cast<int>(c.size()); ++k) r += static_cast<long>(c[k]) * (left_[k][i] - right_[k][i]);
    for (int j = 0; j < rank(); ++j) r += static_cast<long>(D_) * m[j] * (L_[i][j] - L_[j][i]);
    return r;
  }
  /// <h_i, mu>.
  long hpair(int i, const std::vector<int>& c, const std::vector<int>& m) const {
    long r = c.empty() ? 0 : c[i];
    for (int j = 0; j < rank(); ++j) r += static_cast<long>(cartan(i, j)) * m[j];
    return r;
  }

  /// Eigenvalue of k_i (prime = false) or k_i' (prime = true) on the weight space of mu.
  Scalar k_scalar(int i, bool prime, const std::vector<int>& c, const std::vector<int>& m) const {
    const long a = dot_weight(i, c, m);
    return vpow(static_cast<int>(prime ? -a : a)) * spow(static_cast<int>(twist(i, c, m)));
  }

  /// Conjugation scalar of f_j under k_i: k_i f_j k_i^{-1} = v^{-i.j} t^{<j,i>-<i,j>} f_j.
  Scalar ad_k_on_f(int i, int j) const { return vpow(-dot(i, j)) * spow(D_ * (L_[j][i] - L_[i][j])); }

  /// Scalar v^{-i.j} t^{<i,j>-<j,i>} in the e' recursion (sign = -1) or v^{+i.j} ... for e''.
  Scalar eprime_factor(int i, int j, int sign) const {
    return vpow(sign * dot(i, j)) * spow(D_ * (L_[i][j] - L_[j][i]));
  }

  friend bool operator==(const CartanDatum& a, const CartanDatum& b) {
    return a.L_ == b.L_ && a.labels_ == b.labels_ && a.D_ == b.D_ && a.left_ == b.left_ && a.right_ == b.right_;
  }

 private:
  void validate() {
    std::vector<std::string> bad;
    const int n = rank();
    if (n == 0) bad.push_back("empty matrix");
    for (const auto& row : L_)
      if (static_cast<int>(row.size()) != n) {
        bad.push_back("matrix is not square");
        throw ValidationError(bad);
      }
    int g = 0;
    for (int i = 0; i < n; ++i) {
      if (L_[i][i] <= 0) bad.push_back("(a) Lambda_" + idx(i, i) + " must be positive");
      g = std::gcd(g, L_[i][i]);
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        if (L_[i][j] > 0) bad.push_back("(a) Lambda_" + idx(i, j) + " must be <= 0");
        if (L_[i][i] > 0) {
          const int s = L_[i][j] + L_[j][i];
          if (s % L_[i][i] != 0 || s > 0)
            bad.push_back("(b) (Lambda_" + idx(i, j) + " + Lambda_" + idx(j, i) + ") / Lambda_" + idx(i, i) +
                          " must be a nonpositive integer");
        }
      }
    if (n > 0 && g != 1) bad.push_back("(c) gcd of the diagonal entries must be 1");
    if (!bad.empty()) throw ValidationError(bad);
  }

  static std::string idx(int i, int j) { return std::to_string(i + 1) + std::to_string(j + 1); }

  void use_override(const PairingOverride& p) {
    const int n = rank();
    if (p.denominator <= 0 || static_cast<int>(p.left.size()) != n || static_cast<int>(p.right.size()) != n)
      throw ValidationError({"pairings: expected denominator > 0 and n x n left/right tables"});
    for (int k = 0; k < n; ++k)
      if (static_cast<int>(p.left[k].size()) != n || static_cast<int>(p.right[k].size()) != n)
        throw ValidationError({"pairings: expected n x n left/right tables"});
    // <i,Lambda_k> + <Lambda_k,i> = i.Lambda_k = d_i delta_ik.
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        if (p.left[k][i] + p.right[k][i] != static_cast<long>(p.denominator) * (i == k ? L_[i][i] : 0))
          throw ValidationError({"pairings: <i,Lambda_k> + <Lambda_k,i> must equal d_i delta_ik"});
    D_ = p.denominator;
    left_ = p.left;
    right_ = p.right;
  }

  void compute_pairings() {
    const int n = rank();
    // Solve A c_k = e_k over Q, A_ij = a_ij.
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) aug[i][j] = cartan(i, j);
      aug[i][n + i] = 1;
    }
    for (int c = 0; c < n; ++c) {
      int p = -1;
      for (int r = c; r < n; ++r)
        if (sgn(aug[r][c]) != 0) {
          p = r;
          break;
        }
      if (p < 0)
        throw ValidationError({"Cartan matrix is singular: supply \"pairings\" for the fundamental weights"});
      std::swap(aug[p], aug[c]);
      const Rational inv = 1 / aug[c][c];
      for (auto& x : aug[c]) x *= inv;
      for (int r = 0; r < n; ++r) {
        if (r == c || sgn(aug[r][c]) == 0) continue;
        const Rational f = aug[r][c];
        for (int j = 0; j < 2 * n; ++j) aug[r][j] -= f * aug[c][j];
      }
    }
    // Column k of the inverse holds the coordinates of Lambda_k.
    fund_.assign(n, std::vector<Rational>(n));
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) fund_[k][j] = aug[j][n + k];
    std::vector<std::vector<Rational>> lq(n, std::vector<Rational>(n)), rq = lq;
    mpz_class den = 1;
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          lq[k][i] += fund_[k][j] * L_[i][j];
          rq[k][i] += fund_[k][j] * L_[j][i];
        }
        den = lcm(den, mpz_class(lq[k][i].get_den()));
        den = lcm(den, mpz_class(rq[k][i].get_den()));
      }
    D_ = static_cast<int>(den.get_si());
    left_.assign(n, std::vector<long>(n));
    right_.assign(n, std::vector<long>(n));
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) {
        left_[k][i] = Rational(lq[k][i] * D_).get_num().get_si();
        right_[k][i] = Rational(rq[k][i] * D_).get_num().get_si();
      }
  }

  std::vector<std::vector<int>> L_;
  std::vector<std::string> labels_;
  int D_ = 1;
  std::vector<std::vector<long>> left_, right_;
  std::vector<std::vector<Rational>> fund_;
};

}  // namespace vtc
