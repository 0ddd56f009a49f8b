#pragma once

// Highest-weight modules V(lambda) as word spans P y_lambda modulo the radical
// of the contravariant form (f_i x, y) = (x, v_i^{-1} k_i'^{-1} e_i y), and
// tensor products with the comultiplication
//   Delta(f_i) = f_i (x) 1 + k_i (x) f_i,   Delta(e_i) = e_i (x) k_i' + 1 (x) e_i.

#include "halfalg.hpp"

#include <cmath>
#include <memory>

namespace vtc {

/// [n]_{v^d} for any integer n ([-n] = -[n]).
inline Scalar signed_qint(long n, int d) { return n >= 0 ? qint(static_cast<int>(n), d) : -qint(static_cast<int>(-n), d); }

/// Adjoint scalar v_i^{-1} k_i'^{-1} on the weight top - n.
inline Scalar module_adjoint_factor(const CartanDatum& d, int i, const std::vector<int>& top, const Content& n) {
  std::vector<int> m(n.size());
  for (size_t k = 0; k < n.size(); ++k) m[k] = -n[k];
  return vpow(-d.d(i)) / d.k_scalar(i, true, top, m);
}

class HWModule : public WordSpace {
 public:
  /// depth < 0 chooses a window containing the whole module (finite type).
  HWModule(const CartanDatum& d, std::vector<int> lambda, int depth = -1) : WordSpace(d), lambda_(std::move(lambda)) {
    if (static_cast<int>(lambda_.size()) != d.rank())
      throw ValidationError({"highest weight: expected " + std::to_string(d.rank()) + " coordinates"});
    for (int c : lambda_)
      if (c < 0) throw ValidationError({"highest weight must be dominant"});
    depth_ = depth >= 0 ? depth : full_depth(d, lambda_);
  }

  /// Height of lambda - w0 lambda plus one, bounded by 2 ht(lambda) + 1.
  static int full_depth(const CartanDatum& d, const std::vector<int>& lambda) {
    const auto& fund = d.fundamental_in_roots();
    if (fund.empty()) throw ValidationError({"module depth must be given for this datum"});
    Rational h = 0;
    for (int k = 0; k < d.rank(); ++k)
      for (int j = 0; j < d.rank(); ++j) h += fund[k][j] * lambda[k];
    mpz_class f = (2 * h.get_num()) / h.get_den();
    return static_cast<int>(f.get_si()) + 1;
  }

  const std::vector<int>& lambda() const { return lambda_; }
  int depth() const override { return depth_; }
  bool is_module() const override { return true; }
  std::vector<int> top_weight() const override { return lambda_; }
  bool complete() const override {
    std::call_once(complete_once_, [&] {
      for (int h = 0; h <= depth_ && !complete_; ++h) {
        bool all_zero = true;
        for (const auto& n : contents_of_height(rank(), h))
          if (slice(n).reps.size() > 0) {
            all_zero = false;
            break;
          }
        if (all_zero) complete_ = true;
      }
    });
    return complete_;
  }

  /// e_i on f_{w0} ... f_{wl} y_lambda by commuting e_i to the right.
  std::vector<std::pair<Word, Scalar>> raise_word(int i, const Word& w) const override {
    std::vector<std::pair<Word, Scalar>> out;
    const CartanDatum& d = datum();
    for (size_t p = 0; p < w.size(); ++p) {
      if (w[p] != i) continue;
      const Content suffix = content_of(w.substr(p + 1), rank());
      std::vector<int> m(rank());
      for (int k = 0; k < rank(); ++k) m[k] = -suffix[k];
      // (k_i - k_i') / (v_i - v_i^{-1}) on the weight lambda + m.
      Scalar c = spow(static_cast<int>(d.twist(i, lambda_, m))) * signed_qint(d.hpair(i, lambda_, m), d.d(i));
      if (!c.is_zero()) out.emplace_back(w.substr(0, p) + w.substr(p + 1), c);
    }
    return out;
  }

  /// Weight lambda - sum n_i alpha_i as (dominant part, root shift).
  std::vector<int> shift_of(const Content& n) const {
    std::vector<int> m(rank());
    for (int k = 0; k < rank(); ++k) m[k] = -n[k];
    return m;
  }

 protected:
  Scalar adjoint_factor(int i, const Content& rest) const override {
    return module_adjoint_factor(datum(), i, lambda_, rest);
  }

 private:
  std::vector<int> lambda_;
  int depth_ = 0;
  mutable std::once_flag complete_once_;
  mutable bool complete_ = false;
};

/// M (x) N for complete module spaces.  The basis of a grade n is the
/// concatenation, over splits n = n1 + n2 in lexicographic order of n1, of
/// Kronecker blocks (a, b) -> a * dim N_{n2} + b.
class TensorModule : public GradedSpace {
 public:
  TensorModule(std::shared_ptr<const GradedSpace> M, std::shared_ptr<const GradedSpace> N)
      : GradedSpace(M->datum()), M_(std::move(M)), N_(std::move(N)) {
    if (!(M_->datum() == N_->datum())) throw ValidationError({"tensor factors use different data"});
    if (!M_->is_module() || !N_->is_module()) throw std::invalid_argument("tensor factors must be modules");
    if (!M_->complete() || !N_->complete()) throw DepthExceeded("tensor factors must be built completely");
    top_ = M_->top_weight();
    const auto t2 = N_->top_weight();
    for (size_t k = 0; k < top_.size(); ++k) top_[k] += t2[k];
  }

  const GradedSpace& first() const { return *M_; }
  const GradedSpace& second() const { return *N_; }

  int depth() const override { return M_->depth() + N_->depth(); }
  bool is_module() const override { return true; }
  std::vector<int> top_weight() const override { return top_; }
  bool complete() const override { return true; }

  struct Block {
    Content n1, n2;
    size_t offset, d1, d2;
  };
  /// Blocks of grade n with nonzero size.
  std::vector<Block> blocks(const Content& n) const {
    std::vector<Block> out;
    size_t off = 0;
    Content n1(n.size(), 0);
    auto rec = [&](auto&& self, size_t pos) -> void {
      if (pos == n.size()) {
        Content n2(n.size());
        for (size_t k = 0; k < n.size(); ++k) n2[k] = n[k] - n1[k];
        const size_t d1 = M_->dim(n1), d2 = N_->dim(n2);
        if (d1 * d2 > 0) {
          out.push_back({n1, n2, off, d1, d2});
          off += d1 * d2;
        }
        return;
      }
      for (int x = 0; x <= n[pos]; ++x) {
        n1[pos] = x;
        self(self, pos + 1);
      }
    };
    for (int x : n)
      if (x < 0) return out;
    rec(rec, 0);
    return out;
  }
  /// Index of (block with first grade n1, a, b) in grade n; npos if absent.
  size_t index_of(const Content& n, const Content& n1, size_t a, size_t b) const {
    for (const auto& B : blocks(n))
      if (B.n1 == n1) return B.offset + a * B.d2 + b;
    return static_cast<size_t>(-1);
  }
  /// x (x) y for x in grade n1 of the first factor and y in grade n2 of the second.
  Vec pure_tensor(const Content& n1, const Vec& x, const Content& n2, const Vec& y) const {
    Content n(n1.size());
    for (size_t k = 0; k < n.size(); ++k) n[k] = n1[k] + n2[k];
    Vec out(dim(n), Scalar(0));
    for (const auto& B : blocks(n)) {
      if (B.n1 != n1) continue;
      for (size_t a = 0; a < B.d1; ++a)
        for (size_t b = 0; b < B.d2; ++b)
          if (!x[a].is_zero() && !y[b].is_zero()) out[B.offset + a * B.d2 + b] = x[a] * y[b];
    }
    return out;
  }

 protected:
  size_t compute_dim(const Content& n) const override {
    size_t d = 0;
    for (const auto& B : blocks(n)) d += B.d1 * B.d2;
    return d;
  }
  Matrix<Scalar> compute_gram(const Content& n) const override {
    Matrix<Scalar> G(dim(n), dim(n));
    for (const auto& B : blocks(n)) {
      const Matrix<Scalar> K = kron(M_->gram(B.n1), N_->gram(B.n2));
      for (size_t r = 0; r < K.rows(); ++r)
        for (size_t c = 0; c < K.cols(); ++c) G(B.offset + r, B.offset + c) = K(r, c);
    }
    return G;
  }
  Matrix<Scalar> compute_lower(int i, const Content& n) const override {
    const Content m = plus_e(n, i);
    Matrix<Scalar> F(dim(m), dim(n));
    for (const auto& B : blocks(n)) {
      // f_i (x) 1
      const Matrix<Scalar>& F1 = M_->lower(i, B.n1);
      const size_t t1 = index_of(m, plus_e(B.n1, i), 0, 0);
      if (t1 != static_cast<size_t>(-1))
        for (size_t a = 0; a < B.d1; ++a)
          for (size_t a2 = 0; a2 < F1.rows(); ++a2)
            if (!F1(a2, a).is_zero())
              for (size_t b = 0; b < B.d2; ++b) F(t1 + a2 * B.d2 + b, B.offset + a * B.d2 + b) += F1(a2, a);
      // k_i (x) f_i
      const Matrix<Scalar>& F2 = N_->lower(i, B.n2);
      const size_t t2 = index_of(m, B.n1, 0, 0);
      if (F2.rows() > 0 && t2 != static_cast<size_t>(-1)) {
        const Scalar K = datum().k_scalar(i, false, M_->top_weight(), negated(B.n1));
        for (size_t a = 0; a < B.d1; ++a)
          for (size_t b = 0; b < B.d2; ++b)
            for (size_t b2 = 0; b2 < F2.rows(); ++b2)
              if (!F2(b2, b).is_zero()) F(t2 + a * F2.rows() + b2, B.offset + a * B.d2 + b) += K * F2(b2, b);
      }
    }
    return F;
  }
  Matrix<Scalar> compute_raise(int i, const Content& n) const override {
    const Content m = plus_e(n, i, -1);
    Matrix<Scalar> E(dim(m), dim(n));
    for (const auto& B : blocks(n)) {
      // e_i (x) k_i'
      if (B.n1[i] > 0) {
        const Matrix<Scalar>& E1 = M_->raise(i, B.n1);
        const size_t t1 = index_of(m, plus_e(B.n1, i, -1), 0, 0);
        if (E1.rows() > 0 && t1 != static_cast<size_t>(-1)) {
          const Scalar K = datum().k_scalar(i, true, N_->top_weight(), negated(B.n2));
          for (size_t a = 0; a < B.d1; ++a)
            for (size_t a2 = 0; a2 < E1.rows(); ++a2)
              if (!E1(a2, a).is_zero())
                for (size_t b = 0; b < B.d2; ++b) E(t1 + a2 * B.d2 + b, B.offset + a * B.d2 + b) += E1(a2, a) * K;
        }
      }
      // 1 (x) e_i
      if (B.n2[i] > 0) {
        const Matrix<Scalar>& E2 = N_->raise(i, B.n2);
        const size_t t2 = index_of(m, B.n1, 0, 0);
        if (E2.rows() > 0 && t2 != static_cast<size_t>(-1))
          for (size_t a = 0; a < B.d1; ++a)
            for (size_t b = 0; b < B.d2; ++b)
              for (size_t b2 = 0; b2 < E2.rows(); ++b2)
                if (!E2(b2, b).is_zero()) E(t2 + a * E2.rows() + b2, B.offset + a * B.d2 + b) += E2(b2, b);
      }
    }
    return E;
  }

 private:
  static std::vector<int> negated(const Content& n) {
    std::vector<int> m(n.size());
    for (size_t k = 0; k < n.size(); ++k) m[k] = -n[k];
    return m;
  }

  std::shared_ptr<const GradedSpace> M_, N_;
  std::vector<int> top_;
};

/// A weight vector of a graded space.
struct ModuleVec {
  Content grade;
  Vec coords;
};

enum class Gen { e, f, k, kprime };

/// Applies a generator (n-th divided power for e and f, n-th power for k, k').
/// Divided powers use [n]_{v_i}!.
inline ModuleVec act(const GradedSpace& M, Gen g, int i, const ModuleVec& x, int n = 1) {
  switch (g) {
    case Gen::f:
      return {plus_e(x.grade, i, n), M.lower_divided(i, x.grade, n) * x.coords};
    case Gen::e:
      if (x.grade[i] < n) return {plus_e(x.grade, i, -n), {}};
      return {plus_e(x.grade, i, -n), M.raise_divided(i, x.grade, n) * x.coords};
    case Gen::k:
    case Gen::kprime: {
      std::vector<int> m(x.grade.size());
      for (size_t k = 0; k < m.size(); ++k) m[k] = -x.grade[k];
      const Scalar s = M.datum().k_scalar(i, g == Gen::kprime, M.top_weight(), m).pow(n);
      return {x.grade, scaled(x.coords, s)};
    }
  }
  return x;
}

/// Image of P y_lambda in V(lambda).
inline Vec pi_lambda(const HWModule& V, const HalfElt& P) {
  const Content n = P.content(V.rank());
  if (V.dim(n) == 0) return {};
  return V.coords(P, n);
}

/// The maps Phi: V(lambda+mu) -> V(lambda) (x) V(mu), P y -> P (y (x) y), and
/// its adjoint Psi, per grade.
class PhiPsi {
 public:
  PhiPsi(std::shared_ptr<const HWModule> V, std::shared_ptr<const TensorModule> T) : V_(std::move(V)), T_(std::move(T)) {}

  const HWModule& source() const { return *V_; }
  const TensorModule& target() const { return *T_; }

  Matrix<Scalar> phi(const Content& n) const {
    const auto& reps = V_->slice(n).reps;
    Matrix<Scalar> P(T_->dim(n), reps.size());
    for (size_t k = 0; k < reps.size(); ++k) {
      Vec x{Scalar(1)};
      Content g(n.size(), 0);
      for (auto it = reps[k].rbegin(); it != reps[k].rend(); ++it) {
        x = T_->lower(*it, g) * x;
        g = plus_e(g, *it);
      }
      P.set_col(k, x);
    }
    return P;
  }
  /// Psi = star((G_T Phi G_V^{-1})^T), the adjoint of Phi.
  Matrix<Scalar> psi(const Content& n) const {
    if (V_->dim(n) == 0) return Matrix<Scalar>(0, T_->dim(n));
    const Matrix<Scalar> X = T_->gram(n) * phi(n) * inverse(V_->gram(n));
    return X.transpose().map([](const Scalar& s) { return star(s); });
  }

 private:
  std::shared_ptr<const HWModule> V_;
  std::shared_ptr<const TensorModule> T_;
};

}  // namespace vtc
