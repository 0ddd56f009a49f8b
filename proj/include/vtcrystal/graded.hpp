#pragma once

// Weight-graded spaces with lowering operators f_i and raising operators
// (e_i on modules, e_i' on U^-), presented by matrices on finite-dimensional
// grades.  Grades are contents n (the weight is the top weight minus
// sum n_i alpha_i).  The base class derives the i-string decompositions and
// the Kashiwara operators from those matrices.

#include "matrix.hpp"
#include "words.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace vtc {

using Vec = std::vector<Scalar>;

struct DepthExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
/// A statement that must hold by the theory failed on a computed instance.
struct InvariantViolation : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline bool is_zero(const Vec& x) {
  for (const auto& c : x)
    if (!c.is_zero()) return false;
  return true;
}
inline Vec scaled(const Vec& x, const Scalar& s) {
  Vec y = x;
  for (auto& c : y) c *= s;
  return y;
}
inline Vec operator+(Vec a, const Vec& b) {
  for (size_t k = 0; k < a.size(); ++k) a[k] += b[k];
  return a;
}
inline Vec operator-(Vec a, const Vec& b) {
  for (size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}
inline Vec unit_vector(size_t d, size_t k) {
  Vec e(d, Scalar(0));
  e[k] = Scalar(1);
  return e;
}

inline std::string format_content(const Content& n) {
  std::string s = "(";
  for (size_t k = 0; k < n.size(); ++k) s += (k ? "," : "") + std::to_string(n[k]);
  return s + ")";
}

/// Adapted basis of one grade for the i-string decomposition: column c is
/// f_i^{(m)} kappa with (m, kernel index) = labels[c].
struct StringData {
  Matrix<Scalar> A, Ainv;
  std::vector<std::pair<int, size_t>> labels;
};

class GradedSpace {
 public:
  explicit GradedSpace(CartanDatum d) : datum_(std::move(d)) {}
  virtual ~GradedSpace() = default;
  GradedSpace(const GradedSpace&) = delete;
  GradedSpace& operator=(const GradedSpace&) = delete;

  const CartanDatum& datum() const { return datum_; }
  int rank() const { return datum_.rank(); }
  virtual int depth() const = 0;
  /// True when raising is e_i (modules) rather than e_i' (U^-).
  virtual bool is_module() const = 0;
  /// Dominant part of the top weight (empty for U^-).
  virtual std::vector<int> top_weight() const { return {}; }
  /// Known to vanish above some height not exceeding depth().
  virtual bool complete() const { return false; }

  /// Grade that may be queried: nonnegative content and within the window,
  /// or anywhere when the space is complete.
  bool available(const Content& n) const {
    for (int x : n)
      if (x < 0) return true;  // empty grade
    return height(n) <= depth() || complete();
  }
  void require(const Content& n) const {
    if (!available(n))
      throw DepthExceeded("grade " + format_content(n) + " exceeds depth " + std::to_string(depth()));
  }

  size_t dim(const Content& n) const {
    for (int x : n)
      if (x < 0) return 0;
    require(n);
    if (height(n) > depth()) return 0;
    return cached(dims_, key(0, n), [&] { return compute_dim(n); });
  }
  /// f_i : grade n -> grade n + e_i.
  const Matrix<Scalar>& lower(int i, const Content& n) const {
    const Content m = plus_e(n, i);
    if (dim(n) == 0 || dim(m) == 0) return zero_matrix(dim(m), dim(n));
    return cached(lower_, key(i, n), [&] { return compute_lower(i, n); });
  }
  /// e_i or e_i' : grade n -> grade n - e_i.
  const Matrix<Scalar>& raise(int i, const Content& n) const {
    const Content m = plus_e(n, i, -1);
    if (dim(n) == 0 || dim(m) == 0) return zero_matrix(dim(m), dim(n));
    return cached(raise_, key(i, n), [&] { return compute_raise(i, n); });
  }
  /// Gram matrix of the form on the grade's basis: (x, y) = star(x)^T G y.
  const Matrix<Scalar>& gram(const Content& n) const {
    return cached(gram_, key(0, n), [&] { return compute_gram(n); });
  }
  Scalar form(const Content& n, const Vec& x, const Vec& y) const {
    const auto& G = gram(n);
    Scalar r(0);
    for (size_t a = 0; a < x.size(); ++a) {
      if (x[a].is_zero()) continue;
      const Scalar sx = star(x[a]);
      for (size_t b = 0; b < y.size(); ++b)
        if (!y[b].is_zero() && !G(a, b).is_zero()) r += sx * G(a, b) * y[b];
    }
    return r;
  }

  /// f_i^{(m)} = f_i^m / [m]_{v_i}! from grade n.
  Matrix<Scalar> lower_divided(int i, const Content& n, int m) const {
    Matrix<Scalar> M = Matrix<Scalar>::identity(dim(n));
    Content g = n;
    for (int s = 0; s < m; ++s) {
      M = lower(i, g) * M;
      g = plus_e(g, i);
    }
    return M.scaled(qfact(m, datum_.d(i)).inverse());
  }
  Matrix<Scalar> raise_divided(int i, const Content& n, int m) const {
    Matrix<Scalar> M = Matrix<Scalar>::identity(dim(n));
    Content g = n;
    for (int s = 0; s < m; ++s) {
      M = raise(i, g) * M;
      g = plus_e(g, i, -1);
    }
    return M.scaled(qfact(m, datum_.d(i)).inverse());
  }

  /// Basis of the kernel of raising by i on grade g.
  const std::vector<Vec>& kernel(int i, const Content& g) const {
    return cached(kernels_, key(i, g), [&] { return vtc::kernel(raise(i, g)); });
  }

  const StringData& strings(int i, const Content& n) const {
    return cached(strings_, key(i, n), [&] { return compute_strings(i, n); });
  }

  /// Kashiwara operator f~_i : grade n -> grade n + e_i.
  const Matrix<Scalar>& tilde_f(int i, const Content& n) const {
    const Content m = plus_e(n, i);
    if (dim(n) == 0) return zero_matrix(dim(m), 0);
    return cached(tf_, key(i, n), [&] {
      const auto& S = strings(i, n);
      Matrix<Scalar> P(dim(m), dim(n));
      if (dim(m) > 0) {
        const auto& T = strings(i, m);
        for (size_t c = 0; c < S.labels.size(); ++c) {
          auto target = std::make_pair(S.labels[c].first + 1, S.labels[c].second);
          for (size_t c2 = 0; c2 < T.labels.size(); ++c2)
            if (T.labels[c2] == target) P(c2, c) = Scalar(1);
        }
        return T.A * P * S.Ainv;
      }
      return P;
    });
  }
  /// Kashiwara operator e~_i : grade n -> grade n - e_i.
  const Matrix<Scalar>& tilde_e(int i, const Content& n) const {
    const Content m = plus_e(n, i, -1);
    if (dim(n) == 0 || dim(m) == 0) return zero_matrix(dim(m), dim(n));
    return cached(te_, key(i, n), [&] {
      const auto& S = strings(i, n);
      const auto& U = strings(i, m);
      Matrix<Scalar> P(dim(m), dim(n));
      for (size_t c = 0; c < S.labels.size(); ++c) {
        if (S.labels[c].first == 0) continue;
        auto target = std::make_pair(S.labels[c].first - 1, S.labels[c].second);
        bool found = false;
        for (size_t c2 = 0; c2 < U.labels.size(); ++c2)
          if (U.labels[c2] == target) {
            P(c2, c) = Scalar(1);
            found = true;
          }
        if (!found) throw InvariantViolation("i-string label missing below " + format_content(n));
      }
      return U.A * P * S.Ainv;
    });
  }

  /// i-string decomposition x = sum_m f_i^{(m)} y_m; entry m is y_m at grade
  /// n - m e_i, killed by raising.
  std::vector<Vec> components(int i, const Content& n, const Vec& x) const {
    const auto& S = strings(i, n);
    const Vec c = S.Ainv * x;
    std::vector<Vec> out;
    for (int m = 0; m <= n[i]; ++m) out.emplace_back(dim(plus_e(n, i, -m)), Scalar(0));
    for (size_t k = 0; k < c.size(); ++k) {
      if (c[k].is_zero()) continue;
      const auto [m, kidx] = S.labels[k];
      out[m] = out[m] + scaled(kernel(i, plus_e(n, i, -m))[kidx], c[k]);
    }
    return out;
  }

  /// All contents of height h with a nonzero grade.
  std::vector<Content> grades_of_height(int h) const {
    std::vector<Content> out;
    for (const auto& n : contents_of_height(rank(), h))
      if (dim(n) > 0) out.push_back(n);
    return out;
  }

 protected:
  virtual size_t compute_dim(const Content& n) const = 0;
  virtual Matrix<Scalar> compute_lower(int i, const Content& n) const = 0;
  virtual Matrix<Scalar> compute_raise(int i, const Content& n) const = 0;
  virtual Matrix<Scalar> compute_gram(const Content& n) const = 0;

  using Key = std::pair<int, Content>;
  static Key key(int i, const Content& n) { return {i, n}; }

  // Compute outside the lock; the first finished value wins.  Entries are
  // never erased, so references stay valid.
  template <class T, class Fn>
  const T& cached(std::map<Key, T>& cache, const Key& k, Fn&& fn) const {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = cache.find(k);
      if (it != cache.end()) return it->second;
    }
    T value = fn();
    std::lock_guard<std::mutex> lock(mu_);
    return cache.emplace(k, std::move(value)).first->second;
  }

  const Matrix<Scalar>& zero_matrix(size_t r, size_t c) const {
    std::lock_guard<std::mutex> lock(mu_);
    return zeros_.try_emplace({r, c}, r, c).first->second;
  }

 private:
  StringData compute_strings(int i, const Content& n) const {
    StringData S;
    const size_t d = dim(n);
    std::vector<Vec> cols;
    for (int m = 0; m <= n[i]; ++m) {
      const Content g = plus_e(n, i, -m);
      if (dim(g) == 0) continue;
      const auto& K = kernel(i, g);
      if (K.empty()) continue;
      const Matrix<Scalar> F = lower_divided(i, g, m);
      for (size_t k = 0; k < K.size(); ++k) {
        Vec col = F * K[k];
        if (is_zero(col)) continue;
        cols.push_back(std::move(col));
        S.labels.emplace_back(m, k);
      }
    }
    if (cols.size() != d)
      throw InvariantViolation("i-string decomposition of grade " + format_content(n) + " for i=" +
                               std::to_string(i + 1) + " has " + std::to_string(cols.size()) +
                               " components, expected " + std::to_string(d));
    S.A = Matrix<Scalar>::from_columns(d, cols);
    try {
      S.Ainv = inverse(S.A);
    } catch (const SingularMatrix&) {
      throw InvariantViolation("i-string components are dependent in grade " + format_content(n));
    }
    return S;
  }

  CartanDatum datum_;
  mutable std::mutex mu_;
  mutable std::map<Key, size_t> dims_;
  mutable std::map<Key, Matrix<Scalar>> lower_, raise_, gram_, tf_, te_;
  mutable std::map<Key, std::vector<Vec>> kernels_;
  mutable std::map<Key, StringData> strings_;
  mutable std::map<std::pair<size_t, size_t>, Matrix<Scalar>> zeros_;
};

/// A graded space spanned by words acting on a top vector, modulo the radical
/// of a form computed by the recursion (f_i x, y) = (x, c_i(x) raise_i y).
/// Each grade keeps the words chosen greedily (lexicographic) whose Gram
/// columns are independent.
class WordSpace : public GradedSpace {
 public:
  using GradedSpace::GradedSpace;

  struct Slice {
    std::vector<Word> words;  // all words of the content
    std::vector<Word> reps;
    Matrix<Scalar> G, Ginv;   // Gram matrix on reps and its inverse
    size_t word_rank = 0;     // rank of the Gram matrix on all words
  };

  /// Raising operator applied to a word (as an element of the space).
  virtual std::vector<std::pair<Word, Scalar>> raise_word(int i, const Word& w) const = 0;

  /// Form on words.
  Scalar word_form(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return Scalar(0);
    if (a.empty()) return Scalar(1);
    if (content_of(a, rank()) != content_of(b, rank())) return Scalar(0);
    std::string k = a;
    k.push_back('\x7f');
    k += b;
    {
      std::lock_guard<std::mutex> lock(form_mu_);
      auto it = form_memo_.find(k);
      if (it != form_memo_.end()) return it->second;
    }
    const int i = a[0];
    const Word rest = a.substr(1);
    Scalar r(0);
    for (const auto& [w, c] : raise_word(i, b)) {
      Scalar x = word_form(rest, w);
      if (!x.is_zero()) r += c * x;
    }
    if (!r.is_zero()) r *= adjoint_factor(i, content_of(rest, rank()));
    std::lock_guard<std::mutex> lock(form_mu_);
    form_memo_.emplace(std::move(k), r);
    return r;
  }

  const Slice& slice(const Content& n) const {
    require(n);
    {
      std::lock_guard<std::mutex> lock(slice_mu_);
      auto it = slices_.find(n);
      if (it != slices_.end()) return it->second;
    }
    Slice s = compute_slice(n);
    std::lock_guard<std::mutex> lock(slice_mu_);
    return slices_.emplace(n, std::move(s)).first->second;
  }

  /// Coordinates of a word in the representative basis of its grade.
  Vec coords_of_word(const Word& w) const {
    const Content n = content_of(w, rank());
    const Slice& s = slice(n);
    if (s.reps.empty()) return {};
    Vec p(s.reps.size());
    for (size_t k = 0; k < s.reps.size(); ++k) p[k] = word_form(s.reps[k], w);
    return s.Ginv * p;
  }
  /// Coordinates of a homogeneous element of the given grade.
  Vec coords(const HalfElt& x, const Content& n) const {
    Vec c(dim(n), Scalar(0));
    for (const auto& [w, a] : x.terms()) {
      if (content_of(w, rank()) != n) throw std::invalid_argument("element is not of grade " + format_content(n));
      c = c + scaled(coords_of_word(w), a);
    }
    return c;
  }
  /// sum_k c_k rep_k.
  HalfElt element(const Vec& c, const Content& n) const {
    const Slice& s = slice(n);
    HalfElt x;
    for (size_t k = 0; k < c.size(); ++k) x.add(s.reps[k], c[k]);
    return x;
  }

 protected:
  /// Scalar c_i in (f_i x, y) = (x, c_i raise_i y), for x of the given content.
  virtual Scalar adjoint_factor(int i, const Content& rest) const = 0;

  size_t compute_dim(const Content& n) const override { return slice(n).reps.size(); }
  Matrix<Scalar> compute_gram(const Content& n) const override { return slice(n).G; }
  Matrix<Scalar> compute_lower(int i, const Content& n) const override {
    const Slice& s = slice(n);
    const size_t d = dim(plus_e(n, i));
    Matrix<Scalar> M(d, s.reps.size());
    for (size_t k = 0; k < s.reps.size(); ++k) {
      Word w(1, static_cast<char>(i));
      M.set_col(k, coords_of_word(w + s.reps[k]));
    }
    return M;
  }
  Matrix<Scalar> compute_raise(int i, const Content& n) const override {
    const Slice& s = slice(n);
    const size_t d = dim(plus_e(n, i, -1));
    Matrix<Scalar> M(d, s.reps.size());
    for (size_t k = 0; k < s.reps.size(); ++k) {
      Vec col(d, Scalar(0));
      for (const auto& [w, c] : raise_word(i, s.reps[k])) col = col + scaled(coords_of_word(w), c);
      M.set_col(k, col);
    }
    return M;
  }

 private:
  Slice compute_slice(const Content& n) const {
    Slice s;
    s.words = words_of_content(n);
    const size_t N = s.words.size();
    IndependenceTracker<Scalar> tracker(N);
    std::vector<size_t> chosen;
    for (size_t k = 0; k < N; ++k) {
      Vec col(N);
      for (size_t j = 0; j < N; ++j) col[j] = word_form(s.words[j], s.words[k]);
      if (tracker.add(std::move(col))) chosen.push_back(k);
    }
    s.word_rank = chosen.size();
    for (auto k : chosen) s.reps.push_back(s.words[k]);
    const size_t d = chosen.size();
    s.G = Matrix<Scalar>(d, d);
    for (size_t a = 0; a < d; ++a)
      for (size_t b = 0; b < d; ++b) s.G(a, b) = word_form(s.reps[a], s.reps[b]);
    if (d > 0) {
      try {
        s.Ginv = inverse(s.G);
      } catch (const SingularMatrix&) {
        throw InvariantViolation("Gram matrix on representatives of " + format_content(n) + " is singular");
      }
    }
    return s;
  }

  mutable std::mutex form_mu_, slice_mu_;
  mutable std::unordered_map<std::string, Scalar> form_memo_;
  mutable std::map<Content, Slice> slices_;
};

}  // namespace vtc
