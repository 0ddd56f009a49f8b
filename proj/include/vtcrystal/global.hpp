#pragma once

// Global crystal bases.  In a grade with crystal nodes b and lattice basis R,
// G(b) = sum_k x_k m_k over divided-power monomials m_k, where every x_k is a
// bar-invariant Laurent polynomial in v of degree <= N, and the lattice
// coordinates R^{-1} G lie in A with value e_b at v = 0.  Monomials and
// words are bar-invariant, so these conditions are linear in the
// coefficients of the x_k; N grows until the system is solvable.  Any two
// solutions differ by a bar-invariant element of the integral form lying in
// vL, which is zero, so G(b) is unique.

#include "crystal.hpp"
#include "halfalg.hpp"

#include <functional>

namespace vtc {

/// f_{i1}^{(a1)} ... f_{ir}^{(ar)} as (letter, exponent) pairs.
using Monomial = std::vector<std::pair<int, int>>;

inline HalfElt monomial_element(const CartanDatum& d, const Monomial& m) {
  HalfElt r(word_of({}));
  for (const auto& [i, a] : m) r = r * (qfact(a, d.d(i)).inverse() * letter_power(i, a));
  return r;
}

inline std::string format_monomial(const Monomial& m, const std::vector<std::string>& labels) {
  if (m.empty()) return "1";
  std::string s;
  for (const auto& [i, a] : m) {
    if (!s.empty()) s += " ";
    s += "f" + labels[i];
    if (a > 1) s += "^(" + std::to_string(a) + ")";
  }
  return s;
}

/// Collects runs of equal letters of a word (outermost letter first).
inline Monomial monomial_of_word(const std::vector<int>& w) {
  Monomial m;
  for (int i : w) {
    if (!m.empty() && m.back().first == i) ++m.back().second;
    else m.emplace_back(i, 1);
  }
  return m;
}

/// All divided-power monomials of content n, lexicographic in (letter, exponent).
inline std::vector<Monomial> all_monomials(const Content& n) {
  std::vector<Monomial> out;
  Monomial cur;
  Content left = n;
  std::function<void(int)> rec = [&](int prev) {
    bool done = true;
    for (int x : left)
      if (x != 0) done = false;
    if (done) {
      out.push_back(cur);
      return;
    }
    for (int i = 0; i < static_cast<int>(left.size()); ++i) {
      if (i == prev) continue;
      for (int a = 1; a <= left[i]; ++a) {
        cur.emplace_back(i, a);
        left[i] -= a;
        rec(i);
        left[i] += a;
        cur.pop_back();
      }
    }
  };
  rec(-1);
  return out;
}

/// Coefficients of v^lo .. v^hi in the expansion of x at v = 0.
inline std::vector<FracS> series(const Scalar& x, int lo, int hi) {
  std::vector<FracS> out(static_cast<size_t>(std::max(0, hi - lo + 1)), FracS(0));
  if (x.is_zero() || hi < lo) return out;
  const int sh = x.shift();
  const int need = hi - sh;
  if (need < 0) return out;
  const auto& num = x.num();
  const auto& den = x.den();
  std::vector<FracS> q(static_cast<size_t>(need + 1));
  const FracS d0inv = den.coeff(0).inverse();
  for (int k = 0; k <= need; ++k) {
    FracS a = num.coeff(k);
    for (int i = 1; i <= std::min(k, den.degree()); ++i) a -= den.coeff(i) * q[static_cast<size_t>(k - i)];
    q[static_cast<size_t>(k)] = a * d0inv;
  }
  for (int e = std::max(lo, sh); e <= hi; ++e) out[static_cast<size_t>(e - lo)] = q[static_cast<size_t>(e - sh)];
  return out;
}

struct NonConvergence : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GlobalElement {
  size_t node = 0;
  Vec expansion;  // over the monomial slice
  Vec coords;     // in the space's basis
  Vec lattice;    // in the node basis R
  bool integral = false;
};

struct GlobalGrade {
  Content grade;
  std::vector<Monomial> slice;
  Matrix<Scalar> slice_coords;  // columns: monomials in the space's basis
  std::vector<GlobalElement> basis;
  int degree = 0;         // v-degree bound that sufficed
  bool spanning = false;  // needed all monomials rather than the slice
};

struct GlobalOptions {
  int degree_bound = -1;  // default 4 h^2
  bool seeded = true;     // seed the slice with generation words
  bool fallback = true;   // retry over all monomials if the slice fails
};

namespace detail {

inline const WordSpace& word_space(const Crystal& C) {
  const auto* W = dynamic_cast<const WordSpace*>(&C.space());
  if (!W) throw std::invalid_argument("global basis: needs U^- or a highest-weight module");
  return *W;
}

/// Solves for x with G = M x over the given monomial columns, degree <= N.
/// Returns the coordinates of G(b) for every node column, or nothing.
inline std::optional<std::vector<Vec>> solve_global(const Matrix<Scalar>& W, const Matrix<Scalar>& M, int N,
                                                    const Content& n) {
  const size_t d = W.rows(), K = W.cols();
  int vmin = 0;
  for (size_t r = 0; r < d; ++r)
    for (size_t k = 0; k < K; ++k)
      if (!W(r, k).is_zero()) vmin = std::min(vmin, W(r, k).valuation());
  // Series of each entry over [vmin - N, N].
  const int lo = vmin - N, hi = N;
  std::vector<std::vector<std::vector<FracS>>> ser(d, std::vector<std::vector<FracS>>(K));
  for (size_t r = 0; r < d; ++r)
    for (size_t k = 0; k < K; ++k) ser[r][k] = series(W(r, k), lo, hi);
  auto coef = [&](size_t r, size_t k, int e) -> FracS {
    if (e < lo || e > hi) return FracS(0);
    return ser[r][k][static_cast<size_t>(e - lo)];
  };
  // Unknown (k, j): x_k gets a_{kj} (v^j + v^-j) for j > 0, a_{k0} for j = 0.
  const size_t nu = K * static_cast<size_t>(N + 1);
  const int emin = vmin - N;
  const size_t neq = d * static_cast<size_t>(1 - emin);
  Matrix<FracS> A(neq, nu + d);
  for (size_t r = 0; r < d; ++r)
    for (int e = emin; e <= 0; ++e) {
      const size_t row = r * static_cast<size_t>(1 - emin) + static_cast<size_t>(e - emin);
      for (size_t k = 0; k < K; ++k)
        for (int j = 0; j <= N; ++j) {
          FracS c = coef(r, k, e - j);
          if (j > 0) c += coef(r, k, e + j);
          A(row, k * static_cast<size_t>(N + 1) + static_cast<size_t>(j)) = c;
        }
      if (e == 0) A(row, nu + r) = FracS(1);
    }
  const auto piv = rref(A);
  for (size_t p : piv)
    if (p >= nu) return std::nullopt;
  std::vector<Vec> out;
  for (size_t b = 0; b < d; ++b) {
    std::vector<std::vector<FracS>> lc(K, std::vector<FracS>(static_cast<size_t>(2 * N + 1), FracS(0)));
    for (size_t r = 0; r < piv.size(); ++r) {
      const FracS val = A(r, nu + b);
      if (val.is_zero()) continue;
      const size_t k = piv[r] / static_cast<size_t>(N + 1);
      const int j = static_cast<int>(piv[r] % static_cast<size_t>(N + 1));
      lc[k][static_cast<size_t>(N + j)] += val;
      if (j > 0) lc[k][static_cast<size_t>(N - j)] += val;
    }
    Vec x(K);
    for (size_t k = 0; k < K; ++k) x[k] = Scalar::laurent(-N, lc[k]);
    out.push_back(M * x);
  }
  // The homogeneous solutions must give G = 0.
  std::vector<bool> is_piv(nu, false);
  for (size_t p : piv) is_piv[p] = true;
  for (size_t f = 0; f < nu; ++f) {
    if (is_piv[f]) continue;
    Vec x(K, Scalar(0));
    auto add = [&](size_t col, const FracS& c) {
      const size_t k = col / static_cast<size_t>(N + 1);
      const int j = static_cast<int>(col % static_cast<size_t>(N + 1));
      Scalar term = Scalar(c) * vpow(j);
      if (j > 0) term += Scalar(c) * vpow(-j);
      x[k] += term;
    };
    add(f, FracS(1));
    for (size_t r = 0; r < piv.size(); ++r)
      if (!A(r, f).is_zero()) add(piv[r], -A(r, f));
    if (!is_zero(M * x))
      throw InvariantViolation("global basis is not unique in grade " + format_content(n));
  }
  return out;
}

}  // namespace detail

/// String word of a node: take i with the largest eps_i (smallest i on ties),
/// write i^{eps_i}, and continue from e~_i^{eps_i} b.
inline std::vector<int> string_word(const CrystalGraph& G, size_t b) {
  std::vector<int> w;
  long c = static_cast<long>(b);
  while (true) {
    int best = -1;
    for (int i = 0; i < G.rank; ++i)
      if (G.eps[c][i] > 0 && (best < 0 || G.eps[c][i] > G.eps[c][best])) best = i;
    if (best < 0) break;
    for (int k = G.eps[c][best]; k > 0; --k) {
      w.push_back(best);
      c = G.e_edge[c][best];
    }
  }
  return w;
}

/// Divided-power monomials forming a basis of grade n: first those read off
/// the string words and then the generation words of the nodes (when
/// seeded), then lexicographic.
inline std::pair<std::vector<Monomial>, Matrix<Scalar>> monomial_slice(const Crystal& C, const Content& n,
                                                                       bool seeded = true) {
  const WordSpace& S = detail::word_space(C);
  const size_t d = S.dim(n);
  std::vector<Monomial> cands;
  if (seeded)
    for (size_t b : C.graph().nodes_of(n)) cands.push_back(monomial_of_word(string_word(C.graph(), b)));
  if (seeded)
    for (size_t b : C.graph().nodes_of(n)) cands.push_back(monomial_of_word(C.graph().gen_word[b]));
  for (auto& m : all_monomials(n)) cands.push_back(std::move(m));
  IndependenceTracker<Scalar> tr(d);
  std::vector<Monomial> chosen;
  std::vector<Vec> cols;
  for (const auto& m : cands) {
    if (chosen.size() == d) break;
    if (std::find(chosen.begin(), chosen.end(), m) != chosen.end()) continue;
    Vec c = S.coords(monomial_element(S.datum(), m), n);
    if (tr.add(c)) {
      chosen.push_back(m);
      cols.push_back(std::move(c));
    }
  }
  if (chosen.size() != d) throw InvariantViolation("divided-power monomials do not span grade " + format_content(n));
  return {chosen, Matrix<Scalar>::from_columns(d, cols)};
}

inline GlobalGrade global_grade(const Crystal& C, const Content& n, const GlobalOptions& opt = {}) {
  const WordSpace& S = detail::word_space(C);
  GlobalGrade out;
  out.grade = n;
  const size_t d = S.dim(n);
  if (d == 0) return out;
  const LatticeSlice& L = C.slice(n);
  auto [slice, Ms] = monomial_slice(C, n, opt.seeded);
  out.slice = slice;
  out.slice_coords = Ms;
  for (size_t r = 0; r < Ms.rows(); ++r)
    for (size_t c = 0; c < Ms.cols(); ++c)
      if (!(bar(Ms(r, c)) == Ms(r, c)))
        throw InvariantViolation("monomial coordinates are not bar-invariant in grade " + format_content(n));
  int h = 0;
  for (int x : n) h += x;
  const int bound = opt.degree_bound >= 0 ? opt.degree_bound : 4 * h * h;

  std::optional<std::vector<Vec>> sol;
  auto attempt = [&](const Matrix<Scalar>& M) {
    const Matrix<Scalar> W = L.Rinv * M;
    for (int N = 0; N <= bound && !sol; ++N) {
      sol = detail::solve_global(W, M, N, n);
      if (sol) out.degree = N;
    }
  };
  attempt(Ms);
  if (!sol && opt.fallback) {
    // The slice may span a smaller integral form; use every monomial.
    const auto all = all_monomials(n);
    std::vector<Vec> cols;
    for (const auto& m : all) cols.push_back(S.coords(monomial_element(S.datum(), m), n));
    out.spanning = true;
    attempt(Matrix<Scalar>::from_columns(d, cols));
  }
  if (!sol)
    throw NonConvergence("global basis of grade " + format_content(n) + " not found within v-degree " +
                         std::to_string(bound));
  const Matrix<Scalar> Msinv = inverse(Ms);
  for (size_t k = 0; k < L.nodes.size(); ++k) {
    GlobalElement g;
    g.node = L.nodes[k];
    g.coords = (*sol)[k];
    g.lattice = L.Rinv * g.coords;
    for (size_t q = 0; q < g.lattice.size(); ++q) {
      const Scalar& a = g.lattice[q];
      if (!in_A(a) || !(q == k ? eval_v0(a).is_one() : eval_v0(a).is_zero()))
        throw InvariantViolation("G(b" + std::to_string(g.node) + ") is not congruent to b mod vL");
    }
    g.expansion = Msinv * g.coords;
    g.integral = true;
    for (const auto& x : g.expansion)
      if (!is_integral_laurent(x)) g.integral = false;
    out.basis.push_back(std::move(g));
  }
  return out;
}

/// G is in f_i^m U^- (or f_i^m V) iff its i-string components below m vanish.
inline bool divided_power_membership(const GradedSpace& S, const Content& n, const Vec& G, int i, int m) {
  const auto comps = S.components(i, n, G);
  for (int k = 0; k < m && k < static_cast<int>(comps.size()); ++k)
    if (!is_zero(comps[k])) return false;
  return m <= n[i];
}

}  // namespace vtc
