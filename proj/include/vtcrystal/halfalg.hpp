#pragma once

// The negative half U^-: words in f_i modulo the radical of the form
// (1,1) = 1, (f_i x, y) = (x, e_i' y).  The form is star-sesquilinear:
// (c x, y) = star(c) (x, y) and (x, c y) = c (x, y).

#include "graded.hpp"

namespace vtc {

/// e_i' (sign = -1) or e_i'' (sign = +1) on a single word: the left
/// recursion e(f_j y) = v^{sign i.j} t^{<i,j>-<j,i>} f_j e(y) + delta_ij y.
inline std::vector<std::pair<Word, Scalar>> derivation_on_word(const CartanDatum& d, int i, const Word& w,
                                                                int sign) {
  std::vector<std::pair<Word, Scalar>> out;
  Scalar pre(1);
  for (size_t p = 0; p < w.size(); ++p) {
    const int j = w[p];
    if (j == i) out.emplace_back(w.substr(0, p) + w.substr(p + 1), pre);
    pre *= d.eprime_factor(i, j, sign);
  }
  return out;
}

class HalfAlgebra : public WordSpace {
 public:
  explicit HalfAlgebra(const CartanDatum& d, int depth = -1)
      : WordSpace(d), depth_(depth >= 0 ? depth : default_depth(d.rank())) {}

  static int default_depth(int rank) { return rank <= 2 ? 8 : 5; }

  int depth() const override { return depth_; }
  bool is_module() const override { return false; }

  std::vector<std::pair<Word, Scalar>> raise_word(int i, const Word& w) const override {
    return derivation_on_word(datum(), i, w, -1);
  }

  HalfElt eprime(int i, const HalfElt& x) const { return apply(i, x, -1); }
  HalfElt edprime(int i, const HalfElt& x) const { return apply(i, x, +1); }

  /// Sesquilinear extension of the word form.
  Scalar pol_form(const HalfElt& x, const HalfElt& y) const {
    Scalar r(0);
    for (const auto& [a, ca] : x.terms()) {
      const Scalar sa = star(ca);
      for (const auto& [b, cb] : y.terms()) {
        Scalar f = word_form(a, b);
        if (!f.is_zero()) r += sa * cb * f;
      }
    }
    return r;
  }

  /// star(e_i'(star x)) = Ad(k_i) e_i'' x.
  HalfElt ad_k_edprime(int i, const HalfElt& x) const { return star_half(eprime(i, star_half(x))); }

  /// Quantum Serre relator for i != j, with f^{[p]} = f^p / [p]_{v_i,t_i}!.
  HalfElt serre_element(int i, int j) const {
    if (i == j) throw std::invalid_argument("serre_element: i == j");
    const CartanDatum& d = datum();
    const int di = d.d(i);
    const int top = 1 - d.cartan(i, j);
    HalfElt r;
    for (int p = 0; p <= top; ++p) {
      const int q = top - p;
      // t_i^{-p(q - 2<i,j>/i.i + 2<j,i>/i.i)} = t^{-p(q d_i - <i,j> + <j,i>)}.
      const int texp = -p * (q * di - d.ang(i, j) + d.ang(j, i));
      Scalar c = spow(d.D() * texp) / (qfact_vt(p, di, d.D() * di) * qfact_vt(q, di, d.D() * di));
      if (p % 2) c = -c;
      r += c * (letter_power(i, p) * HalfElt(word_of({j})) * letter_power(i, q));
    }
    return r;
  }

  /// Coordinates of x in the representative basis of its grade.
  Vec coords(const HalfElt& x) const { return WordSpace::coords(x, x.content(rank())); }
  using WordSpace::coords;

  /// i-string components of x as elements: x = sum_m f_i^{(m)} x_m.
  std::vector<HalfElt> istring(int i, const HalfElt& x) const {
    const Content n = x.content(rank());
    std::vector<HalfElt> out;
    const auto comps = components(i, n, coords(x));
    for (int m = 0; m < static_cast<int>(comps.size()); ++m) out.push_back(element(comps[m], plus_e(n, i, -m)));
    return out;
  }
  HalfElt tilde_f(int i, const HalfElt& x) const {
    const Content n = x.content(rank());
    return element(GradedSpace::tilde_f(i, n) * coords(x), plus_e(n, i));
  }
  HalfElt tilde_e(int i, const HalfElt& x) const {
    const Content n = x.content(rank());
    if (n[i] == 0) return HalfElt();
    return element(GradedSpace::tilde_e(i, n) * coords(x), plus_e(n, i, -1));
  }
  using GradedSpace::tilde_e;
  using GradedSpace::tilde_f;

  /// Equality in U^- (difference in the radical).
  bool equal(const HalfElt& x, const HalfElt& y) const {
    const HalfElt z = x - y;
    if (z.is_zero()) return true;
    if (!z.homogeneous(rank())) {
      // Compare grade by grade.
      std::map<Content, HalfElt> parts;
      for (const auto& [w, c] : z.terms()) parts[content_of(w, rank())].add(w, c);
      for (const auto& [n, p] : parts)
        if (!is_zero(WordSpace::coords(p, n))) return false;
      return true;
    }
    return is_zero(coords(z));
  }

  /// Reverse words and star the coefficients (anti-automorphism).
  static HalfElt star_half(const HalfElt& x) {
    HalfElt r;
    for (const auto& [w, c] : x.terms()) r.add(Word(w.rbegin(), w.rend()), star(c));
    return r;
  }
  /// Bar the coefficients; words are fixed.
  static HalfElt bar_half(const HalfElt& x) {
    HalfElt r;
    for (const auto& [w, c] : x.terms()) r.add(w, bar(c));
    return r;
  }

  /// f_i^{(n)} = f_i^n / [n]_{v_i}!.
  HalfElt divided_power(int i, int n) const { return qfact(n, datum().d(i)).inverse() * letter_power(i, n); }

 protected:
  Scalar adjoint_factor(int, const Content&) const override { return Scalar(1); }

 private:
  HalfElt apply(int i, const HalfElt& x, int sign) const {
    HalfElt r;
    for (const auto& [w, c] : x.terms())
      for (const auto& [u, a] : derivation_on_word(datum(), i, w, sign)) r.add(u, c * a);
    return r;
  }

  int depth_;
};

}  // namespace vtc
