#pragma once

// Words in the letters f_i and finite linear combinations of them.

#include "cartan.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <vector>

namespace vtc {

/// f_{w[0]} f_{w[1]} ... f_{w[l-1]}; each char holds an index.
using Word = std::string;

inline Word word_of(std::initializer_list<int> idx) {
  Word w;
  for (int i : idx) w.push_back(static_cast<char>(i));
  return w;
}

inline Content content_of(const Word& w, int rank) {
  Content c(rank, 0);
  for (char ch : w) ++c[static_cast<size_t>(ch)];
  return c;
}

inline int height(const Content& n) {
  int h = 0;
  for (int x : n) h += x;
  return h;
}

inline Content plus_e(Content n, int i, int k = 1) {
  n[i] += k;
  return n;
}

/// All words with the given content, in lexicographic order.
inline std::vector<Word> words_of_content(const Content& n) {
  Word w;
  for (size_t i = 0; i < n.size(); ++i) w.append(static_cast<size_t>(n[i]), static_cast<char>(i));
  std::vector<Word> out;
  do {
    out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

/// All contents of height exactly h.
inline std::vector<Content> contents_of_height(int rank, int h) {
  std::vector<Content> out;
  Content c(rank, 0);
  // Enumerate compositions of h into rank parts, lexicographically descending
  // in the first coordinate for a stable order.
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == rank - 1) {
      c[pos] = left;
      out.push_back(c);
      return;
    }
    for (int k = left; k >= 0; --k) {
      c[pos] = k;
      self(self, pos + 1, left - k);
    }
  };
  if (rank > 0) rec(rec, 0, h);
  return out;
}

inline std::string format_word(const Word& w, const CartanDatum& d) {
  if (w.empty()) return "1";
  std::string s;
  for (char ch : w) {
    if (!s.empty()) s += " ";
    s += "f" + d.labels()[static_cast<size_t>(ch)];
  }
  return s;
}

/// Finite combination of words with nonzero Scalar coefficients.
class HalfElt {
 public:
  HalfElt() = default;
  explicit HalfElt(const Word& w, Scalar c = Scalar(1)) { add(w, c); }

  void add(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = t_.find(w);
    if (it == t_.end()) {
      t_.emplace(w, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
  const std::map<Word, Scalar>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  Scalar coeff(const Word& w) const {
    auto it = t_.find(w);
    return it == t_.end() ? Scalar(0) : it->second;
  }

  HalfElt& operator+=(const HalfElt& o) {
    for (const auto& [w, c] : o.t_) add(w, c);
    return *this;
  }
  HalfElt& operator-=(const HalfElt& o) {
    for (const auto& [w, c] : o.t_) add(w, -c);
    return *this;
  }
  friend HalfElt operator+(HalfElt a, const HalfElt& b) { return a += b; }
  friend HalfElt operator-(HalfElt a, const HalfElt& b) { return a -= b; }
  friend HalfElt operator*(const Scalar& s, const HalfElt& x) {
    HalfElt r;
    if (s.is_zero()) return r;
    for (const auto& [w, c] : x.t_) r.add(w, s * c);
    return r;
  }
  /// Concatenation product.
  friend HalfElt operator*(const HalfElt& a, const HalfElt& b) {
    HalfElt r;
    for (const auto& [w1, c1] : a.t_)
      for (const auto& [w2, c2] : b.t_) r.add(w1 + w2, c1 * c2);
    return r;
  }
  friend bool operator==(const HalfElt& a, const HalfElt& b) { return a.t_ == b.t_; }

  /// Content shared by all words (empty element: all zeros).
  Content content(int rank) const {
    if (t_.empty()) return Content(rank, 0);
    return content_of(t_.begin()->first, rank);
  }
  bool homogeneous(int rank) const {
    if (t_.empty()) return true;
    const Content c = content(rank);
    for (const auto& [w, x] : t_)
      if (content_of(w, rank) != c) return false;
    return true;
  }

  std::string format(const CartanDatum& d) const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : t_) {
      if (!s.empty()) s += " + ";
      s += "{" + to_string(c, d.D()) + "} " + format_word(w, d);
    }
    return s;
  }

 private:
  std::map<Word, Scalar> t_;
};

/// f_i^n as an element.
inline HalfElt letter_power(int i, int n) { return HalfElt(Word(static_cast<size_t>(n), static_cast<char>(i))); }

}  // namespace vtc
