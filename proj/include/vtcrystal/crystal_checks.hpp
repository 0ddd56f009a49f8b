#pragma once

// Executable checks on constructed crystals: orthonormality of residues,
// the star symmetry of B(infinity), the tensor product rule, the projection
// B(infinity) -> B(lambda), string counting, and the lattice/norm spot check.

#include "crystal.hpp"
#include "halfalg.hpp"

#include <random>
#include <sstream>

namespace vtc {

struct CheckReport {
  CheckReport() = default;
  explicit CheckReport(std::string n) : name(std::move(n)) {}

  std::string name;
  bool ok = true;
  size_t checked = 0;
  size_t failed = 0;
  std::vector<std::string> failures;  // the first 20

  void fail(const std::string& what) {
    ok = false;
    ++failed;
    if (failures.size() < 20) failures.push_back(what);
  }
  void merge(const CheckReport& o) {
    checked += o.checked;
    for (const auto& f : o.failures) fail(f);
    failed += o.failed - o.failures.size();
    if (!o.ok) ok = false;
  }
};

/// (b, b')_0 = delta on every grade, using the lattice representatives.
inline CheckReport ortho_check(const Crystal& C) {
  CheckReport r{"ortho"};
  const GradedSpace& S = C.space();
  for (const auto& [n, sl] : C.lattice()) {
    for (size_t a = 0; a < sl.nodes.size(); ++a)
      for (size_t b = 0; b < sl.nodes.size(); ++b) {
        const Scalar f = S.form(n, sl.R.col(a), sl.R.col(b));
        ++r.checked;
        if (!in_A(f)) {
          r.fail("(b" + std::to_string(sl.nodes[a]) + ", b" + std::to_string(sl.nodes[b]) + ") has a pole at v=0");
          continue;
        }
        const FracS f0 = eval_v0(f);
        if (a == b ? !f0.is_one() : !f0.is_zero())
          r.fail("(b" + std::to_string(sl.nodes[a]) + ", b" + std::to_string(sl.nodes[b]) + ")_0 = " +
                 to_string(f0, S.datum().D()));
      }
  }
  return r;
}

/// Image of each B(infinity) node under star: target node and the Q(t) scalar.
struct StarImage {
  std::vector<long> target;
  std::vector<FracS> scale;
};

inline StarImage star_images(const Crystal& C) {
  const auto* U = dynamic_cast<const HalfAlgebra*>(&C.space());
  if (!U) throw std::invalid_argument("star_images: needs the crystal of U^-");
  const CrystalGraph& G = C.graph();
  StarImage out{std::vector<long>(G.size(), -1), std::vector<FracS>(G.size())};
  for (size_t b = 0; b < G.size(); ++b) {
    const Content& n = G.grade[b];
    const HalfElt x = HalfAlgebra::star_half(U->element(C.rep(b), n));
    const Classified c = C.classify(n, U->coords(x, n));
    if (c.node) {
      out.target[b] = static_cast<long>(*c.node);
      out.scale[b] = c.scale;
    }
  }
  return out;
}

/// star maps L(infinity) to itself and permutes B(infinity) involutively.
inline CheckReport star_check(const Crystal& C) {
  CheckReport r{"star"};
  const auto* U = dynamic_cast<const HalfAlgebra*>(&C.space());
  if (!U) throw std::invalid_argument("star_check: needs the crystal of U^-");
  const CrystalGraph& G = C.graph();
  std::vector<long> img(G.size(), -1);
  for (size_t b = 0; b < G.size(); ++b) {
    ++r.checked;
    const Content& n = G.grade[b];
    const HalfElt x = HalfAlgebra::star_half(U->element(C.rep(b), n));
    const Classified c = C.classify(n, U->coords(x, n));
    if (!c.in_lattice) {
      r.fail("star(b" + std::to_string(b) + ") leaves L(inf)");
      continue;
    }
    if (!c.node) {
      r.fail("star(b" + std::to_string(b) + ") is not a node modulo vL");
      continue;
    }
    img[b] = static_cast<long>(*c.node);
  }
  std::vector<int> hits(G.size(), 0);
  for (size_t b = 0; b < G.size(); ++b) {
    if (img[b] < 0) continue;
    ++hits[img[b]];
    if (img[img[b]] >= 0 && img[img[b]] != static_cast<long>(b))
      r.fail("star is not involutive at b" + std::to_string(b));
  }
  for (size_t b = 0; b < G.size(); ++b)
    if (hits[b] > 1) r.fail("star is not injective at b" + std::to_string(b));
  return r;
}

/// Crystal of M (x) N computed directly: the lattice L1 (x) L2 with basis the
/// products of node representatives, f~_i and e~_i applied to each product.
/// Nodes are numbered by pairs (b1, b2) -> b1 * |B2| + b2; -1 means zero.
struct TensorCrystal {
  size_t n1 = 0, n2 = 0;
  std::vector<std::vector<long>> f_edge, e_edge;
};

inline TensorCrystal direct_tensor_crystal(const Crystal& C1, const Crystal& C2, const TensorModule& T) {
  const CrystalGraph& G1 = C1.graph();
  const CrystalGraph& G2 = C2.graph();
  const int r = T.rank();
  TensorCrystal out;
  out.n1 = G1.size();
  out.n2 = G2.size();
  const size_t N = out.n1 * out.n2;
  out.f_edge.assign(N, std::vector<long>(r, -1));
  out.e_edge = out.f_edge;

  // Pair basis of each grade of T.
  struct PairSlice {
    std::vector<long> pairs;
    Matrix<Scalar> Rinv;
  };
  std::map<Content, PairSlice> slices;
  auto grade_of = [&](size_t b1, size_t b2) {
    Content n = G1.grade[b1];
    for (int k = 0; k < r; ++k) n[k] += G2.grade[b2][k];
    return n;
  };
  auto pure = [&](size_t b1, size_t b2) {
    return T.pure_tensor(G1.grade[b1], C1.rep(b1), G2.grade[b2], C2.rep(b2));
  };
  auto slice_of = [&](const Content& n) -> const PairSlice& {
    auto it = slices.find(n);
    if (it != slices.end()) return it->second;
    PairSlice ps;
    std::vector<Vec> cols;
    for (const auto& B : T.blocks(n))
      for (size_t b1 : G1.nodes_of(B.n1))
        for (size_t b2 : G2.nodes_of(B.n2)) {
          ps.pairs.push_back(static_cast<long>(b1 * out.n2 + b2));
          cols.push_back(pure(b1, b2));
        }
    if (cols.size() != T.dim(n))
      throw InvariantViolation("B1 (x) B2 does not have the size of grade " + format_content(n));
    if (!cols.empty()) ps.Rinv = inverse(Matrix<Scalar>::from_columns(T.dim(n), cols));
    return slices.emplace(n, std::move(ps)).first->second;
  };
  auto classify = [&](const Content& n, const Vec& x, const std::string& what) -> long {
    if (is_zero(x)) return -1;
    const PairSlice& ps = slice_of(n);
    const Vec c = ps.Rinv * x;
    long hit = -1;
    int nonzero = 0;
    for (size_t k = 0; k < c.size(); ++k) {
      if (!in_A(c[k])) throw InvariantViolation(what + " leaves L1 (x) L2");
      if (!eval_v0(c[k]).is_zero()) {
        ++nonzero;
        hit = ps.pairs[k];
      }
    }
    if (nonzero > 1) throw InvariantViolation(what + " is not a node modulo vL");
    return nonzero == 0 ? -1 : hit;
  };

  for (size_t b1 = 0; b1 < out.n1; ++b1)
    for (size_t b2 = 0; b2 < out.n2; ++b2) {
      const Content n = grade_of(b1, b2);
      const Vec x = pure(b1, b2);
      const size_t id = b1 * out.n2 + b2;
      const std::string tag = "(" + std::to_string(b1) + "," + std::to_string(b2) + ")";
      for (int i = 0; i < r; ++i) {
        const Content dn = plus_e(n, i);
        if (T.dim(dn) > 0) out.f_edge[id][i] = classify(dn, T.tilde_f(i, n) * x, "f~" + std::to_string(i) + tag);
        else if (!is_zero(T.tilde_f(i, n) * x)) throw InvariantViolation("f~ leaves the tensor module");
        if (n[i] > 0) {
          const Content un = plus_e(n, i, -1);
          if (T.dim(un) > 0) out.e_edge[id][i] = classify(un, T.tilde_e(i, n) * x, "e~" + std::to_string(i) + tag);
        }
      }
    }
  return out;
}

/// The combinatorial tensor product rule applied to two crystal graphs.
inline TensorCrystal rule_tensor_crystal(const CrystalGraph& G1, const CrystalGraph& G2) {
  TensorCrystal out;
  out.n1 = G1.size();
  out.n2 = G2.size();
  const int r = G1.rank;
  out.f_edge.assign(out.n1 * out.n2, std::vector<long>(r, -1));
  out.e_edge = out.f_edge;
  for (size_t b1 = 0; b1 < out.n1; ++b1)
    for (size_t b2 = 0; b2 < out.n2; ++b2) {
      const size_t id = b1 * out.n2 + b2;
      for (int i = 0; i < r; ++i) {
        const int ph = G1.phi[b1][i], ep = G2.eps[b2][i];
        if (ph > ep) {
          const long t = G1.f_edge[b1][i];
          out.f_edge[id][i] = t < 0 ? -1 : static_cast<long>(t * out.n2 + b2);
        } else {
          const long t = G2.f_edge[b2][i];
          out.f_edge[id][i] = t < 0 ? -1 : static_cast<long>(b1 * out.n2 + t);
        }
        if (ph >= ep) {
          const long t = G1.e_edge[b1][i];
          out.e_edge[id][i] = t < 0 ? -1 : static_cast<long>(t * out.n2 + b2);
        } else {
          const long t = G2.e_edge[b2][i];
          out.e_edge[id][i] = t < 0 ? -1 : static_cast<long>(b1 * out.n2 + t);
        }
      }
    }
  return out;
}

inline CheckReport tensor_rule_check(const Crystal& C1, const Crystal& C2, const TensorModule& T) {
  CheckReport r{"tensor-rule"};
  const TensorCrystal D = direct_tensor_crystal(C1, C2, T);
  const TensorCrystal R = rule_tensor_crystal(C1.graph(), C2.graph());
  auto name = [&](long id) {
    if (id < 0) return std::string("0");
    return "b" + std::to_string(id / static_cast<long>(D.n2)) + "(x)b" + std::to_string(id % static_cast<long>(D.n2));
  };
  for (size_t id = 0; id < D.f_edge.size(); ++id)
    for (size_t i = 0; i < D.f_edge[id].size(); ++i) {
      r.checked += 2;
      if (D.f_edge[id][i] != R.f_edge[id][i])
        r.fail("f~" + std::to_string(i + 1) + " " + name(static_cast<long>(id)) + ": direct " + name(D.f_edge[id][i]) +
               ", rule " + name(R.f_edge[id][i]));
      if (D.e_edge[id][i] != R.e_edge[id][i])
        r.fail("e~" + std::to_string(i + 1) + " " + name(static_cast<long>(id)) + ": direct " + name(D.e_edge[id][i]) +
               ", rule " + name(R.e_edge[id][i]));
    }
  return r;
}

/// pi_lambda on B(infinity) nodes: the B(lambda) node or -1 for zero.
inline std::vector<long> project_binf(const Crystal& Binf, const Crystal& Blam) {
  const auto* U = dynamic_cast<const HalfAlgebra*>(&Binf.space());
  const auto* V = dynamic_cast<const HWModule*>(&Blam.space());
  if (!U || !V) throw std::invalid_argument("project_binf: needs U^- and a highest-weight module");
  const CrystalGraph& G = Binf.graph();
  std::vector<long> out(G.size(), -1);
  for (size_t b = 0; b < G.size(); ++b) {
    const Content& n = G.grade[b];
    if (V->dim(n) == 0) continue;
    const Vec y = pi_lambda(*V, U->element(Binf.rep(b), n));
    const Classified c = Blam.classify(n, y);
    if (!c.in_lattice) throw InvariantViolation("pi_lambda(L(inf)) leaves L(lambda) at b" + std::to_string(b));
    if (c.zero_residue) continue;
    if (!c.node) throw InvariantViolation("pi_lambda(b" + std::to_string(b) + ") is not a node modulo vL");
    out[b] = static_cast<long>(*c.node);
  }
  return out;
}

/// The compatibilities of pi_lambda-bar: f~ commutes with it, e~ commutes on
/// the nonzero fiber, and the nonzero fiber maps bijectively onto B(lambda)
/// (as far as B(infinity) was built).
inline CheckReport projection_check(const Crystal& Binf, const Crystal& Blam) {
  CheckReport r{"projection"};
  const auto p = project_binf(Binf, Blam);
  const CrystalGraph& G = Binf.graph();
  const CrystalGraph& H = Blam.graph();
  if (p[0] != 0) r.fail("pi(1) is not the highest node");
  std::vector<int> hits(H.size(), 0);
  for (size_t b = 0; b < G.size(); ++b) {
    if (p[b] >= 0) ++hits[p[b]];
    for (int i = 0; i < G.rank; ++i) {
      ++r.checked;
      const long fb = G.f_edge[b][i];
      if (fb >= 0) {
        const long lhs = p[b] < 0 ? -1 : H.f_edge[p[b]][i];
        if (lhs != p[fb])
          r.fail("f~" + std::to_string(i + 1) + " pi(b" + std::to_string(b) + ") != pi(f~ b" + std::to_string(b) + ")");
      }
      if (p[b] >= 0) {
        const long eb = G.e_edge[b][i];
        const long rhs = eb < 0 ? -1 : p[eb];
        if (H.e_edge[p[b]][i] != rhs)
          r.fail("e~" + std::to_string(i + 1) + " pi(b" + std::to_string(b) + ") != pi(e~ b" + std::to_string(b) + ")");
      }
    }
  }
  for (size_t c = 0; c < H.size(); ++c) {
    const int h = static_cast<int>(H.grade[c].size());
    int height = 0;
    for (int k = 0; k < h; ++k) height += H.grade[c][k];
    if (height > G.depth) continue;
    if (hits[c] != 1) r.fail("fiber over b" + std::to_string(c) + " has " + std::to_string(hits[c]) + " elements");
  }
  return r;
}

/// dim (f_i^n M)_grade = #{b in the grade : eps_i(b) >= n}.
inline CheckReport string_count_check(const Crystal& C) {
  CheckReport r{"prop35"};
  const GradedSpace& S = C.space();
  const CrystalGraph& G = C.graph();
  for (const auto& [n, sl] : C.lattice())
    for (int i = 0; i < G.rank; ++i)
      for (int m = 1; m <= n[i]; ++m) {
        ++r.checked;
        const Content src = plus_e(n, i, -m);
        const size_t d = S.dim(src) == 0 ? 0 : rank(S.lower_divided(i, src, m));
        size_t count = 0;
        for (size_t b : sl.nodes)
          if (G.eps[b][i] >= m) ++count;
        if (d != count)
          r.fail("grade " + format_content(n) + ", i=" + std::to_string(i + 1) + ", n=" + std::to_string(m) +
                 ": dim " + std::to_string(d) + " vs " + std::to_string(count));
      }
  return r;
}

/// Random A-combinations of the lattice basis have (x, x) in A; adding
/// v^{-1} times a basis vector gives a norm with a pole.
inline CheckReport lattice_norm_check(const Crystal& C, unsigned seed, int samples = 3) {
  CheckReport r{"prop63"};
  const GradedSpace& S = C.space();
  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> coef(-2, 2), pw(0, 2);
  auto random_A = [&] {
    Scalar a(0);
    for (int k = 0; k < 2; ++k) a += Scalar(coef(gen)) * vpow(pw(gen)) * spow(coef(gen));
    // Occasionally a unit with a nontrivial denominator.
    if (coef(gen) > 0) a = a / (Scalar(1) + vpow(2));
    return a;
  };
  for (const auto& [n, sl] : C.lattice()) {
    const size_t d = sl.nodes.size();
    for (int s = 0; s < samples; ++s) {
      Vec x(S.dim(n), Scalar(0));
      for (size_t k = 0; k < d; ++k) x = x + scaled(sl.R.col(k), random_A());
      ++r.checked;
      if (!in_A(S.form(n, x, x))) r.fail("A-combination in grade " + format_content(n) + " has a norm pole");
      std::uniform_int_distribution<size_t> pick(0, d - 1);
      const size_t k = pick(gen);
      const Vec y = x + scaled(sl.R.col(k), vpow(-1));
      ++r.checked;
      if (in_A(S.form(n, y, y))) r.fail("v^-1 perturbation in grade " + format_content(n) + " keeps (x,x) in A");
    }
  }
  return r;
}

}  // namespace vtc
