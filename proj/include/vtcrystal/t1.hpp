#pragma once

// Checks on global bases: the t = 1 specialization against the canonical
// basis of the one-parameter oracle, and compatibility with V(lambda).

#include "crystal_checks.hpp"
#include "global.hpp"
#include "oracle/canonical_t1.hpp"

namespace vtc {

inline oracle::OneParamHalf one_param_model(const CartanDatum& d) {
  std::vector<std::vector<int>> sym(d.rank(), std::vector<int>(d.rank()));
  for (int i = 0; i < d.rank(); ++i)
    for (int j = 0; j < d.rank(); ++j) sym[i][j] = d.dot(i, j);
  return oracle::OneParamHalf(std::move(sym));
}

/// An element of U^- given by coordinates, at t = 1, in the oracle's words.
inline oracle::VElt at_t1(const HalfAlgebra& U, const Content& n, const Vec& coords) {
  oracle::VElt x;
  const auto& reps = U.slice(n).reps;
  for (size_t k = 0; k < reps.size(); ++k) {
    if (coords[k].is_zero()) continue;
    oracle::VWord w(reps[k].begin(), reps[k].end());
    x[w] += substitute_t1(coords[k]);
  }
  return x;
}

/// Every G(b) at t = 1 equals exactly one oracle canonical element, the
/// matching is a bijection, and b at t = 1 is the oracle element mod vL.
/// `matched` (optional) receives a per-node verdict.
inline CheckReport t1_compare(const Crystal& C, const GlobalGrade& g, oracle::OneParamHalf& O,
                              std::map<size_t, bool>* matched = nullptr) {
  CheckReport r{"t1"};
  const auto* U = dynamic_cast<const HalfAlgebra*>(&C.space());
  if (!U) throw std::invalid_argument("t1_compare: needs the crystal of U^-");
  const Content& n = g.grade;
  const auto can = O.canonical(n);
  std::vector<std::vector<FracV>> cc;
  for (const auto& x : can) cc.push_back(O.coords(x, n));
  const Matrix<FracV> Cm = Matrix<FracV>::from_columns(cc.empty() ? 0 : cc[0].size(), cc);
  const Matrix<FracV> Cinv = cc.empty() ? Cm : inverse(Cm);
  if (can.size() != g.basis.size())
    r.fail("grade " + format_content(n) + ": " + std::to_string(g.basis.size()) + " global vs " +
           std::to_string(can.size()) + " canonical elements");
  std::vector<int> used(can.size(), 0);
  for (const auto& e : g.basis) {
    ++r.checked;
    const size_t before = r.failed;
    const auto oc = O.coords(at_t1(*U, n, e.coords), n);
    long hit = -1;
    for (size_t j = 0; j < cc.size(); ++j)
      if (cc[j] == oc) hit = static_cast<long>(j);
    if (matched) (*matched)[e.node] = hit >= 0;
    if (hit < 0) {
      r.fail("G(b" + std::to_string(e.node) + ") at t=1 is not a canonical basis element");
      continue;
    }
    ++used[hit];
    // Label: the residue of b at t = 1 in the canonical basis.
    const auto y = Cinv * O.coords(at_t1(*U, n, C.rep(e.node)), n);
    for (size_t j = 0; j < y.size(); ++j) {
      const bool lead = static_cast<long>(j) == hit;
      if (!y[j].is_zero() && y[j].valuation() < 0) r.fail("b" + std::to_string(e.node) + " at t=1 leaves the lattice");
      const bool nz = !y[j].is_zero() && y[j].valuation() == 0;
      if (nz != lead) r.fail("b" + std::to_string(e.node) + " at t=1 is not the matched element mod v");
    }
    if (matched && r.failed != before) (*matched)[e.node] = false;
  }
  for (size_t j = 0; j < used.size(); ++j)
    if (used[j] != 1) r.fail("canonical element " + std::to_string(j) + " matched " + std::to_string(used[j]) + " times");
  return r;
}

/// G(b) y_lambda = c G_lambda(pi(b)) where b y_lambda = c pi(b) mod vL(lambda),
/// and G(b) y_lambda = 0 when pi(b) = 0, for B(infinity) grades up to `depth`.
inline CheckReport module_compat_check(const Crystal& Binf, const Crystal& Blam, int depth) {
  CheckReport r{"global-module"};
  const auto* U = dynamic_cast<const HalfAlgebra*>(&Binf.space());
  const auto* V = dynamic_cast<const HWModule*>(&Blam.space());
  if (!U || !V) throw std::invalid_argument("module_compat_check: needs U^- and a highest-weight module");
  const auto p = project_binf(Binf, Blam);
  const int rk = U->rank();
  for (int h = 0; h <= depth; ++h)
    for (const auto& n : contents_of_height(rk, h)) {
      if (!Binf.has_grade(n)) continue;
      const GlobalGrade g = global_grade(Binf, n);
      std::map<size_t, Vec> Gl;
      if (V->dim(n) > 0)
        for (auto& e : global_grade(Blam, n).basis) Gl[e.node] = std::move(e.coords);
      for (const auto& e : g.basis) {
        ++r.checked;
        const std::string tag = "G(b" + std::to_string(e.node) + ")";
        const Vec y = V->dim(n) > 0 ? pi_lambda(*V, U->element(e.coords, n)) : Vec{};
        if (p[e.node] < 0) {
          if (!y.empty() && !is_zero(y)) r.fail(tag + " y_lambda is nonzero but b projects to 0");
          continue;
        }
        const Classified c = Blam.classify(n, pi_lambda(*V, U->element(Binf.rep(e.node), n)));
        if (!c.node || static_cast<long>(*c.node) != p[e.node]) {
          r.fail(tag + ": projection of b is not a node");
          continue;
        }
        if (y != scaled(Gl.at(*c.node), Scalar(c.scale)))
          r.fail(tag + " y_lambda != G_lambda(b" + std::to_string(*c.node) + ")");
      }
    }
  return r;
}

/// Defining properties of the computed G(b) on B(infinity) grades up to
/// `depth`: bar-invariance, congruence to b, integrality, independence of the
/// monomial seeding, G(b*) = G(b)* (up to the scalar relating representatives),
/// and, given a module crystal, compatibility with G_lambda.
inline CheckReport global_suite(const Crystal& B, int depth, const Crystal* Blam = nullptr) {
  CheckReport r{"global"};
  const auto* U = dynamic_cast<const HalfAlgebra*>(&B.space());
  if (!U) throw std::invalid_argument("global_suite: needs the crystal of U^-");
  const auto star = star_images(B);
  for (int h = 0; h <= depth; ++h)
    for (const auto& n : contents_of_height(U->rank(), h)) {
      if (!B.has_grade(n)) continue;
      const LatticeSlice& L = B.slice(n);
      const GlobalGrade g = global_grade(B, n), g2 = global_grade(B, n, {-1, false});
      std::map<size_t, const GlobalElement*> by_node;
      for (const auto& e : g.basis) by_node[e.node] = &e;
      for (size_t k = 0; k < g.basis.size(); ++k) {
        const GlobalElement& e = g.basis[k];
        const std::string tag = "G(b" + std::to_string(e.node) + ")";
        r.checked += 5;
        for (const auto& c : e.coords)
          if (!(bar(c) == c)) {
            r.fail(tag + " is not bar-invariant");
            break;
          }
        const Vec lat = L.Rinv * e.coords;
        for (size_t q = 0; q < lat.size(); ++q)
          if (!in_A(lat[q]) || !(L.nodes[q] == e.node ? eval_v0(lat[q]).is_one() : eval_v0(lat[q]).is_zero())) {
            r.fail(tag + " is not congruent to b mod vL");
            break;
          }
        if (!e.integral) r.fail(tag + " is not integral over the monomial slice");
        if (k >= g2.basis.size() || g2.basis[k].coords != e.coords) r.fail(tag + " changes under reseeding");
        const long s = star.target[e.node];
        const Vec lhs = U->coords(HalfAlgebra::star_half(U->element(e.coords, n)), n);
        if (s < 0 || !by_node.count(s) || lhs != scaled(by_node.at(s)->coords, Scalar(star.scale[e.node])))
          r.fail(tag + "* is not G(b*)");
      }
    }
  if (Blam) r.merge(module_compat_check(B, *Blam, depth));
  return r;
}

}  // namespace vtc
