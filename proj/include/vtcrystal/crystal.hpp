#pragma once

// Crystal lattices and crystal bases by closure under Kashiwara operators.
// Grade by grade, the lattice L_n is the A-span of f~_i applied to the
// lattice representatives one level up; an A-basis comes from elimination
// with minimal-valuation pivots, and residues at v = 0 in that basis
// identify the crystal nodes.  The node representatives then form an A-basis
// of L_n, and every later vector is classified in that basis.

#include "modules.hpp"

#include <algorithm>
#include <optional>

namespace vtc {

/// Combinatorial crystal graph.  Node ids are assigned level by level in
/// generation order, which is deterministic.
struct CrystalGraph {
  bool binf = false;
  std::vector<int> highest;  // dominant coordinates (empty for B(infinity))
  int rank = 0;
  int depth = 0;             // largest height explored
  std::vector<Content> grade;                // per node
  std::vector<std::vector<int>> gen_word;    // f~ indices, applied right to left: f~_{w0} ... f~_{wl} top
  std::vector<std::vector<long>> f_edge, e_edge;  // [node][i] target id or -1
  std::vector<std::vector<int>> eps, phi;    // [node][i]

  size_t size() const { return grade.size(); }
  std::vector<size_t> nodes_of(const Content& n) const {
    std::vector<size_t> out;
    for (size_t b = 0; b < grade.size(); ++b)
      if (grade[b] == n) out.push_back(b);
    return out;
  }
  size_t edge_count() const {
    size_t c = 0;
    for (const auto& row : f_edge)
      for (long t : row)
        if (t >= 0) ++c;
    return c;
  }
};

/// <h_i, wt> for a node of the graph.
inline std::vector<long> node_weight(const CartanDatum& d, const CrystalGraph& g, size_t b) {
  std::vector<long> w(d.rank());
  std::vector<int> m(d.rank());
  for (int k = 0; k < d.rank(); ++k) m[k] = -g.grade[b][k];
  for (int i = 0; i < d.rank(); ++i) w[i] = d.hpair(i, g.binf ? std::vector<int>{} : g.highest, m);
  return w;
}

/// Outcome of expressing a vector in the lattice basis of its grade.
struct Classified {
  Vec coords;               // lattice coordinates
  bool in_lattice = true;   // all coordinates in A
  int worst_valuation = 0;  // smallest valuation among coordinates
  bool zero_residue = false;
  std::optional<size_t> node;  // residue is a Q(t)-multiple of this node
  FracS scale;                 // ... with this coefficient
  std::vector<FracS> residue;
};

struct LatticeSlice {
  std::vector<size_t> nodes;  // node ids, column order of R
  Matrix<Scalar> R, Rinv;
};

class Crystal {
 public:
  Crystal(std::shared_ptr<const GradedSpace> space, CrystalGraph g, std::map<Content, LatticeSlice> lat)
      : space_(std::move(space)), graph_(std::move(g)), lattice_(std::move(lat)) {}

  const GradedSpace& space() const { return *space_; }
  std::shared_ptr<const GradedSpace> space_ptr() const { return space_; }
  const CrystalGraph& graph() const { return graph_; }
  const std::map<Content, LatticeSlice>& lattice() const { return lattice_; }
  bool has_grade(const Content& n) const { return lattice_.count(n) > 0; }
  const LatticeSlice& slice(const Content& n) const {
    auto it = lattice_.find(n);
    if (it == lattice_.end()) throw DepthExceeded("crystal has no grade " + format_content(n));
    return it->second;
  }
  /// Lattice representative of a node, in the space's coordinates.
  Vec rep(size_t b) const {
    const auto& s = slice(graph_.grade[b]);
    for (size_t k = 0; k < s.nodes.size(); ++k)
      if (s.nodes[k] == b) return s.R.col(k);
    throw std::out_of_range("node not in lattice slice");
  }

  Classified classify(const Content& n, const Vec& x) const {
    Classified c;
    const auto& s = slice(n);
    c.coords = s.Rinv * x;
    for (const auto& a : c.coords)
      if (!a.is_zero()) c.worst_valuation = std::min(c.worst_valuation, a.valuation());
    if (c.worst_valuation < 0) {
      c.in_lattice = false;
      return c;
    }
    c.residue.reserve(c.coords.size());
    for (const auto& a : c.coords) c.residue.push_back(eval_v0(a));
    size_t nonzero = 0, at = 0;
    for (size_t k = 0; k < c.residue.size(); ++k)
      if (!c.residue[k].is_zero()) {
        ++nonzero;
        at = k;
      }
    c.zero_residue = nonzero == 0;
    if (nonzero == 1) {
      c.node = s.nodes[at];
      c.scale = c.residue[at];
    }
    return c;
  }

 private:
  std::shared_ptr<const GradedSpace> space_;
  CrystalGraph graph_;
  std::map<Content, LatticeSlice> lattice_;
};

namespace detail {

/// A-basis of the A-span of the given vectors (elimination with pivots of
/// minimal valuation; every multiplier lies in A).
inline std::vector<Vec> lattice_basis(std::vector<Vec> work) {
  std::vector<Vec> basis;
  work.erase(std::remove_if(work.begin(), work.end(), [](const Vec& x) { return is_zero(x); }), work.end());
  while (!work.empty()) {
    size_t bk = 0, bp = 0;
    int best = 0;
    bool found = false;
    for (size_t k = 0; k < work.size(); ++k)
      for (size_t p = 0; p < work[k].size(); ++p) {
        if (work[k][p].is_zero()) continue;
        const int val = work[k][p].valuation();
        if (!found || val < best) {
          best = val;
          bk = k;
          bp = p;
          found = true;
        }
      }
    Vec P = std::move(work[bk]);
    work.erase(work.begin() + static_cast<long>(bk));
    const Scalar inv = P[bp].inverse();
    for (auto& w : work) {
      if (w[bp].is_zero()) continue;
      const Scalar m = w[bp] * inv;
      for (size_t q = 0; q < w.size(); ++q)
        if (!P[q].is_zero()) w[q] -= m * P[q];
    }
    work.erase(std::remove_if(work.begin(), work.end(), [](const Vec& x) { return is_zero(x); }), work.end());
    basis.push_back(std::move(P));
  }
  return basis;
}

inline std::vector<FracS> residues(const Vec& coords) {
  std::vector<FracS> r;
  for (const auto& a : coords) r.push_back(eval_v0(a));
  return r;
}

// Residues only matter up to Q(t)^x: scale the first nonzero entry to 1.
inline void projectivize(std::vector<FracS>& r) {
  for (const auto& x : r)
    if (!x.is_zero()) {
      const FracS inv = x.inverse();
      for (auto& y : r) y *= inv;
      return;
    }
}

}  // namespace detail

/// Builds the crystal of a highest-weight module (or tensor module with a
/// single top vector) or of U^-, up to height `depth` (default: the space's
/// depth; for complete modules, until the grades vanish).
inline Crystal build_crystal(std::shared_ptr<const GradedSpace> space, int depth = -1) {
  const GradedSpace& S = *space;
  const int r = S.rank();
  if (S.is_module()) {
    // Module crystals need every f~ image, so the whole module.
    if (!S.complete())
      throw DepthExceeded("module does not vanish within depth " + std::to_string(S.depth()) +
                          "; f~ would leave the window");
    depth = S.depth();
  }
  if (depth < 0) depth = S.depth();
  if (depth > S.depth())
    throw DepthExceeded("crystal depth " + std::to_string(depth) + " exceeds the space's depth " +
                        std::to_string(S.depth()));
  CrystalGraph g;
  g.binf = !S.is_module();
  g.highest = S.top_weight();
  g.rank = r;
  std::map<Content, LatticeSlice> lat;

  const Content zero(r, 0);
  if (S.dim(zero) != 1) throw InvariantViolation("top grade is not one-dimensional");
  g.grade.push_back(zero);
  g.gen_word.emplace_back();
  lat[zero] = {{0}, Matrix<Scalar>::identity(1), Matrix<Scalar>::identity(1)};

  auto add_edge_slot = [&] {
    g.f_edge.emplace_back(r, -1);
    g.e_edge.emplace_back(r, -1);
  };
  add_edge_slot();

  int h = 0;
  for (; h < depth; ++h) {
    bool any = false;
    for (const auto& n : contents_of_height(r, h + 1)) {
      const size_t d = S.dim(n);
      // Generators f~_i b for nodes b one step up.
      struct Gen {
        size_t from;
        int i;
        Vec v;
      };
      std::vector<Gen> gens;
      for (int i = 0; i < r; ++i) {
        if (n[i] == 0) continue;
        const Content up = plus_e(n, i, -1);
        auto it = lat.find(up);
        if (it == lat.end()) continue;
        const Matrix<Scalar>& F = S.tilde_f(i, up);
        for (size_t k = 0; k < it->second.nodes.size(); ++k) {
          Vec v = F * it->second.R.col(k);
          if (!is_zero(v)) gens.push_back({it->second.nodes[k], i, std::move(v)});
        }
      }
      if (gens.empty()) {
        if (d != 0)
          throw InvariantViolation("grade " + format_content(n) + " of dimension " + std::to_string(d) +
                                   " is not reached by Kashiwara operators");
        continue;
      }
      any = true;
      std::vector<Vec> vs;
      for (const auto& x : gens) vs.push_back(x.v);
      const auto basis = detail::lattice_basis(vs);
      if (basis.size() != d)
        throw InvariantViolation("lattice of grade " + format_content(n) + " has rank " +
                                 std::to_string(basis.size()) + ", expected " + std::to_string(d));
      const Matrix<Scalar> B = Matrix<Scalar>::from_columns(d, basis);
      const Matrix<Scalar> Binv = inverse(B);
      // Distinct nonzero residues become nodes.
      std::vector<std::vector<FracS>> keys;
      std::vector<size_t> first_gen;
      std::vector<long> gen_node(gens.size(), -1);
      for (size_t k = 0; k < gens.size(); ++k) {
        const Vec c = Binv * gens[k].v;
        for (const auto& a : c)
          if (!in_A(a))
            throw InvariantViolation("generator outside the lattice basis in grade " + format_content(n));
        auto res = detail::residues(c);
        bool all_zero = true;
        for (const auto& x : res)
          if (!x.is_zero()) all_zero = false;
        if (all_zero) continue;
        detail::projectivize(res);
        auto it = std::find(keys.begin(), keys.end(), res);
        if (it == keys.end()) {
          keys.push_back(std::move(res));
          first_gen.push_back(k);
          gen_node[k] = static_cast<long>(keys.size() - 1);
        } else {
          gen_node[k] = static_cast<long>(it - keys.begin());
        }
      }
      if (keys.size() != d)
        throw InvariantViolation("grade " + format_content(n) + " has " + std::to_string(keys.size()) +
                                 " residues for dimension " + std::to_string(d));
      LatticeSlice sl;
      std::vector<Vec> reps;
      for (size_t k = 0; k < keys.size(); ++k) {
        const auto& src = gens[first_gen[k]];
        const size_t id = g.grade.size();
        g.grade.push_back(n);
        std::vector<int> w = g.gen_word[src.from];
        w.insert(w.begin(), src.i);
        g.gen_word.push_back(std::move(w));
        add_edge_slot();
        sl.nodes.push_back(id);
        reps.push_back(src.v);
      }
      sl.R = Matrix<Scalar>::from_columns(d, reps);
      try {
        sl.Rinv = inverse(sl.R);
      } catch (const SingularMatrix&) {
        throw InvariantViolation("node residues are dependent in grade " + format_content(n));
      }
      // Every generator, expressed in the node basis, lies in L with residue
      // a node or zero.
      for (size_t k = 0; k < gens.size(); ++k) {
        const Vec c = sl.Rinv * gens[k].v;
        for (const auto& a : c)
          if (!in_A(a)) throw InvariantViolation("f~ image leaves the lattice in grade " + format_content(n));
        const auto res = detail::residues(c);
        std::optional<size_t> hit;
        size_t nonzero = 0;
        for (size_t q = 0; q < res.size(); ++q)
          if (!res[q].is_zero()) {
            ++nonzero;
            hit = q;
          }
        if (nonzero == 0) continue;
        if (nonzero != 1 || !hit)
          throw InvariantViolation("f~ image is not a node modulo vL in grade " + format_content(n));
        g.f_edge[gens[k].from][gens[k].i] = static_cast<long>(sl.nodes[*hit]);
      }
      lat[n] = std::move(sl);
    }
    if (!any) break;
  }
  g.depth = h;
  Crystal C(space, std::move(g), std::move(lat));

  // e~ edges, checked against the f~ edges, then eps and phi.
  CrystalGraph G = C.graph();
  for (size_t b = 0; b < G.size(); ++b) {
    const Content& n = G.grade[b];
    const Vec x = C.rep(b);
    for (int i = 0; i < r; ++i) {
      if (n[i] == 0) continue;
      const Content up = plus_e(n, i, -1);
      if (!C.has_grade(up)) continue;
      const Classified c = C.classify(up, S.tilde_e(i, n) * x);
      if (!c.in_lattice) throw InvariantViolation("e~ leaves the lattice at node " + std::to_string(b));
      if (c.zero_residue) continue;
      if (!c.node) throw InvariantViolation("e~ image is not a node modulo vL at node " + std::to_string(b));
      G.e_edge[b][i] = static_cast<long>(*c.node);
    }
  }
  for (size_t b = 0; b < G.size(); ++b)
    for (int i = 0; i < r; ++i) {
      const long t = G.f_edge[b][i];
      if (t >= 0 && G.e_edge[t][i] != static_cast<long>(b))
        throw InvariantViolation("f~ and e~ edges disagree at node " + std::to_string(b));
      const long s = G.e_edge[b][i];
      if (s >= 0 && G.f_edge[s][i] != static_cast<long>(b))
        throw InvariantViolation("e~ and f~ edges disagree at node " + std::to_string(b));
    }
  G.eps.assign(G.size(), std::vector<int>(r, 0));
  G.phi.assign(G.size(), std::vector<int>(r, 0));
  for (size_t b = 0; b < G.size(); ++b) {
    const auto wt = node_weight(S.datum(), G, b);
    for (int i = 0; i < r; ++i) {
      int e = 0;
      for (long c = G.e_edge[b][i]; c >= 0; c = G.e_edge[c][i]) ++e;
      G.eps[b][i] = e;
      if (G.binf) {
        G.phi[b][i] = e + static_cast<int>(wt[i]);
      } else {
        int f = 0;
        for (long c = G.f_edge[b][i]; c >= 0; c = G.f_edge[c][i]) ++f;
        G.phi[b][i] = f;
        if (f - e != wt[i])
          throw InvariantViolation("phi - eps differs from the weight at node " + std::to_string(b));
      }
    }
  }
  return Crystal(space, std::move(G), C.lattice());
}

}  // namespace vtc
