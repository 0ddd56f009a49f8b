// Acceptance run: one PASS/FAIL line per criterion, with timing.  Every
// comparison is exact; a criterion also fails if it exceeds its time budget.

#include "vtcrystal/checks.hpp"
#include "vtcrystal/t1.hpp"

#include <chrono>
#include <functional>
#include <iostream>

using namespace vtc;

namespace {

using IntMat = std::vector<std::vector<int>>;

struct Outcome {
  bool ok = true;
  std::string detail;
  std::vector<std::string> failures;

  void take(const CheckReport& r) {
    detail += (detail.empty() ? "" : ", ") + r.name + " " + std::to_string(r.checked);
    if (r.checked == 0) expect(false, r.name + ": nothing was checked");
    if (!r.ok) {
      ok = false;
      for (const auto& f : r.failures) failures.push_back(r.name + ": " + f);
    }
  }
  void expect(bool c, const std::string& what) {
    if (!c) {
      ok = false;
      failures.push_back(what);
    }
  }
};

int failed = 0;

void criterion(int k, const std::string& title, double budget, const std::function<void(Outcome&)>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.failures.push_back(std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (secs > budget) o.expect(false, "over the " + std::to_string(budget) + " s budget");
  char t[32];
  std::snprintf(t, sizeof t, "%.2f s", secs);
  std::cout << "criterion " << k << ": " << (o.ok ? "PASS" : "FAIL") << "  " << title << "  [" << t
            << (o.detail.empty() ? "" : "; " + o.detail) << "]" << std::endl;
  for (size_t i = 0; i < o.failures.size() && i < 10; ++i) std::cout << "    " << o.failures[i] << '\n';
  if (!o.ok) ++failed;
}

const CartanDatum sl2(IntMat{{1}});
const CartanDatum a2(IntMat{{1, -1}, {0, 1}});
const CartanDatum b2(IntMat{{1, -2}, {0, 2}});

std::shared_ptr<HWModule> mod(const CartanDatum& d, std::vector<int> l) { return std::make_shared<HWModule>(d, l); }

/// Every f~ and e~ image of a node representative has coordinates in A.
CheckReport lattice_closure(const Crystal& C) {
  CheckReport r{"lattice"};
  const GradedSpace& S = C.space();
  for (const auto& [n, sl] : C.lattice())
    for (size_t k = 0; k < sl.nodes.size(); ++k) {
      const Vec x = sl.R.col(k);
      for (int i = 0; i < S.rank(); ++i) {
        const Content up = plus_e(n, i);
        if (C.has_grade(up) && S.dim(up) > 0) {
          ++r.checked;
          if (!C.classify(up, S.tilde_f(i, n) * x).in_lattice) r.fail("f~ leaves L at b" + std::to_string(sl.nodes[k]));
        }
        if (n[i] > 0 && C.has_grade(plus_e(n, i, -1)) && S.dim(plus_e(n, i, -1)) > 0) {
          const Content down = plus_e(n, i, -1);
          ++r.checked;
          if (!C.classify(down, S.tilde_e(i, n) * x).in_lattice) r.fail("e~ leaves L at b" + std::to_string(sl.nodes[k]));
        }
      }
    }
  return r;
}

}  // namespace

int main() {
  std::vector<Crystal> modules;  // every module crystal built below, for string counting

  criterion(1, "q-integer identities, n <= 12", 1, [](Outcome& o) {
    size_t n_checked = 0;
    for (int n = 1; n <= 12; ++n) {
      const Scalar vt = qint_vt(n, 1, 1);
      o.expect(vt == spow(n - 1) * qint(n, 1), "[" + std::to_string(n) + "]_{v,t} != t^{n-1}[n]_v");
      o.expect(bar(vt) == vt, "[" + std::to_string(n) + "]_{v,t} is not bar-invariant");
      o.expect(eval_v0(vpow(n * (n - 1) / 2) * qfact(n, 1)).is_one(), "v^{n(n-1)/2}[n]! at v=0 is not 1");
      n_checked += 3;
    }
    o.detail = std::to_string(n_checked) + " identities";
  });

  criterion(2, "Serre relators in the radical, Kostant dimensions (A2, B2, |xi| <= 5)", 60, [](Outcome& o) {
    auto a = serre_suite(a2, 5), b = serre_suite(b2, 5);
    a.name = "A2", b.name = "B2";
    o.take(a);
    o.take(b);
  });

  criterion(3, "e'/e'' commutation, e'-Serre to depth 4; adjointness and star symmetry on 100 random pairs", 60, [](Outcome& o) {
    auto a = prop42_suite(a2, 4, 7, 100), b = prop42_suite(b2, 4, 11, 100);
    a.name = "A2", b.name = "B2";
    o.take(a);
    o.take(b);
  });

  criterion(4, "B(lambda): sl2 chains n <= 6, A2 counts vs Freudenthal, lattice in A", 120, [&](Outcome& o) {
    size_t nodes = 0;
    CheckReport lat{"lattice"};
    for (int n = 0; n <= 6; ++n) {
      const Crystal C = build_crystal(mod(sl2, {n}));
      const CrystalGraph& g = C.graph();
      o.expect(g.size() == static_cast<size_t>(n + 1), "sl2 " + std::to_string(n) + "L: wrong node count");
      for (size_t b = 0; b < g.size(); ++b) {
        const long want = b < static_cast<size_t>(n) ? static_cast<long>(b + 1) : -1;
        o.expect(g.f_edge[b][0] == want, "sl2 " + std::to_string(n) + "L: not a chain at b" + std::to_string(b));
      }
      lat.merge(lattice_closure(C));
      nodes += g.size();
      modules.push_back(C);
    }
    const std::vector<std::pair<std::vector<int>, size_t>> a2_cases = {{{1, 0}, 3}, {{0, 1}, 3}, {{1, 1}, 8}};
    for (const auto& [l, count] : a2_cases) {
      const Crystal C = build_crystal(mod(a2, l));
      oracle::Freudenthal F(a2, l);
      const std::string name = "A2 (" + std::to_string(l[0]) + "," + std::to_string(l[1]) + ")";
      o.expect(C.graph().size() == count, name + ": " + std::to_string(C.graph().size()) + " nodes");
      size_t total = 0;
      for (int h = 0; h <= C.graph().depth + 1; ++h)
        for (const auto& n : contents_of_height(2, h)) {
          const size_t m = F.mult(n);
          total += m;
          o.expect(C.graph().nodes_of(n).size() == m, name + ": weight space " + format_content(n) + " count");
        }
      o.expect(total == count, name + ": Freudenthal total " + std::to_string(total));
      lat.merge(lattice_closure(C));
      nodes += C.graph().size();
      modules.push_back(C);
    }
    o.take(lat);
    o.detail = std::to_string(nodes) + " nodes; " + o.detail;
  });

  criterion(5, "tensor rule: A1 (L,L), (2L,L), A2 (L1,L2)", 120, [&](Outcome& o) {
    CheckReport tr{"tensor-rule"};
    const std::vector<std::tuple<const CartanDatum*, std::vector<int>, std::vector<int>>> cases = {
        {&sl2, {1}, {1}}, {&sl2, {2}, {1}}, {&a2, {1, 0}, {0, 1}}};
    for (const auto& [d, l, m] : cases) {
      auto M = mod(*d, l), N = mod(*d, m);
      TensorModule T(M, N);
      tr.merge(tensor_rule_check(build_crystal(M), build_crystal(N), T));
    }
    o.take(tr);
  });

  std::optional<Crystal> binf4;
  criterion(6, "orthonormality: criterion 4 crystals and A2 B(inf) depth 4", 60, [&](Outcome& o) {
    CheckReport om{"ortho-modules"};
    for (const auto& C : modules) om.merge(ortho_check(C));
    o.take(om);
    binf4 = build_crystal(std::make_shared<HalfAlgebra>(a2, 4), 4);
    CheckReport ob = ortho_check(*binf4);
    ob.name = "ortho-binf";
    o.take(ob);
  });

  criterion(7, "star permutes A2 B(inf) to depth 4, involutively", 60, [&](Outcome& o) {
    if (!binf4) binf4 = build_crystal(std::make_shared<HalfAlgebra>(a2, 4), 4);
    o.take(star_check(*binf4));
  });

  criterion(8, "global bases: sl2 f^(n) to depth 6; A2 |xi| <= 3 properties, G_lambda, t = 1 oracle", 300,
            [&](Outcome& o) {
              auto U = std::make_shared<HalfAlgebra>(sl2, 6);
              const Crystal C = build_crystal(U, 6);
              for (int n = 0; n <= 6; ++n) {
                const GlobalGrade g = global_grade(C, {n});
                o.expect(g.basis.size() == 1 &&
                             U->equal(U->element(g.basis[0].coords, {n}), U->divided_power(0, n)),
                         "sl2: G(b_" + std::to_string(n) + ") != f^(n)");
              }
              const Crystal B = build_crystal(std::make_shared<HalfAlgebra>(a2, 3), 3);
              const Crystal V = build_crystal(mod(a2, {1, 1}));
              modules.push_back(V);
              o.take(global_suite(B, 3, &V));
              auto O = one_param_model(a2);
              CheckReport t1{"t1"};
              for (int h = 0; h <= 3; ++h)
                for (const auto& n : contents_of_height(2, h)) t1.merge(t1_compare(B, global_grade(B, n), O));
              o.take(t1);
            });

  criterion(9, "resolution of identity (sl2, m <= 4), form congruence (A2, (6,6), |xi| <= 3), string counts on all modules", 120,
            [&](Outcome& o) {
              CheckReport l75{"lemma75"};
              for (int m = 1; m <= 4; ++m) l75.merge(lemma75_check(*mod(sl2, {m})));
              o.take(l75);
              o.take(lemma56_check(a2, {6, 6}, 3));
              CheckReport p35{"prop35"};
              for (const auto& C : modules) p35.merge(string_count_check(C));
              for (int m = 1; m <= 4; ++m) p35.merge(string_count_check(build_crystal(mod(sl2, {m}))));
              o.take(p35);
            });

  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << std::endl;
  return failed == 0 ? 0 : 1;
}
