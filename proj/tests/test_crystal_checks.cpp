#include <gtest/gtest.h>

#include "vtcrystal/crystal_checks.hpp"

using namespace vtc;

namespace {

using IntMat = std::vector<std::vector<int>>;

const CartanDatum& sl2() {
  static const CartanDatum d(IntMat{{1}});
  return d;
}
const CartanDatum& a2() {
  static const CartanDatum d(IntMat{{1, -1}, {0, 1}});
  return d;
}
const CartanDatum& b2() {
  static const CartanDatum d(IntMat{{2, -2}, {0, 1}});
  return d;
}

std::shared_ptr<HWModule> mod(const CartanDatum& d, std::vector<int> l) {
  return std::make_shared<HWModule>(d, std::move(l));
}

void expect_ok(const CheckReport& r) {
  EXPECT_TRUE(r.ok) << r.name << ": " << (r.failures.empty() ? "" : r.failures.front());
  EXPECT_GT(r.checked, 0u) << r.name;
}

}  // namespace

TEST(CrystalChecks, OrthonormalModules) {
  for (int n = 0; n <= 6; ++n) expect_ok(ortho_check(build_crystal(mod(sl2(), {n}))));
  for (auto l : {std::vector<int>{1, 0}, {0, 1}, {1, 1}, {2, 0}}) expect_ok(ortho_check(build_crystal(mod(a2(), l))));
  expect_ok(ortho_check(build_crystal(mod(b2(), {1, 1}))));
}

TEST(CrystalChecks, BInfinityOrthoAndStar) {
  auto U = std::make_shared<HalfAlgebra>(a2(), 4);
  const Crystal C = build_crystal(U, 4);
  expect_ok(ortho_check(C));
  expect_ok(star_check(C));
  auto U1 = std::make_shared<HalfAlgebra>(sl2(), 6);
  const Crystal C1 = build_crystal(U1);
  const auto s = star_images(C1);
  for (size_t b = 0; b < C1.graph().size(); ++b) EXPECT_EQ(s.target[b], static_cast<long>(b));
}

TEST(CrystalChecks, TensorRule) {
  auto run = [](const CartanDatum& d, std::vector<int> l, std::vector<int> m) {
    auto M = mod(d, l), N = mod(d, m);
    const Crystal C1 = build_crystal(M), C2 = build_crystal(N);
    TensorModule T(M, N);
    return tensor_rule_check(C1, C2, T);
  };
  expect_ok(run(sl2(), {1}, {1}));
  expect_ok(run(sl2(), {2}, {1}));
  expect_ok(run(a2(), {1, 0}, {0, 1}));
}

TEST(CrystalChecks, TensorRuleSl2Values) {
  auto M = mod(sl2(), {1});
  const Crystal C = build_crystal(M);
  TensorModule T(M, M);
  const auto D = direct_tensor_crystal(C, C, T);
  // b+ (x) b+ -> b- (x) b+; b- (x) b+ -> b- (x) b-.
  EXPECT_EQ(D.f_edge[0][0], 2);
  EXPECT_EQ(D.f_edge[2][0], 3);
  EXPECT_EQ(D.f_edge[1][0], -1);
}

TEST(CrystalChecks, Projection) {
  auto U = std::make_shared<HalfAlgebra>(a2(), 4);
  const Crystal Binf = build_crystal(U, 4);
  for (auto l : {std::vector<int>{1, 0}, {0, 1}, {1, 1}})
    expect_ok(projection_check(Binf, build_crystal(mod(a2(), l))));
  auto U1 = std::make_shared<HalfAlgebra>(sl2(), 4);
  const Crystal B1 = build_crystal(U1);
  const auto p = project_binf(B1, build_crystal(mod(sl2(), {1})));
  EXPECT_EQ(p[0], 0);
  EXPECT_EQ(p[1], 1);
  EXPECT_EQ(p[2], -1);
}

TEST(CrystalChecks, StringCounting) {
  for (int n = 1; n <= 4; ++n) expect_ok(string_count_check(build_crystal(mod(sl2(), {n}))));
  for (auto l : {std::vector<int>{1, 0}, {1, 1}, {2, 1}}) expect_ok(string_count_check(build_crystal(mod(a2(), l))));
}

TEST(CrystalChecks, LatticeNorms) {
  expect_ok(lattice_norm_check(build_crystal(mod(a2(), {1, 1})), 7));
  auto U = std::make_shared<HalfAlgebra>(a2(), 3);
  expect_ok(lattice_norm_check(build_crystal(U), 11));
}
