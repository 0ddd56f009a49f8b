#include <gtest/gtest.h>

#include "vtcrystal/crystal.hpp"

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

Crystal module_crystal(const CartanDatum& d, std::vector<int> l) {
  return build_crystal(std::make_shared<HWModule>(d, std::move(l)));
}

}  // namespace

TEST(Crystal, Sl2Chains) {
  for (int n = 0; n <= 6; ++n) {
    const Crystal C = module_crystal(sl2(), {n});
    const auto& g = C.graph();
    ASSERT_EQ(g.size(), static_cast<size_t>(n + 1));
    for (int k = 0; k < n; ++k) EXPECT_EQ(g.f_edge[k][0], k + 1);
    EXPECT_EQ(g.f_edge[n][0], -1);
    EXPECT_EQ(g.e_edge[0][0], -1);
    EXPECT_EQ(g.phi[0][0], n);
  }
}

TEST(Crystal, A2Modules) {
  const Crystal C = module_crystal(a2(), {1, 0});
  const auto& g = C.graph();
  ASSERT_EQ(g.size(), 3u);
  EXPECT_EQ(g.f_edge[0][0], 1);
  EXPECT_EQ(g.f_edge[1][1], 2);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(module_crystal(a2(), {0, 1}).graph().size(), 3u);
  EXPECT_EQ(module_crystal(a2(), {1, 1}).graph().size(), 8u);
  EXPECT_EQ(module_crystal(a2(), {2, 0}).graph().size(), 6u);
}

TEST(Crystal, BInfinity) {
  auto U1 = std::make_shared<HalfAlgebra>(sl2(), 6);
  const Crystal C1 = build_crystal(U1);
  ASSERT_EQ(C1.graph().size(), 7u);
  for (int k = 0; k < 6; ++k) EXPECT_EQ(C1.graph().f_edge[k][0], k + 1);
  auto U = std::make_shared<HalfAlgebra>(a2(), 4);
  const Crystal C2 = build_crystal(U, 2);
  // 1; f1; f2; f1^(2); f2^(2); two nodes of grade (1,1).
  EXPECT_EQ(C2.graph().size(), 7u);
  EXPECT_EQ(C2.graph().nodes_of({1, 1}).size(), 2u);
  const Crystal C4 = build_crystal(U, 4);
  size_t expected = 0;
  for (int h = 0; h <= 4; ++h)
    for (const auto& n : contents_of_height(2, h)) expected += U->dim(n);
  EXPECT_EQ(C4.graph().size(), expected);
  for (int i = 0; i < 2; ++i) EXPECT_EQ(C4.graph().e_edge[0][i], -1);
}
