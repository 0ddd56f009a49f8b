#include <gtest/gtest.h>

#include "vtcrystal/crystal_checks.hpp"
#include "vtcrystal/global.hpp"

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

}  // namespace

TEST(Global, Series) {
  const Scalar x = Scalar(1) / (Scalar(1) + vpow(2));
  const auto s = series(x, -1, 4);
  EXPECT_TRUE(s[0].is_zero());
  EXPECT_TRUE(s[1].is_one());
  EXPECT_TRUE(s[3] == FracS(-1));
  EXPECT_TRUE(s[5].is_one());
  EXPECT_TRUE(series(vpow(-2) * spow(1), -2, -2)[0] == FracS(spow(1).num().coeff(0)));
}

TEST(Global, Monomials) {
  EXPECT_EQ(all_monomials({1, 1}).size(), 2u);
  EXPECT_EQ(all_monomials({2, 1}).size(), 3u);
  EXPECT_EQ(monomial_of_word({0, 0, 1, 0}), (Monomial{{0, 2}, {1, 1}, {0, 1}}));
}

TEST(Global, Sl2DividedPowers) {
  auto U = std::make_shared<HalfAlgebra>(sl2(), 6);
  const Crystal C = build_crystal(U);
  for (int n = 0; n <= 6; ++n) {
    const GlobalGrade g = global_grade(C, {n});
    ASSERT_EQ(g.basis.size(), 1u);
    EXPECT_TRUE(U->equal(U->element(g.basis[0].coords, {n}), U->divided_power(0, n)));
    EXPECT_TRUE(g.basis[0].integral);
    for (int k = 0; k <= n + 1; ++k)
      EXPECT_EQ(divided_power_membership(*U, {n}, g.basis[0].coords, 0, k), k <= n);
  }
}

TEST(Global, A2SmallGrades) {
  auto U = std::make_shared<HalfAlgebra>(a2(), 3);
  const Crystal C = build_crystal(U);
  const auto star = star_images(C);
  std::map<size_t, Vec> G;
  for (int h = 1; h <= 3; ++h)
    for (const auto& n : contents_of_height(2, h)) {
      const GlobalGrade g = global_grade(C, n);
      const GlobalGrade g2 = global_grade(C, n, {-1, false});
      ASSERT_EQ(g.basis.size(), g2.basis.size());
      for (size_t k = 0; k < g.basis.size(); ++k) {
        EXPECT_EQ(g.basis[k].coords, g2.basis[k].coords) << format_content(n);
        EXPECT_TRUE(g.basis[k].integral) << format_content(n);
        for (const auto& c : g.basis[k].coords) EXPECT_TRUE(bar(c) == c);
        G[g.basis[k].node] = g.basis[k].coords;
        const size_t b = g.basis[k].node;
        for (int i = 0; i < 2; ++i)
          for (int m = 0; m <= n[i]; ++m)
            EXPECT_EQ(divided_power_membership(*U, n, g.basis[k].coords, i, m), C.graph().eps[b][i] >= m);
      }
    }
  // G(b*) = G(b)* up to the scalar relating the representatives.
  for (const auto& [b, x] : G) {
    const Content& n = C.graph().grade[b];
    const HalfElt sx = HalfAlgebra::star_half(U->element(x, n));
    ASSERT_GE(star.target[b], 0);
    EXPECT_EQ(U->coords(sx, n), scaled(G[star.target[b]], Scalar(star.scale[b]))) << "b" << b;
  }
}
