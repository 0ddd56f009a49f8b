#include <gtest/gtest.h>

#include "vtcrystal/cartan.hpp"

using namespace vtc;

using IntMat = std::vector<std::vector<int>>;

TEST(Cartan, A1) {
  CartanDatum a1(IntMat{{1}});
  EXPECT_EQ(a1.rank(), 1);
  EXPECT_EQ(a1.cartan(0, 0), 2);
  EXPECT_EQ(a1.D(), 2);
  // k acts on y_Lambda by v^{<h,Lambda>} = v.
  EXPECT_EQ(a1.k_scalar(0, false, {1}, {0}), vpow(1));
  EXPECT_EQ(a1.k_scalar(0, true, {1}, {0}), vpow(-1));
}

TEST(Cartan, A2) {
  CartanDatum a2({{1, -1}, {0, 1}});
  EXPECT_EQ(a2.D(), 3);
  EXPECT_EQ(a2.dot(0, 1), -1);
  EXPECT_EQ(a2.cartan(0, 1), -1);
  EXPECT_EQ(a2.cartan(1, 0), -1);
  EXPECT_EQ(a2.left_pairing(0, 0), 1);   // <1, Lambda_1> = 1/3
  EXPECT_EQ(a2.right_pairing(0, 0), 2);  // <Lambda_1, 1> = 2/3
  EXPECT_EQ(a2.k_scalar(0, false, {1, 0}, {0, 0}), vpow(1) * spow(-1));
  EXPECT_EQ(a2.fundamental_in_roots()[0], (std::vector<Rational>{Rational(2, 3), Rational(1, 3)}));
}

TEST(Cartan, KTimesKPrimeIsPureT) {
  CartanDatum b2({{1, -2}, {0, 2}});
  EXPECT_EQ(b2.cartan(0, 1), -2);
  EXPECT_EQ(b2.cartan(1, 0), -1);
  for (int i = 0; i < 2; ++i)
    for (int a = -2; a <= 2; ++a) {
      std::vector<int> c{1, 2}, m{a, -a - 1};
      Scalar kk = b2.k_scalar(i, false, c, m) * b2.k_scalar(i, true, c, m);
      EXPECT_EQ(kk, spow(2 * static_cast<int>(b2.twist(i, c, m))));
    }
}

TEST(Cartan, ShiftFactors) {
  CartanDatum a2({{1, -1}, {0, 1}});
  // Ad(k_1) on f_2 and the e' factor are mutually inverse in t only up to v.
  EXPECT_EQ(a2.ad_k_on_f(0, 1), vpow(1) * spow(3));
  EXPECT_EQ(a2.eprime_factor(0, 1, -1), vpow(1) * spow(-3));
  EXPECT_EQ(a2.eprime_factor(0, 0, -1), vpow(-2));
}

TEST(Cartan, Rejections) {
  EXPECT_THROW(CartanDatum({{2, 0}, {0, 2}}), ValidationError);
  EXPECT_THROW(CartanDatum({{1, 1}, {0, 1}}), ValidationError);
  EXPECT_THROW(CartanDatum({{2, -1}, {0, 1}}), ValidationError);  // (b): -1/2
  EXPECT_THROW(CartanDatum(IntMat{{0}}), ValidationError);
  EXPECT_THROW(CartanDatum({{1, 0}}), ValidationError);
  try {
    CartanDatum({{2, 1}, {0, 2}});
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_GE(e.problems.size(), 2u);
  }
  // Affine sl2 is singular and needs explicit pairings.
  EXPECT_THROW(CartanDatum({{1, -2}, {0, 1}}), ValidationError);
  PairingOverride p{2, {{1, 0}, {0, 1}}, {{1, 0}, {0, 1}}};
  EXPECT_NO_THROW(CartanDatum({{1, -2}, {0, 1}}, {}, p));
}
