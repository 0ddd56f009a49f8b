#include <gtest/gtest.h>

#include "vtcrystal/oracle/canonical_t1.hpp"
#include "vtcrystal/oracle/lie.hpp"
#include "vtcrystal/t1.hpp"

using namespace vtc;

namespace {

using IntMat = std::vector<std::vector<int>>;

const CartanDatum& a2() {
  static const CartanDatum d(IntMat{{1, -1}, {0, 1}});
  return d;
}
const CartanDatum& b2() {
  static const CartanDatum d(IntMat{{2, -2}, {0, 1}});
  return d;
}

}  // namespace

TEST(Oracle, Roots) {
  EXPECT_EQ(oracle::positive_roots(a2()).size(), 3u);
  EXPECT_EQ(oracle::positive_roots(b2()).size(), 4u);
  const CartanDatum g2(IntMat{{3, -3}, {0, 1}});
  EXPECT_EQ(oracle::positive_roots(g2).size(), 6u);
}

TEST(Oracle, Kostant) {
  const auto R = oracle::positive_roots(a2());
  EXPECT_EQ(oracle::kostant(R, {1, 1}), 2u);
  EXPECT_EQ(oracle::kostant(R, {2, 1}), 2u);
  EXPECT_EQ(oracle::kostant(R, {2, 2}), 3u);
  EXPECT_EQ(oracle::kostant(R, {3, 0}), 1u);
  const auto RB = oracle::positive_roots(b2());
  // B2 roots a1, a2, a1+a2, a1+2a2 (or the transpose).
  size_t total = 0;
  for (const auto& r : RB) total += r[0] + r[1];
  EXPECT_EQ(total, 7u);
}

TEST(Oracle, Freudenthal) {
  oracle::Freudenthal F(a2(), {1, 1});
  size_t total = 0;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; b <= 3; ++b) total += F.mult({a, b});
  EXPECT_EQ(total, 8u);
  EXPECT_EQ(F.mult({1, 1}), 2u);
  oracle::Freudenthal F2(a2(), {2, 0});
  size_t t2 = 0;
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; b <= 4; ++b) t2 += F2.mult({a, b});
  EXPECT_EQ(t2, 6u);
  oracle::Freudenthal FB(b2(), {1, 1});
  size_t tb = 0;
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; b <= 6; ++b) tb += FB.mult({a, b});
  EXPECT_EQ(tb, 16u);
}

TEST(Oracle, OneParamCanonical) {
  auto O = one_param_model(a2());
  for (auto n : {std::vector<int>{1, 1}, {2, 1}, {1, 2}, {2, 2}, {3, 1}}) {
    const auto can = O.canonical(n);
    EXPECT_EQ(can.size(), oracle::kostant(oracle::positive_roots(a2()), n));
    // Almost orthonormal: (b, b') in delta + vZ[[v]].
    for (size_t a = 0; a < can.size(); ++a)
      for (size_t b = 0; b < can.size(); ++b) {
        const FracV f = O.form(can[a], can[b]);
        ASSERT_FALSE(!f.is_zero() && f.valuation() < 0);
        const bool unit = !f.is_zero() && f.valuation() == 0;
        EXPECT_EQ(unit, a == b);
        if (unit) EXPECT_TRUE(f.value_at_zero() == Rational(1));
      }
  }
  auto OB = one_param_model(b2());
  EXPECT_THROW(OB.canonical({1, 1}), oracle::OracleUnavailable);
}

TEST(Oracle, T1Compare) {
  auto U = std::make_shared<HalfAlgebra>(a2(), 3);
  const Crystal C = build_crystal(U);
  auto O = one_param_model(a2());
  for (int h = 1; h <= 3; ++h)
    for (const auto& n : contents_of_height(2, h)) {
      const auto r = t1_compare(C, global_grade(C, n), O);
      EXPECT_TRUE(r.ok) << format_content(n) << ": " << (r.failures.empty() ? "" : r.failures[0]);
    }
}

TEST(Oracle, GlobalModuleCompat) {
  auto U = std::make_shared<HalfAlgebra>(a2(), 3);
  auto V = std::make_shared<HWModule>(a2(), std::vector<int>{1, 1});
  const Crystal B = build_crystal(U), Bl = build_crystal(V);
  const CheckReport r = module_compat_check(B, Bl, 3);
  EXPECT_TRUE(r.ok) << (r.failures.empty() ? "" : r.failures[0]);
  EXPECT_GT(r.checked, 10u);
}
