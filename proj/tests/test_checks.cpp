#include <gtest/gtest.h>

#include "vtcrystal/checks.hpp"

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
  static const CartanDatum d(IntMat{{1, -2}, {0, 2}});
  return d;
}

void expect_ok(const CheckReport& r) {
  EXPECT_TRUE(r.ok) << r.name << ": " << (r.failures.empty() ? "" : r.failures.front());
  EXPECT_GT(r.checked, 0u) << r.name;
}

}  // namespace

TEST(Checks, Serre) {
  expect_ok(serre_suite(a2(), 4));
  expect_ok(serre_suite(b2(), 4));
}

TEST(Checks, OperatorIdentities) { expect_ok(prop42_suite(a2(), 3, 1, 30)); }

TEST(Checks, ResolutionOfIdentitySl2) {
  for (int m = 1; m <= 4; ++m) expect_ok(lemma75_check(HWModule(sl2(), {m})));
}

TEST(Checks, ResolutionOfIdentityA2) {
  for (auto l : {std::vector<int>{1, 0}, {1, 1}, {2, 1}}) expect_ok(lemma75_check(HWModule(a2(), l)));
}

TEST(Checks, FormCongruence) { expect_ok(lemma56_check(a2(), {6, 6}, 2)); }
