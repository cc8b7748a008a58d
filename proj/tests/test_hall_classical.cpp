#include "dhall/hall_classical.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace dhall;
using dhall::testing::make_heart;

namespace {

// [n choose k]_p
BigInt gaussian_binomial(int n, int k, std::uint32_t p) {
  BigInt num = 1, den = 1;
  for (int i = 0; i < k; ++i) {
    num *= ipower(p, static_cast<std::size_t>(n - i)) - 1;
    den *= ipower(p, static_cast<std::size_t>(i + 1)) - 1;
  }
  return num / den;
}

}  // namespace

TEST(ClassicalHall, SimpleSquaredIsQPlusOne) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto h = make_heart("A1", p);
    ClassicalHall hall(*h);
    const IsoClass s = IsoClass::single(0);
    EXPECT_EQ(hall.hall_number(s, s, s + s), BigInt(p + 1));
  }
}

// On A1 every object is S^n and g counts subspaces.
TEST(ClassicalHall, A1NumbersAreGaussianBinomials) {
  for (std::uint32_t p : {2u, 3u}) {
    auto h = make_heart("A1", p);
    ClassicalHall hall(*h);
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; a + b <= 4; ++b) {
        const IsoClass x = a ? IsoClass::single(0, a) : IsoClass{};
        const IsoClass y = b ? IsoClass::single(0, b) : IsoClass{};
        const IsoClass z = a + b ? IsoClass::single(0, a + b) : IsoClass{};
        EXPECT_EQ(hall.hall_number(x, y, z), gaussian_binomial(a + b, a, p));
      }
  }
}

TEST(ClassicalHall, A2Extensions) {
  auto h = make_heart("A2", 2);
  ClassicalHall hall(*h);
  const IsoClass s1 = IsoClass::single(0), s2 = IsoClass::single(1), x = IsoClass::single(2);
  // S2 is the only proper subobject of X, so X is an extension of S1 by S2.
  EXPECT_EQ(hall.hall_number(s2, s1, x), 1);
  EXPECT_EQ(hall.hall_number(s1, s2, x), 0);
  EXPECT_EQ(hall.hall_number(s1, s2, s1 + s2), 1);
  EXPECT_EQ(hall.hall_number(s2, s1, s1 + s2), 1);
  EXPECT_EQ(hall.hall_number(s1, s1, x), 0);  // dimension mismatch

  const HeartElement prod = hall.basis_product(s2, s1);
  EXPECT_EQ(prod.coefficient(x), 1);
  EXPECT_EQ(prod.coefficient(s1 + s2), 1);
  EXPECT_EQ(prod.size(), 2u);
}

// Riedtmann's formula summed over z:
// sum_z g_{x,y}^z |Aut x||Aut y| / |Aut z| = |Ext^1(y, x)| / |Hom(y, x)|.
TEST(ClassicalHall, WeightedSumMatchesExtOverHom) {
  for (const char* name : {"A2", "A3"}) {
    auto h = make_heart(name, 2);
    ClassicalHall hall(*h);
    const auto classes = h->classes_up_to(2);
    for (const auto& x : classes)
      for (const auto& y : classes) {
        Rational total = 0;
        for (const auto& [z, g] : hall.basis_product(x, y)) total += g / Rational(h->aut_order(z));
        total *= Rational(h->aut_order(x) * h->aut_order(y));
        const long e = static_cast<long>(h->ext1_dim(y, x)) - static_cast<long>(h->hom_dim(y, x));
        EXPECT_EQ(total, power(h->p(), e)) << name;
      }
  }
}

TEST(ClassicalHall, OrbitCheckEqualsHallNumber) {
  for (const char* name : {"A1", "A2", "A3"}) {
    for (std::uint32_t p : {2u, 3u}) {
      auto h = make_heart(name, p);
      ClassicalHall hall(*h);
      const auto classes = h->classes_up_to(2);
      for (const auto& x : classes)
        for (const auto& y : classes)
          for (const auto& [z, g] : hall.basis_product(x, y)) EXPECT_EQ(hall.orbit_check(x, y, z), g);
    }
  }
}

TEST(ClassicalHall, ProductIsAssociativeAndUnital) {
  auto h = make_heart("A2", 3);
  ClassicalHall hall(*h);
  const auto classes = h->classes_up_to(1);
  const HeartElement one = HeartElement::basis(IsoClass{});
  for (const auto& x : classes) {
    const auto a = HeartElement::basis(x);
    EXPECT_EQ(hall.product(one, a), a);
    EXPECT_EQ(hall.product(a, one), a);
    for (const auto& y : classes)
      for (const auto& z : classes) {
        const auto b = HeartElement::basis(y), c = HeartElement::basis(z);
        EXPECT_EQ(hall.product(hall.product(a, b), c), hall.product(a, hall.product(b, c)));
      }
  }
}
