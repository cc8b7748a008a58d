#include "dhall/errors.hpp"
#include "dhall/homotopy.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace dhall;

namespace {

using Comps = std::vector<LFType::Orders>;

const LFType kPoint{{{}}};

LFType random_type(std::mt19937_64& rng, std::size_t max_components = 4) {
  std::vector<LFType::Orders> comps(1 + rng() % max_components);
  for (auto& o : comps) {
    o.resize(rng() % 4);
    for (auto& v : o) v = 1 + rng() % 4;
  }
  return LFType(std::move(comps));
}

LFMap random_map(const LFType& x, const LFType& y, std::mt19937_64& rng) {
  std::vector<std::size_t> m(x.size());
  for (auto& v : m) v = rng() % y.size();
  return LFMap(x, y, std::move(m));
}

FnFinSupp random_function(const LFType& x, std::mt19937_64& rng) {
  FnFinSupp f(x.size());
  for (std::size_t c = 0; c < x.size(); ++c) f.set(c, Rational(static_cast<long>(rng() % 11) - 5, 1 + rng() % 4));
  return f;
}

}  // namespace

TEST(LFType, RejectsZeroOrders) { EXPECT_THROW(LFType(Comps{{0}}), std::invalid_argument); }

TEST(LFType, AlternatingWeight) {
  EXPECT_EQ(homotopy_weight({}), Rational(1));
  EXPECT_EQ(homotopy_weight({2}), Rational(1, 2));
  EXPECT_EQ(homotopy_weight({2, 3}), Rational(3, 2));
  EXPECT_EQ(homotopy_weight({2, 3, 5}), Rational(3, 10));
}

TEST(Pushforward, WorkedValues) {
  const LFType x(Comps{{2}});
  const LFMap to_point(x, kPoint, {0});
  EXPECT_EQ(pushforward_l1(to_point, FnFinSupp::constant(1, 1))(0), Rational(1, 2));
  const LFType y(Comps{{2, 3}});
  EXPECT_EQ(pushforward_l1(LFMap(y, kPoint, {0}), FnFinSupp::constant(1, 1))(0), Rational(3, 2));
}

TEST(Pushforward, IdentityIsIdentity) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 50; ++i) {
    const LFType x = random_type(rng);
    const FnFinSupp a = random_function(x, rng);
    EXPECT_EQ(pushforward_l1(LFMap::identity(x), a), a);
    EXPECT_EQ(pullback(LFMap::identity(x), a), a);
  }
}

TEST(PushforwardFibers, WorkedValues) {
  // Projection F x Y -> Y with pi_1(F) of order 2.
  const LFType fiber(Comps{{2}}), base(Comps{{}, {}});
  const FnFinSupp one = FnFinSupp::constant(2, 1);
  const auto pushed = pushforward_fibers(projection_fibers(fiber, base), one);
  EXPECT_EQ(pushed(0), Rational(1, 2));
  EXPECT_EQ(pushed(1), Rational(1, 2));

  // Fiber a point: relabelling.
  FiberPresentation relabel{2, {{{{}, 1}}, {{{}, 0}}}};
  const FnFinSupp a(2, {{0, Rational(3)}, {1, Rational(7)}});
  EXPECT_EQ(pushforward_fibers(relabel, a)(0), Rational(7));
  EXPECT_EQ(pushforward_fibers(relabel, a)(1), Rational(3));

  // Two contractible fiber components over one point.
  FiberPresentation two{2, {{{{}, 0}, {{}, 1}}}};
  EXPECT_EQ(pushforward_fibers(two, FnFinSupp::constant(2, 1))(0), Rational(2));
  EXPECT_THROW(pushforward_fibers(two, FnFinSupp::constant(3, 1)), MismatchError);
}

TEST(Pullback, WorkedValues) {
  const LFType two(Comps{{}, {}});
  const LFMap onto(two, kPoint, {0, 0});
  const auto pulled = pullback(onto, FnFinSupp::constant(1, 5));
  EXPECT_EQ(pulled(0), Rational(5));
  EXPECT_EQ(pulled(1), Rational(5));
  EXPECT_TRUE(is_proper(onto));
  EXPECT_TRUE(is_proper(LFMap(LFType(Comps{{}, {}, {}}), kPoint, {0, 0, 0})));
}

TEST(Pushforward, Functoriality) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 500; ++i) {
    const LFType x = random_type(rng), y = random_type(rng), z = random_type(rng);
    const LFMap f = random_map(x, y, rng), g = random_map(y, z, rng);
    const FnFinSupp a = random_function(x, rng);
    EXPECT_EQ(pushforward_l1(compose(g, f), a), pushforward_l1(g, pushforward_l1(f, a)));
  }
}

TEST(Pushforward, Linearity) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const LFType x = random_type(rng), y = random_type(rng);
    const LFMap f = random_map(x, y, rng);
    const FnFinSupp a = random_function(x, rng), b = random_function(x, rng);
    const Rational s(static_cast<long>(rng() % 7) - 3, 2);
    EXPECT_EQ(pushforward_l1(f, a + b.scaled(s)), pushforward_l1(f, a) + pushforward_l1(f, b).scaled(s));
    const FnFinSupp c = random_function(y, rng), d = random_function(y, rng);
    EXPECT_EQ(pullback(f, c + d.scaled(s)), pullback(f, c) + pullback(f, d).scaled(s));
  }
}

TEST(Pushforward, BaseChangeOnProductSquares) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 500; ++i) {
    const LFType fiber = random_type(rng, 3), base = random_type(rng), base2 = random_type(rng);
    const LFMap u = random_map(base2, base, rng);
    const FnFinSupp a = random_function(product(fiber, base), rng);
    const LFMap f = projection(fiber, base), f2 = projection(fiber, base2);
    EXPECT_EQ(pullback(u, pushforward_l1(f, a)), pushforward_l1(f2, pullback(product_map(fiber, u), a)));
  }
}

TEST(Pushforward, FiberFormulaMatchesOrderFormulaOnProducts) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 500; ++i) {
    const LFType fiber = random_type(rng, 3), base = random_type(rng);
    const FnFinSupp a = random_function(product(fiber, base), rng);
    EXPECT_EQ(pushforward_l1(projection(fiber, base), a), pushforward_fibers(projection_fibers(fiber, base), a));
  }
}

TEST(Product, OrdersMultiplyDegreewise) {
  const LFType f(Comps{{2, 3}}), y(Comps{{5}, {}});
  const LFType p = product(f, y);
  ASSERT_EQ(p.size(), 2u);
  EXPECT_EQ(p.weight(0), Rational(3, 10));
  EXPECT_EQ(p.weight(1), Rational(3, 2));
}

TEST(LFMap, ValidatesComponentMap) {
  EXPECT_THROW(LFMap(LFType(Comps{{}, {}}), kPoint, {0}), std::invalid_argument);
  EXPECT_THROW(LFMap(LFType(Comps{{}}), kPoint, {1}), std::invalid_argument);
  EXPECT_THROW(compose(LFMap::identity(kPoint), LFMap::identity(LFType(Comps{{}, {}}))), MismatchError);
}
