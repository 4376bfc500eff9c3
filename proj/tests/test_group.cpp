#include <gtest/gtest.h>

#include <numeric>

#include "nspg/group.hpp"
#include "oracles.hpp"

using namespace nspg;

TEST(Numbers, EulerPhi) {
  EXPECT_EQ(euler_phi(1), 1u);
  EXPECT_EQ(euler_phi(6), 2u);
  EXPECT_EQ(euler_phi(12), oracle::phi_by_gcd(12));
  EXPECT_EQ(euler_phi(12), 4u);
  for (std::uint64_t n = 1; n <= 200; ++n) EXPECT_EQ(euler_phi(n), oracle::phi_by_gcd(n)) << n;
  EXPECT_THROW(euler_phi(0), InvalidArgument);
}

TEST(Numbers, PrimePower) {
  EXPECT_FALSE(prime_power(1));
  EXPECT_FALSE(prime_power(6));
  EXPECT_FALSE(prime_power(12));
  const auto nine = prime_power(9);
  ASSERT_TRUE(nine);
  EXPECT_EQ(nine->first, 3u);
  EXPECT_EQ(nine->second, 2u);
  EXPECT_EQ(prime_power(64)->second, 6u);
  EXPECT_TRUE(is_prime(97));
  EXPECT_FALSE(is_prime(91));
}

TEST(MakeGroup, Cyclic) {
  const auto trivial = make_group(GroupSpec::cyclic(1));
  EXPECT_EQ(trivial.order(), 1u);
  const auto z6 = make_group(GroupSpec::cyclic(6));
  EXPECT_EQ(z6.order(), 6u);
  EXPECT_EQ(element_order(z6, 2), 3u);
  EXPECT_EQ(element_order(z6, 2), oracle::order_by_iteration(z6, 2));
  EXPECT_EQ(z6.multiply(4, 5), 3u);
  EXPECT_EQ(z6.inverse(2), 4u);
}

TEST(MakeGroup, KleinFour) {
  const auto v4 = make_group(GroupSpec::direct_product({GroupSpec::cyclic(2), GroupSpec::cyclic(2)}));
  EXPECT_EQ(v4.order(), 4u);
  for (Element a = 1; a < 4; ++a) EXPECT_EQ(element_order(v4, a), 2u);
  EXPECT_EQ(v4.name(), "Z2xZ2");
  EXPECT_EQ(v4.label(3), "(1,1)");
}

TEST(MakeGroup, Dihedral) {
  const auto d4 = make_group(GroupSpec::dihedral(4));
  EXPECT_EQ(d4.order(), 8u);
  EXPECT_EQ(d4.label(0), "e");
  EXPECT_EQ(d4.label(2), "r^2");
  EXPECT_EQ(d4.label(5), "sr");
  for (Element s = 4; s < 8; ++s) EXPECT_EQ(element_order(d4, s), 2u);
  EXPECT_EQ(element_order(d4, 1), 4u);
  // s r s^-1 = r^-1
  EXPECT_EQ(d4.multiply(d4.multiply(4, 1), d4.inverse(4)), 3u);
}

TEST(MakeGroup, SymmetricAndQuaternion) {
  const auto s3 = make_group(GroupSpec::symmetric(3));
  EXPECT_EQ(s3.order(), 6u);
  EXPECT_EQ(s3.label(0), "()");
  std::size_t involutions = 0;
  for (Element a = 0; a < 6; ++a) involutions += element_order(s3, a) == 2;
  EXPECT_EQ(involutions, 3u);

  const auto q8 = make_group(GroupSpec::quaternion8());
  EXPECT_EQ(q8.order(), 8u);
  std::size_t order_four = 0;
  for (Element a = 0; a < 8; ++a) order_four += element_order(q8, a) == 4;
  EXPECT_EQ(order_four, 6u);
  EXPECT_EQ(q8.label(1), "-1");
}

TEST(MakeGroup, ElementaryAbelian) {
  const auto e = make_group(GroupSpec::elementary_abelian(3, 2));
  EXPECT_EQ(e.order(), 9u);
  for (Element a = 1; a < 9; ++a) EXPECT_EQ(element_order(e, a), 3u);
}

TEST(MakeGroup, Deterministic) {
  const auto a = make_group(parse_group_spec("D5xZ2"));
  const auto b = make_group(parse_group_spec("D5xZ2"));
  EXPECT_TRUE(a.same_table(b));
  EXPECT_EQ(a.table(), b.table());
}

TEST(MakeGroup, Errors) {
  EXPECT_THROW(make_group(GroupSpec::cyclic(0)), InvalidArgument);
  EXPECT_THROW(make_group(GroupSpec::elementary_abelian(4, 2)), InvalidArgument);
  EXPECT_THROW(make_group(GroupSpec::cyclic(257)), BudgetExceeded);
  EXPECT_THROW(make_group(GroupSpec::symmetric(6)), BudgetExceeded);
  EXPECT_NO_THROW(make_group(GroupSpec::cyclic(257), GroupBudget{512, 5}));
}

TEST(CayleyTable, Valid) {
  const auto trivial = FiniteGroup::from_cayley_table({{0}}, "T");
  EXPECT_EQ(trivial.order(), 1u);
  const auto z2 = FiniteGroup::from_cayley_table({{0, 1}, {1, 0}}, "Z2");
  EXPECT_EQ(z2.order(), 2u);
  EXPECT_EQ(z2.inverse(1), 1u);
}

TEST(CayleyTable, IdentityMovedToFront) {
  // Z3 written with identity at index 2.
  const auto g = FiniteGroup::from_cayley_table({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}}, "Z3", {"a", "b", "c"});
  EXPECT_EQ(g.label(0), "c");
  for (Element a = 0; a < 3; ++a) EXPECT_EQ(g.multiply(0, a), a);
}

TEST(CayleyTable, Rejects) {
  EXPECT_THROW(FiniteGroup::from_cayley_table({{0, 1}, {1, 1}}, "bad"), InvalidGroup);
  EXPECT_THROW(FiniteGroup::from_cayley_table({}, "empty"), InvalidGroup);
  EXPECT_THROW(FiniteGroup::from_cayley_table({{0, 1}}, "ragged"), InvalidGroup);
  EXPECT_THROW(FiniteGroup::from_cayley_table({{0, 2}, {2, 0}}, "range"), InvalidGroup);
  // Latin square with identity but not associative (order 5 loop).
  EXPECT_THROW(FiniteGroup::from_cayley_table({{0, 1, 2, 3, 4},
                                               {1, 0, 3, 4, 2},
                                               {2, 4, 0, 1, 3},
                                               {3, 2, 4, 0, 1},
                                               {4, 3, 1, 2, 0}},
                                              "loop"),
               InvalidGroup);
}

TEST(ElementPower, Values) {
  const auto z6 = make_group(GroupSpec::cyclic(6));
  EXPECT_EQ(element_power(z6, 3, 0), kIdentity);
  EXPECT_EQ(element_power(z6, 2, 2), 4u);
  EXPECT_EQ(element_power(z6, 5, 4), 2u);  // 20 mod 6
  const auto s4 = make_group(GroupSpec::symmetric(4));
  for (Element a = 0; a < s4.order(); ++a) {
    Element x = kIdentity;
    for (std::uint64_t k = 0; k < 30; ++k) {
      EXPECT_EQ(element_power(s4, a, k), x);
      x = s4.multiply(x, a);
    }
  }
  EXPECT_THROW(element_order(z6, 6), InvalidArgument);
}

TEST(ElementOrder, MatchesIteration) {
  for (const char* spec : {"Z12", "D6", "S4", "Q8", "Z2xZ6", "E(2,3)"}) {
    const auto g = make_group(parse_group_spec(spec));
    for (Element a = 0; a < g.order(); ++a) {
      EXPECT_EQ(element_order(g, a), oracle::order_by_iteration(g, a)) << spec << " " << a;
      EXPECT_EQ(g.order() % element_order(g, a), 0u);
    }
  }
}

TEST(GroupAxioms, GeneratedFamilies) {
  for (const char* spec : {"Z7", "D3", "D8", "S3", "S4", "Q8", "E(3,2)", "Z2xD3", "Z4xZ4"}) {
    const auto g = make_group(parse_group_spec(spec));
    const auto n = g.order();
    for (Element a = 0; a < n; ++a) {
      EXPECT_EQ(g.multiply(a, g.inverse(a)), kIdentity);
      EXPECT_EQ(g.multiply(kIdentity, a), a);
      for (Element b = 0; b < n; ++b)
        for (Element c = 0; c < n; ++c)
          ASSERT_EQ(g.multiply(g.multiply(a, b), c), g.multiply(a, g.multiply(b, c))) << spec;
    }
  }
}

TEST(ParseSpec, RoundTrip) {
  for (const char* spec : {"Z1", "Z24", "D3", "S4", "Q8", "E(2,4)", "Z2xZ4", "Z2xD4xQ8"})
    EXPECT_EQ(parse_group_spec(spec).to_string(), spec);
  EXPECT_EQ(parse_group_spec("Z2xZ4"), GroupSpec::direct_product({GroupSpec::cyclic(2), GroupSpec::cyclic(4)}));
  EXPECT_EQ(spec_order(parse_group_spec("D4xS3")), 48u);
}

TEST(ParseSpec, Errors) {
  for (const char* bad : {"", "X3", "Z", "Zx", "Z2x", "Q7", "E(2,)", "E(2,3", "Z 4", "z4", "Z4xx"})
    EXPECT_THROW(parse_group_spec(bad), ParseError) << bad;
}
