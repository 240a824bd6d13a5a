#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pmc/monomial.hpp"
#include "pmc/product.hpp"

using namespace pmc;

TEST(Monomial, ParityEnforced) {
  const auto d = build_root_datum(CartanKind::A, 3);
  EXPECT_TRUE(parity_respecting(d, {1, 3}));
  EXPECT_FALSE(parity_respecting(d, {2, 3}));
  EXPECT_FALSE(parity_respecting(d, {4, 0}));
  EXPECT_THROW(Monomial::y(d, 2, 1), ValidationError);
  EXPECT_THROW(z_monomial(d, 1, 0), ValidationError);
  EXPECT_NO_THROW(Monomial::y(d, 2, -2));
}

TEST(Monomial, ZMonomialShape) {
  const auto d = build_root_datum(CartanKind::D, 4);
  const auto z = z_monomial(d, 2, 5);
  EXPECT_EQ(z.weight(), d.alpha(2));
  EXPECT_EQ(z.exponent(2, 5), 1);
  EXPECT_EQ(z.exponent(2, 7), 1);
  for (int j : {1, 3, 4}) EXPECT_EQ(z.exponent(j, 6), -1);
  EXPECT_EQ(z.terms().size(), 5u);
  EXPECT_TRUE(is_valid_monomial(d, z));
}

TEST(Monomial, GroupOperations) {
  const auto d = build_root_datum(CartanKind::A, 2);
  const auto a = Monomial::y(d, 1, 1) * Monomial::y(d, 2, 0, 2);
  const auto b = z_monomial(d, 1, -1);
  EXPECT_EQ(a * a.inverse(), Monomial::one(d));
  EXPECT_EQ((a * b) / b, a);
  EXPECT_EQ(a.pow(3), a * a * a);
  EXPECT_EQ(a.pow(0), Monomial::one(d));
  EXPECT_EQ(a.str(), "y_{1,1} y_{2,0}^2");
  EXPECT_EQ(Monomial::one(d).str(), "1");
}

TEST(Monomial, ValidityChecksColumnSums) {
  const auto d = build_root_datum(CartanKind::A, 2);
  Monomial bad(d.varpi(1), {{1, 1, 1}, {2, 0, 1}});
  std::string why;
  EXPECT_FALSE(is_valid_monomial(d, bad, &why));
  EXPECT_NE(why.find("column 2"), std::string::npos);
  EXPECT_TRUE(is_valid_monomial(d, Monomial::y(d, 1, 1) / Monomial::y(d, 2, 4)));
}

TEST(ColumnStats, HandComputed) {
  const auto d = build_root_datum(CartanKind::A, 1);
  // column: c=-1: -1, c=1: +2, c=3: -1, c=5: +1
  Monomial p(Weight{1}, {{1, -1, -1}, {1, 1, 2}, {1, 3, -1}, {1, 5, 1}});
  const auto s = column_stats(p, 1);
  // suffix sums from the top: 1, 0, 2, 1 -> max 2 first reached at c=1
  EXPECT_EQ(s.phi, 2);
  EXPECT_EQ(s.f_index, 1);
  // negated prefix sums from the bottom: 1, -1, 0, -1 -> max 1 at c=-1
  EXPECT_EQ(s.epsilon, 1);
  EXPECT_EQ(s.e_index, -1);
  EXPECT_EQ(s.phi - s.epsilon, d.pairing(1, p.weight()));
  const auto empty = column_stats(Monomial::one(d), 1);
  EXPECT_EQ(empty.phi, 0);
  EXPECT_FALSE(empty.f_index.has_value());
}

TEST(Operators, FundamentalStringInSL3) {
  const auto d = build_root_datum(CartanKind::A, 2);
  const auto top = Monomial::y(d, 1, 1);
  const auto f1 = f_op(d, top, 1);
  ASSERT_TRUE(f1.has_value());
  EXPECT_EQ(f1->str(), "y_{1,-1}^-1 y_{2,0}");
  EXPECT_FALSE(f_op(d, top, 2).has_value());
  const auto f21 = f_op(d, *f1, 2);
  ASSERT_TRUE(f21.has_value());
  EXPECT_EQ(f21->str(), "y_{2,-2}^-1");
  EXPECT_FALSE(f_op(d, *f21, 1).has_value());
  EXPECT_FALSE(f_op(d, *f21, 2).has_value());
  EXPECT_EQ(e_op(d, *f21, 2), f1);
}

TEST(Operators, InverseAndWeightShiftOnRandomMonomials) {
  std::mt19937 rng(99);
  for (auto& d : {build_root_datum(CartanKind::A, 3), build_root_datum(CartanKind::D, 4)}) {
    const MonomialOps ops(d);
    for (int trial = 0; trial < 15; ++trial) {
      const auto r = oracle::random_multiset(d, rng, 2, 2);
      for (auto& p : product_crystal_set(d, r)) {
        ASSERT_TRUE(is_valid_monomial(d, p));
        for (int i = 1; i <= d.num_vertices(); ++i) {
          EXPECT_EQ(ops.phi(p, i) - ops.epsilon(p, i), d.pairing(i, p.weight()));
          if (auto q = ops.f(p, i)) {
            EXPECT_EQ(q->weight(), p.weight() - d.alpha(i));
            EXPECT_EQ(ops.e(*q, i), p);
            EXPECT_TRUE(is_valid_monomial(d, *q));
          }
          if (auto q = ops.e(p, i)) {
            EXPECT_EQ(q->weight(), p.weight() + d.alpha(i));
            EXPECT_EQ(ops.f(*q, i), p);
          }
        }
      }
    }
  }
}
