#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pmc/product.hpp"
#include "pmc/truncation.hpp"

using namespace pmc;

namespace {

std::set<std::string> labels(const ElementSet<Monomial>& xs) {
  std::set<std::string> out;
  for (auto& x : xs) out.insert(x.str());
  return out;
}

std::map<Weight, std::int64_t> hw_weights(const RootDatum& d, const ElementSet<Monomial>& xs) {
  std::map<Weight, std::int64_t> out;
  for (auto& x : highest_weights(MonomialOps(d), xs)) out[x.weight()] += 1;
  return out;
}

} // namespace

TEST(Multiset, BasicsAndValidation) {
  const auto d = build_root_datum(CartanKind::A, 3);
  PointMultiset r{{{1, 3}, 1}, {{3, 1}, 2}};
  EXPECT_EQ(r.cardinality(), 3);
  EXPECT_EQ((r[{3, 1}]), 2);
  EXPECT_EQ(r.max_vertex(), 3);
  EXPECT_EQ(r.str(), "{(1,3), (3,1)^2}");
  EXPECT_EQ((r.shifted(2)[{3, 3}]), 2);
  EXPECT_NO_THROW(r.validate(d));
  PointMultiset bad{{{2, 1}, 1}};
  EXPECT_THROW(bad.validate(d), ValidationError);
  PointMultiset off{{{5, 1}, 1}};
  EXPECT_THROW(off.validate(d), ValidationError);
  EXPECT_THROW(r.add({1, 1}, -1), ValidationError);
}

TEST(Product, SL3Examples) {
  const auto d = build_root_datum(CartanKind::A, 2);
  const auto one = product_crystal(d, PointMultiset{{{1, 1}, 1}});
  EXPECT_EQ(labels(one.as_set()), (std::set<std::string>{"y_{1,1}", "y_{1,-1}^-1 y_{2,0}", "y_{2,-2}^-1"}));
  EXPECT_EQ(one.num_edges(), 2u);

  const auto two = product_crystal(d, PointMultiset{{{1, 1}, 2}});
  EXPECT_EQ(labels(two.as_set()),
            (std::set<std::string>{"y_{1,1}^2", "y_{1,-1}^-1 y_{1,1} y_{2,0}", "y_{1,-1}^-2 y_{2,0}^2", "y_{1,1} y_{2,-2}^-1",
                                   "y_{1,-1}^-1 y_{2,-2}^-1 y_{2,0}", "y_{2,-2}^-2"}));
  EXPECT_EQ(two.num_edges(), 6u);
  const auto hw = highest_weights(MonomialOps(d), two);
  ASSERT_EQ(hw.size(), 1u);
  EXPECT_EQ(hw.front(), Monomial::y(d, 1, 1, 2));
  EXPECT_EQ(hw_weights(d, two.as_set()), (std::map<Weight, std::int64_t>{{2 * d.varpi(1), 1}}));
}

TEST(Product, FundamentalCrystalsHaveWeylDimension) {
  for (auto& d : {build_root_datum(CartanKind::A, 3), build_root_datum(CartanKind::D, 4), build_root_datum(CartanKind::E6, 6)}) {
    for (int i = 1; i <= d.num_vertices(); ++i) {
      if (oracle::weyl_dimension(d, d.varpi(i)) > 400) continue;
      const auto g = fundamental_crystal(d, i, d.parity(i), 1);
      EXPECT_EQ(static_cast<std::int64_t>(g.size()), oracle::weyl_dimension(d, d.varpi(i))) << d.name() << " vertex " << i;
      EXPECT_EQ(highest_weights(MonomialOps(d), g).size(), 1u);
    }
  }
  const auto a = build_root_datum(CartanKind::A, 2);
  EXPECT_EQ(static_cast<std::int64_t>(fundamental_crystal(a, 1, 1, 3).size()), oracle::weyl_dimension(a, 3 * a.varpi(1)));
}

TEST(Product, TrichotomyForTwoVarpiTwo) {
  const auto d = build_root_datum(CartanKind::A, 3);
  const auto v2 = 2 * d.varpi(2), v13 = d.varpi(1) + d.varpi(3), zero = d.zero();
  for (std::int64_t k : {0, 2, 4}) {
    EXPECT_EQ(decompose(d, PointMultiset{{{2, k}, 2}}).multiplicities, (std::map<Weight, std::int64_t>{{v2, 1}}));
    EXPECT_EQ(decompose(d, PointMultiset{{{2, k}, 1}, {{2, k + 2}, 1}}).multiplicities,
              (std::map<Weight, std::int64_t>{{v2, 1}, {v13, 1}}));
    for (std::int64_t gap : {4, 6, 10})
      EXPECT_EQ(decompose(d, PointMultiset{{{2, k}, 1}, {{2, k + gap}, 1}}).multiplicities,
                (std::map<Weight, std::int64_t>{{v2, 1}, {v13, 1}, {zero, 1}}));
  }
}

TEST(Product, FarApartPointsGiveTensorProducts) {
  std::mt19937 rng(31);
  for (auto& d : {build_root_datum(CartanKind::A, 2), build_root_datum(CartanKind::A, 3)}) {
    for (int trial = 0; trial < 10; ++trial) {
      std::uniform_int_distribution<int> vertex(1, d.num_vertices());
      PointMultiset r;
      GroupAlgebraElement ch = GroupAlgebraElement::exp(d.zero());
      for (int k = 0; k < 3; ++k) {
        const int i = vertex(rng);
        r.add(i, 20 * k + d.parity(i));
        ch = ch * irreducible_character(d, d.varpi(i));
      }
      EXPECT_EQ(decompose(d, r).multiplicities, weyl_decompose(d, ch)) << r.str();
    }
  }
}

TEST(Product, SizeBoundsCardinality) {
  const auto d = build_root_datum(CartanKind::A, 3);
  const PointMultiset r{{{1, 3}, 1}, {{3, 1}, 1}, {{3, 3}, 1}};
  EXPECT_DOUBLE_EQ(product_size_bound(d, r), 64.0);
  EXPECT_LE(product_crystal_set(d, r).size(), 64u);
  EXPECT_THROW(product_crystal_set(d, r, 10), LimitExceeded);
}

TEST(Labels, SLabelReexpandsEveryElement) {
  std::mt19937 rng(12);
  for (auto& d : {build_root_datum(CartanKind::A, 3), build_root_datum(CartanKind::D, 4)}) {
    for (int trial = 0; trial < 12; ++trial) {
      const auto r = oracle::random_multiset(d, rng);
      for (auto& p : product_crystal_set(d, r)) {
        const auto s = s_label(d, r, p);
        EXPECT_EQ(monomial_from_label(d, r, s), p);
        for (auto& [q, m] : s.points()) EXPECT_GT(m, 0);
        const auto supp = r_support(d, r, p);
        for (auto& [q, m] : r.points()) EXPECT_TRUE(supp.contains(q));
      }
    }
  }
}

TEST(Labels, SLabelOfKnownElement) {
  const auto d = build_root_datum(CartanKind::A, 3);
  const PointMultiset r{{{1, 3}, 1}, {{3, 1}, 1}, {{3, 3}, 1}};
  const PointMultiset s{{{3, 1}, 1}};
  const auto p = monomial_from_label(d, r, s);
  EXPECT_EQ(p.str(), "y_{1,3} y_{2,2}");
  EXPECT_EQ(s_label(d, r, p), s);
}

TEST(Labels, NonMembersRejected) {
  const auto d = build_root_datum(CartanKind::A, 2);
  const PointMultiset r{{{1, 1}, 1}};
  EXPECT_THROW(s_label(d, r, Monomial::y(d, 1, 3)), ValidationError);
  EXPECT_THROW(s_label(d, r, Monomial::y(d, 1, 1) * z_monomial(d, 1, -1)), ValidationError);
}

TEST(Product, EmptyMultisetIsTrivial) {
  const auto d = build_root_datum(CartanKind::A, 2);
  const auto g = product_crystal(d, PointMultiset{});
  ASSERT_EQ(g.size(), 1u);
  EXPECT_EQ(g[0], Monomial::one(d));
  EXPECT_EQ(decompose(d, PointMultiset{}).multiplicities, (std::map<Weight, std::int64_t>{{d.zero(), 1}}));
}
