#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pmc/crystal.hpp"
#include "pmc/product.hpp"

using namespace pmc;

TEST(Closure, FundamentalCrystalOfSL3) {
  const auto d = build_root_datum(CartanKind::A, 2);
  const MonomialOps ops(d);
  const auto g = closure(ops, {Monomial::y(d, 1, 1)});
  EXPECT_EQ(g.size(), 3u);
  EXPECT_EQ(g.num_edges(), 2u);
  const auto hw = highest_weights(ops, g);
  ASSERT_EQ(hw.size(), 1u);
  EXPECT_EQ(hw.front(), Monomial::y(d, 1, 1));
}

TEST(Closure, CeilingEnforced) {
  const auto d = build_root_datum(CartanKind::A, 3);
  const MonomialOps ops(d);
  try {
    closure(ops, {Monomial::y(d, 2, 0, 2)}, 5);
    FAIL() << "expected LimitExceeded";
  } catch (const LimitExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("closure exceeded limit"), std::string::npos);
  }
}

TEST(Closure, ViolationDetected) {
  const auto d = build_root_datum(CartanKind::A, 2);
  const MonomialOps ops(d);
  EXPECT_TRUE(closure_violation(ops, ElementSet<Monomial>{Monomial::y(d, 1, 1)}).has_value());
  EXPECT_FALSE(closure_violation(ops, closure(ops, {Monomial::y(d, 1, 1)}).as_set()).has_value());
}

TEST(Closure, HighestWeightsAgreeBetweenGraphAndSet) {
  std::mt19937 rng(4);
  const auto d = build_root_datum(CartanKind::A, 3);
  const MonomialOps ops(d);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = product_crystal(d, oracle::random_multiset(d, rng));
    EXPECT_EQ(highest_weights(ops, g), highest_weights(ops, g.as_set()));
  }
}

TEST(Strings, ExtendIsIdempotentSuperset) {
  const auto d = build_root_datum(CartanKind::A, 3);
  const MonomialOps ops(d);
  const ElementSet<Monomial> x{Monomial::y(d, 1, 1) * Monomial::y(d, 3, 1)};
  for (int i = 1; i <= 3; ++i) {
    const auto y = extend_strings(ops, i, x);
    EXPECT_TRUE(std::includes(y.begin(), y.end(), x.begin(), x.end()));
    EXPECT_EQ(extend_strings(ops, i, y), y);
  }
  EXPECT_EQ(extend_strings(ops, 1, x).size(), 2u);
  EXPECT_EQ(extend_strings(ops, 2, x).size(), 1u);
}

TEST(Strings, StringPropertyWitness) {
  const auto d = build_root_datum(CartanKind::A, 1);
  const MonomialOps ops(d);
  const auto ambient = closure(ops, {Monomial::y(d, 1, 1, 2)}).as_set(); // a 3-element string
  ASSERT_EQ(ambient.size(), 3u);
  const auto top = Monomial::y(d, 1, 1, 2);
  EXPECT_TRUE(string_property(ops, {top}, ambient).ok);
  EXPECT_TRUE(string_property(ops, ambient, ambient).ok);
  EXPECT_TRUE(string_property(ops, {}, ambient).ok);
  const auto mid = *ops.f(top, 1);
  const auto bad = string_property(ops, {top, mid}, ambient);
  EXPECT_FALSE(bad.ok);
  EXPECT_EQ(bad.vertex, 1);
  EXPECT_EQ(bad.offending.size(), 3u);
  EXPECT_EQ(bad.offending.front(), top);
}

TEST(Demazure, CrystalCharacterIsDemazureCharacter) {
  std::mt19937 rng(8);
  for (auto& d : {build_root_datum(CartanKind::A, 2), build_root_datum(CartanKind::A, 3)}) {
    const MonomialOps ops(d);
    for (int trial = 0; trial < 25; ++trial) {
      Weight lam = d.zero();
      std::uniform_int_distribution<int> c(0, 2);
      for (int i = 1; i <= d.num_vertices(); ++i) lam += c(rng) * d.varpi(i);
      const auto word = oracle::random_word(d, rng, 5);
      const auto xs = demazure_crystal(d, lam, word);
      EXPECT_EQ(character_of_set(ops, xs), apply_word(d, word, GroupAlgebraElement::exp(lam)));
    }
  }
}

TEST(Demazure, FullWordGivesIrreducible) {
  const auto d = build_root_datum(CartanKind::D, 4);
  const MonomialOps ops(d);
  const auto lam = d.varpi(2);
  const auto xs = demazure_crystal(d, lam, longest_element_word(d));
  EXPECT_EQ(xs.size(), 28u);
  EXPECT_FALSE(check_axioms(ops, xs).has_value());
}

TEST(Tensor, DecompositionMatchesCharacterProduct) {
  for (auto& d : {build_root_datum(CartanKind::A, 2), build_root_datum(CartanKind::A, 3)}) {
    const MonomialOps mops(d);
    const TensorOps<MonomialOps, MonomialOps> tops(mops, mops);
    for (int i = 1; i <= d.num_vertices(); ++i)
      for (int j = 1; j <= d.num_vertices(); ++j) {
        const auto a = fundamental_crystal(d, i, d.parity(i), 1);
        const auto b = fundamental_crystal(d, j, d.parity(j), 2);
        const auto t = tensor_crystal(tops, a, b);
        EXPECT_FALSE(check_axioms(tops, t.as_set()).has_value()) << *check_axioms(tops, t.as_set());
        std::map<Weight, std::int64_t> by_crystal;
        for (auto& x : highest_weights(tops, t)) by_crystal[tops.weight(x)] += 1;
        const auto expected = weyl_decompose(d, irreducible_character(d, d.varpi(i)) * irreducible_character(d, 2 * d.varpi(j)));
        EXPECT_EQ(by_crystal, expected) << d.name() << " " << i << "," << j;
      }
  }
}

TEST(Axioms, CheckerFlagsBrokenSets) {
  const auto d = build_root_datum(CartanKind::A, 2);
  const MonomialOps ops(d);
  const auto g = closure(ops, {Monomial::y(d, 1, 1)});
  EXPECT_FALSE(check_axioms(ops, g.as_set()).has_value());
  auto partial = g.as_set();
  partial.erase(partial.begin());
  EXPECT_TRUE(check_axioms(ops, partial).has_value());
}

TEST(Dot, DeterministicAndLabelled) {
  const auto d = build_root_datum(CartanKind::A, 2);
  const MonomialOps ops(d);
  const auto one = induced_graph(ops, ElementSet<Monomial>{Monomial::one(d)});
  EXPECT_EQ(to_dot(ops, one), "digraph crystal {\n  n0 [label=\"1\"];\n}\n");
  const auto g = closure(ops, {Monomial::y(d, 1, 1)});
  const auto text = to_dot(ops, g);
  EXPECT_EQ(text, to_dot(ops, closure(ops, {Monomial::y(d, 1, 1)})));
  EXPECT_NE(text.find("[label=\"1\"]"), std::string::npos);
  EXPECT_NE(text.find("[label=\"2\"]"), std::string::npos);
}
