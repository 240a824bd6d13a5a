#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "pmc/cartan.hpp"

using namespace pmc;

namespace {

std::vector<RootDatum> all_data() {
  return {build_root_datum(CartanKind::A, 1),  build_root_datum(CartanKind::A, 2),  build_root_datum(CartanKind::A, 4),
          build_root_datum(CartanKind::D, 4),  build_root_datum(CartanKind::D, 5),  build_root_datum(CartanKind::E6, 6),
          build_root_datum(CartanKind::E7, 7), build_root_datum(CartanKind::E8, 8), build_root_datum(CartanKind::GL, 1),
          build_root_datum(CartanKind::GL, 4)};
}

} // namespace

TEST(Cartan, VertexAndLatticeCounts) {
  EXPECT_EQ(build_root_datum(CartanKind::A, 3).num_vertices(), 3);
  EXPECT_EQ(build_root_datum(CartanKind::D, 5).num_vertices(), 5);
  EXPECT_EQ(build_root_datum(CartanKind::E7, 7).num_vertices(), 7);
  const auto gl = build_root_datum(CartanKind::GL, 4);
  EXPECT_EQ(gl.num_vertices(), 3);
  EXPECT_EQ(gl.lattice_rank(), 4u);
  EXPECT_TRUE(gl.is_gl());
}

TEST(Cartan, InvalidRanksRejected) {
  EXPECT_THROW(build_root_datum(CartanKind::A, 0), ValidationError);
  EXPECT_THROW(build_root_datum(CartanKind::D, 3), ValidationError);
  EXPECT_THROW(build_root_datum(CartanKind::E6, 7), ValidationError);
  EXPECT_THROW(build_root_datum(CartanKind::GL, 0), ValidationError);
  EXPECT_THROW(parse_cartan_kind("B"), ValidationError);
  EXPECT_EQ(parse_cartan_kind("E8"), CartanKind::E8);
}

TEST(Cartan, ParityAlternatesAcrossEdges) {
  for (auto& d : all_data())
    for (int i = 1; i <= d.num_vertices(); ++i)
      for (int j : d.neighbours(i)) EXPECT_NE(d.parity(i), d.parity(j)) << d.name();
  const auto a = build_root_datum(CartanKind::A, 4);
  for (int i = 1; i <= 4; ++i) EXPECT_EQ(a.parity(i), i % 2);
}

TEST(Cartan, PairingMatchesCartanMatrix) {
  for (auto& d : all_data())
    for (int i = 1; i <= d.num_vertices(); ++i)
      for (int j = 1; j <= d.num_vertices(); ++j) {
        EXPECT_EQ(d.pairing(i, d.alpha(j)), oracle::cartan_entry(d, i, j)) << d.name();
        EXPECT_EQ(d.pairing(i, d.varpi(j)), i == j ? 1 : 0) << d.name();
      }
}

TEST(Cartan, DeterminantPairsToZero) {
  const auto gl = build_root_datum(CartanKind::GL, 5);
  ASSERT_TRUE(gl.det().has_value());
  for (int i = 1; i <= gl.num_vertices(); ++i) EXPECT_EQ(gl.pairing(i, *gl.det()), 0);
}

TEST(Cartan, ReflectionIsInvolutionFixingTheWall) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coord(-4, 4);
  for (auto& d : all_data()) {
    for (int trial = 0; trial < 20; ++trial) {
      Weight w = d.zero();
      for (std::size_t k = 0; k < d.lattice_rank(); ++k) w[k] = coord(rng);
      for (int i = 1; i <= d.num_vertices(); ++i) {
        EXPECT_EQ(d.reflect(i, d.reflect(i, w)), w);
        EXPECT_EQ(d.reflect(i, w) == w, d.pairing(i, w) == 0);
        EXPECT_EQ(d.pairing(i, d.reflect(i, w)), -d.pairing(i, w));
      }
    }
  }
}

TEST(Cartan, LongestWordLengthIsPositiveRootCount) {
  const std::vector<std::pair<RootDatum, std::size_t>> expected = {
      {build_root_datum(CartanKind::A, 3), 6},   {build_root_datum(CartanKind::A, 5), 15},
      {build_root_datum(CartanKind::D, 4), 12},  {build_root_datum(CartanKind::D, 5), 20},
      {build_root_datum(CartanKind::E6, 6), 36}, {build_root_datum(CartanKind::E7, 7), 63},
      {build_root_datum(CartanKind::E8, 8), 120}, {build_root_datum(CartanKind::GL, 4), 6}};
  for (auto& [d, count] : expected) {
    EXPECT_EQ(oracle::positive_roots(d).size(), count) << d.name();
    const auto w0 = longest_element_word(d);
    EXPECT_EQ(w0.size(), count) << d.name();
    // w0 sends the dominant chamber to the antidominant one
    const auto img = d.act(w0, d.rho());
    for (int i = 1; i <= d.num_vertices(); ++i) EXPECT_LT(d.pairing(i, img), 0) << d.name();
  }
}

TEST(Cartan, DominantRepresentativeIsMinimal) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coord(-3, 3);
  for (auto& d : {build_root_datum(CartanKind::A, 3), build_root_datum(CartanKind::D, 4), build_root_datum(CartanKind::GL, 3)}) {
    for (int trial = 0; trial < 40; ++trial) {
      Weight w = d.zero();
      for (std::size_t k = 0; k < d.lattice_rank(); ++k) w[k] = coord(rng);
      const auto [dom, word] = dominant_representative(d, w);
      EXPECT_TRUE(d.is_dominant(dom));
      EXPECT_EQ(d.act(word, dom), w);
      EXPECT_EQ(word.size(), oracle::inversion_count(d, w)) << w.str();
    }
  }
}

TEST(Cartan, RootOrder) {
  const auto d = build_root_datum(CartanKind::A, 3);
  EXPECT_TRUE(d.root_order_leq(d.zero(), d.alpha(2)));
  EXPECT_FALSE(d.root_order_leq(d.alpha(2), d.zero()));
  EXPECT_FALSE(d.root_order_leq(d.zero(), d.varpi(1)));
  EXPECT_TRUE(d.root_order_leq(d.varpi(1) - d.alpha(1) - d.alpha(2), d.varpi(1)));
  const auto rc = d.root_coordinates(d.alpha(1) + d.alpha(3));
  ASSERT_TRUE(rc.has_value());
  EXPECT_EQ(*rc, (std::vector<std::int64_t>{1, 0, 1}));
}

TEST(Cartan, HeightIncreasesAlongSimpleRoots) {
  for (auto& d : all_data()) {
    if (d.num_vertices() == 0) continue;
    const auto h = d.height(d.alpha(1));
    EXPECT_GT(h, 0) << d.name();
    for (int i = 2; i <= d.num_vertices(); ++i) EXPECT_EQ(d.height(d.alpha(i)), h) << d.name();
  }
}
