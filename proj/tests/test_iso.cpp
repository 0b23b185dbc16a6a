#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "nmt/families.hpp"
#include "nmt/iso.hpp"
#include "oracles.hpp"

using namespace nmt;

namespace {

std::vector<Vertex> shuffled_vertices(int n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

std::vector<Color> shuffled_colours(int k, std::mt19937_64& rng) {
  std::vector<Color> perm(k + 1);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  return perm;
}

}  // namespace

TEST(Iso, SwappedColoursOfAMonochromaticClique) {
  const auto red = mono_clique(4, 1), blue = mono_clique(4, 2);
  EXPECT_EQ(canonical_key(red), canonical_key(blue));
  EXPECT_NE(canonical_key(red, ColorMode::Exact), canonical_key(blue, ColorMode::Exact));
  const auto cert = are_isomorphic(red, blue);
  ASSERT_TRUE(cert);
  EXPECT_EQ(cert->color_perm, (std::vector<Color>{0, 2, 1}));
  EXPECT_FALSE(are_isomorphic(red, blue, ColorMode::Exact));
}

TEST(Iso, DistinctTightShapes) {
  const auto sq = alternating_c4(), hp = h_m_plus(1);
  EXPECT_EQ(sq.n(), hp.n());
  EXPECT_NE(canonical_key(sq), canonical_key(hp));
  EXPECT_FALSE(are_isomorphic(sq, hp));
}

TEST(Iso, HmkWithTwoColoursMatchesHm) {
  for (int m = 1; m <= 5; ++m) {
    EXPECT_EQ(canonical_key(h_m_k(m, 2)), canonical_key(h_m(m)));
    EXPECT_TRUE(are_isomorphic(h_m_k(m, 2), h_m(m)));
  }
}

TEST(Iso, RelabelledHmKeepsKey) {
  std::mt19937_64 rng(1);
  const auto g = h_m(3);
  const auto key = canonical_key(g);
  for (int trial = 0; trial < 20; ++trial) {
    const auto h = oracle::relabel(g, shuffled_vertices(g.n(), rng), shuffled_colours(2, rng));
    EXPECT_EQ(canonical_key(h), key);
    const auto cert = are_isomorphic(g, h);
    ASSERT_TRUE(cert);
    EXPECT_EQ(apply(*cert, g), h);
  }
}

TEST(Iso, KeyEncodesOrderAndColours) {
  EXPECT_NE(canonical_key(ColoredGraph(3, 2)), canonical_key(ColoredGraph(4, 2)));
  EXPECT_NE(canonical_key(ColoredGraph(3, 2)), canonical_key(ColoredGraph(3, 3)));
  EXPECT_EQ(to_hex(std::string("\x01\xab", 2)), "01ab");
}

TEST(Iso, RecolorAppliesPermutation) {
  const auto g = recolor(alternating_c4(), {0, 2, 1});
  EXPECT_EQ(g.color(0, 1), 2);
  EXPECT_EQ(g.color(1, 2), 1);
}

TEST(IsoProperty, KeyInvariantUnderRelabelling) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const int k = 1 + static_cast<int>(rng() % 3);
    const auto g = oracle::random_graph(n, k, rng, 0.3 + 0.1 * static_cast<double>(rng() % 6));
    const auto h = oracle::relabel(g, shuffled_vertices(n, rng), shuffled_colours(k, rng));
    ASSERT_EQ(canonical_key(g), canonical_key(h)) << n << " " << k;
  }
}

TEST(IsoProperty, KeyAgreesWithBruteForceIsomorphism) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const int k = 1 + static_cast<int>(rng() % 3);
    const auto g = oracle::random_graph(n, k, rng, 0.5);
    // Half the time a near copy, so both outcomes are exercised.
    auto h = oracle::relabel(g, shuffled_vertices(n, rng), shuffled_colours(k, rng));
    if (rng() % 2) {
      const Vertex u = static_cast<Vertex>(rng() % n);
      Vertex v = static_cast<Vertex>(rng() % n);
      if (v == u) v = (u + 1) % n;
      h.set(u, v, static_cast<Color>(rng() % (k + 1)));
    }
    const bool expected = oracle::isomorphic(g, h);
    EXPECT_EQ(canonical_key(g) == canonical_key(h), expected);
    const auto cert = are_isomorphic(g, h);
    EXPECT_EQ(cert.has_value(), expected);
    if (cert) {
      EXPECT_EQ(apply(*cert, g), h);
      EXPECT_EQ(cert->color_perm[0], 0);
    }
  }
}
