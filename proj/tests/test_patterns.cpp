#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "nmt/families.hpp"
#include "nmt/patterns.hpp"
#include "oracles.hpp"

using namespace nmt;

namespace {

ColoredGraph triangle(Color a, Color b, Color c, int k = 2) {
  ColoredGraph g(3, k);
  g.set(0, 1, a);
  g.set(0, 2, b);
  g.set(1, 2, c);
  return g;
}

}  // namespace

TEST(Triangles, HmHasOnlyMonochromaticTriangles) {
  const auto ts = triangles(h_m(2));
  ASSERT_EQ(ts.size(), 4u);
  for (const auto& t : ts) EXPECT_EQ(t.profile, TriangleProfile::Monochromatic);
  // X_0 = {0,1}, X_1 = {2,3}, X_2 = {4,5}.
  EXPECT_EQ(ts[0].vertices, (std::array<Vertex, 3>{0, 2, 3}));
  EXPECT_EQ(ts[3].vertices, (std::array<Vertex, 3>{1, 4, 5}));
}

TEST(Triangles, SquaresAndCliques) {
  EXPECT_TRUE(triangles(alternating_c4()).empty());
  const auto ts = triangles(mono_clique(4, 2));
  ASSERT_EQ(ts.size(), 4u);
  for (const auto& t : ts) {
    EXPECT_EQ(t.profile, TriangleProfile::Monochromatic);
    EXPECT_EQ(t.colors, (std::array<Color, 3>{2, 2, 2}));
  }
}

TEST(Triangles, NonMonochromaticWitness) {
  const auto w = has_nonmono_triangle(triangle(1, 1, 2));
  ASSERT_TRUE(w);
  EXPECT_EQ(w->vertices, (std::array<Vertex, 3>{0, 1, 2}));
  EXPECT_EQ(w->profile, TriangleProfile::NonMonochromatic);

  const auto r = has_nonmono_triangle(triangle(1, 2, 3, 3));
  ASSERT_TRUE(r);
  EXPECT_EQ(r->profile, TriangleProfile::Rainbow);
  EXPECT_TRUE(r->nonmonochromatic());

  for (int m = 1; m <= 6; ++m) {
    EXPECT_FALSE(has_nonmono_triangle(h_m(m))) << m;
    EXPECT_FALSE(oracle::has_nonmono_triangle(h_m(m))) << m;
  }
}

TEST(TrianglesProperty, MatchesBruteForce) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = static_cast<int>(rng() % 9);
    const int k = 1 + static_cast<int>(rng() % 3);
    const auto g = oracle::random_graph(n, k, rng, 0.7);
    const auto ts = triangles(g);
    const auto expected = oracle::triangles(g);
    ASSERT_EQ(ts.size(), expected.size());
    bool any_nonmono = false;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      EXPECT_EQ(ts[i].vertices, expected[i]);
      any_nonmono |= ts[i].nonmonochromatic();
    }
    const auto w = has_nonmono_triangle(g);
    EXPECT_EQ(w.has_value(), oracle::has_nonmono_triangle(g));
    EXPECT_EQ(w.has_value(), any_nonmono);
    if (w) {
      // First non-monochromatic triangle of the ordered stream.
      auto first = std::find_if(ts.begin(), ts.end(), [](const auto& t) { return t.nonmonochromatic(); });
      EXPECT_EQ(w->vertices, first->vertices);
    }
  }
}

TEST(Seagulls, BasicConfigurations) {
  ColoredGraph path(3, 2);
  path.set(0, 1, 1);
  path.set(1, 2, 2);
  const auto s = seagulls(path);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].vertices, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(s[0].edges.size(), 2u);

  EXPECT_TRUE(seagulls(mono_clique(6, 1)).empty());
  EXPECT_EQ(seagulls(h_m(1)).size(), 1u);
  EXPECT_TRUE(seagulls(ColoredGraph(4, 1)).empty());

  // A non-induced coloured 2-path is not a seagull.
  EXPECT_TRUE(seagulls(triangle(1, 2, 1)).empty());
}

TEST(AlternatingSquares, Detection) {
  const auto a = alternating_squares(alternating_c4());
  ASSERT_EQ(a.size(), 1u);
  EXPECT_EQ(a[0].kind, PatternKind::AlternatingSquare);
  EXPECT_EQ(a[0].vertices, (std::vector<Vertex>{0, 1, 2, 3}));

  EXPECT_TRUE(alternating_squares(h_m_plus(1)).empty());

  ColoredGraph mono(4, 2);
  for (Vertex v = 0; v < 4; ++v) mono.set(v, (v + 1) % 4, 1);
  EXPECT_TRUE(alternating_squares(mono).empty());

  // Proper colouring with three colours does not alternate between two classes.
  ColoredGraph three(4, 3);
  three.set(0, 1, 1);
  three.set(1, 2, 2);
  three.set(2, 3, 1);
  three.set(0, 3, 3);
  EXPECT_TRUE(alternating_squares(three).empty());

  // A chord makes the square non-induced.
  auto chorded = alternating_c4();
  chorded.set(0, 2, 1);
  EXPECT_TRUE(alternating_squares(chorded).empty());
}

TEST(PatternsProperty, WitnessShapes) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = oracle::random_graph(2 + static_cast<int>(rng() % 7), 2 + static_cast<int>(rng() % 2), rng, 0.5);
    const auto gulls = seagulls(g);
    EXPECT_EQ(gulls.size(), oracle::seagulls(g).size());
    for (const auto& s : gulls) {
      ASSERT_EQ(s.edges.size(), 2u);
      EXPECT_NE(s.edges[0].c, s.edges[1].c);
    }
    for (const auto& sq : alternating_squares(g)) {
      ASSERT_EQ(sq.edges.size(), 4u);
      std::set<Color> palette;
      std::map<Vertex, std::set<Color>> seen;
      for (const auto& e : sq.edges) {
        palette.insert(e.c);
        seen[e.u].insert(e.c);
        seen[e.v].insert(e.c);
      }
      EXPECT_EQ(palette.size(), 2u);
      for (Vertex v : sq.vertices) EXPECT_EQ(seen[v].size(), 2u);
    }
  }
}

TEST(SeagullPacking, Examples) {
  const auto h2 = max_disjoint_seagulls(h_m(2), PackingMode::Exact);
  ASSERT_EQ(h2.size(), 2u);
  EXPECT_TRUE(h2[0].vertex_set().disjoint_from(h2[1].vertex_set()));
  EXPECT_TRUE(max_disjoint_seagulls(mono_clique(6, 1), PackingMode::Exact).empty());
  EXPECT_EQ(max_disjoint_seagulls(h_m(1), PackingMode::Exact).size(), 1u);
  EXPECT_EQ(max_disjoint_seagulls(h_m(4), PackingMode::Exact).size(), 4u);
}

TEST(SeagullPackingProperty, ExactIsMaximumAndDominatesGreedy) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 150; ++trial) {
    const auto g = oracle::random_graph(3 + static_cast<int>(rng() % 7), 2, rng, 0.45);
    const auto exact = max_disjoint_seagulls(g, PackingMode::Exact);
    const auto greedy = max_disjoint_seagulls(g, PackingMode::Greedy);
    EXPECT_EQ(static_cast<int>(exact.size()), oracle::max_seagull_packing(g));
    EXPECT_GE(exact.size(), greedy.size());
    for (const auto* packing : {&exact, &greedy})
      for (std::size_t i = 0; i < packing->size(); ++i)
        for (std::size_t j = i + 1; j < packing->size(); ++j)
          EXPECT_TRUE((*packing)[i].vertex_set().disjoint_from((*packing)[j].vertex_set()));
  }
}

TEST(Classification, MonochromaticAndRainbow) {
  const auto k5 = mono_clique(5, 1);
  EXPECT_TRUE(is_monochromatic(k5));
  EXPECT_FALSE(is_rainbow(k5));

  ColoredGraph c4(4, 4);
  for (Vertex v = 0; v < 4; ++v) c4.set(v, (v + 1) % 4, v + 1);
  EXPECT_TRUE(is_rainbow(c4));
  EXPECT_FALSE(is_monochromatic(c4));

  ColoredGraph single(2, 2);
  single.set(0, 1, 2);
  EXPECT_TRUE(is_monochromatic(single));
  EXPECT_TRUE(is_rainbow(single));

  EXPECT_TRUE(is_monochromatic(ColoredGraph(3, 2)));
}

// For graphs without a non-monochromatic triangle, no outside vertex meets
// all three vertices of a seagull.
TEST(PatternsProperty, OutsideVertexSeesAtMostTwoSeagullVertices) {
  std::mt19937_64 rng(3);
  int checked = 0;
  for (int trial = 0; trial < 3000 && checked < 300; ++trial) {
    const auto g = oracle::random_graph(5 + static_cast<int>(rng() % 4), 2, rng, 0.5);
    if (has_nonmono_triangle(g)) continue;
    ++checked;
    for (const auto& s : seagulls(g))
      for (Vertex v = 0; v < g.n(); ++v)
        if (!s.vertex_set().contains(v)) {
          EXPECT_LE(edges_between(g, VertexSet{v}, s.vertex_set()), 2);
        }
  }
  EXPECT_GT(checked, 0);
}
