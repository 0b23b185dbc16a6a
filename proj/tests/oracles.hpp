#pragma once

// Brute-force reference implementations used only by tests. They read the
// graph through color() alone and share no code path with the library
// algorithms they check.

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "nmt/colored_graph.hpp"

namespace oracle {

using nmt::Color;
using nmt::ColoredGraph;
using nmt::Vertex;

inline ColoredGraph random_graph(int n, int k, std::mt19937_64& rng, double edge_probability = 0.6) {
  ColoredGraph g(n, k);
  std::bernoulli_distribution edge(edge_probability);
  std::uniform_int_distribution<int> colour(1, k);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (edge(rng)) g.set(u, v, colour(rng));
  return g;
}

inline ColoredGraph relabel(const ColoredGraph& g, const std::vector<Vertex>& perm, const std::vector<Color>& cperm) {
  ColoredGraph h(g.n(), g.k());
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (Color c = g.color(u, v)) h.set(perm[u], perm[v], cperm[c]);
  return h;
}

// Triples (sorted) spanning three edges, in lexicographic order.
inline std::vector<std::array<Vertex, 3>> triangles(const ColoredGraph& g) {
  std::vector<std::array<Vertex, 3>> out;
  for (Vertex a = 0; a < g.n(); ++a)
    for (Vertex b = a + 1; b < g.n(); ++b)
      for (Vertex c = b + 1; c < g.n(); ++c)
        if (g.color(a, b) && g.color(a, c) && g.color(b, c)) out.push_back({a, b, c});
  return out;
}

inline bool has_nonmono_triangle(const ColoredGraph& g) {
  for (auto [a, b, c] : oracle::triangles(g)) {
    const Color x = g.color(a, b), y = g.color(a, c), z = g.color(b, c);
    if (!(x == y && y == z)) return true;
  }
  return false;
}

inline int independence_number(const ColoredGraph& g) {
  const int n = g.n();
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool independent = true;
    for (Vertex u = 0; u < n && independent; ++u)
      for (Vertex v = u + 1; v < n && independent; ++v)
        if ((s >> u & 1) && (s >> v & 1) && g.color(u, v)) independent = false;
    if (independent) best = std::max(best, std::popcount(s));
  }
  return best;
}

// All n! vertex maps times all k! colour maps.
inline bool isomorphic(const ColoredGraph& g, const ColoredGraph& h) {
  if (g.n() != h.n() || g.k() != h.k()) return false;
  std::vector<Vertex> perm(g.n());
  std::vector<Color> cperm(g.k() + 1);
  std::iota(cperm.begin(), cperm.end(), 0);
  do {
    std::iota(perm.begin(), perm.end(), 0);
    do {
      bool same = true;
      for (Vertex u = 0; u < g.n() && same; ++u)
        for (Vertex v = u + 1; v < g.n() && same; ++v) same = cperm[g.color(u, v)] == h.color(perm[u], perm[v]);
      if (same) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
  } while (std::next_permutation(cperm.begin() + 1, cperm.end()));
  return false;
}

inline std::vector<std::array<Vertex, 3>> seagulls(const ColoredGraph& g) {
  std::vector<std::array<Vertex, 3>> out;
  for (Vertex a = 0; a < g.n(); ++a)
    for (Vertex b = a + 1; b < g.n(); ++b)
      for (Vertex c = b + 1; c < g.n(); ++c) {
        std::vector<Color> present;
        for (Color x : {g.color(a, b), g.color(a, c), g.color(b, c)})
          if (x) present.push_back(x);
        if (present.size() == 2 && present[0] != present[1]) out.push_back({a, b, c});
      }
  return out;
}

// Size of a maximum vertex-disjoint family of seagulls, by unpruned recursion.
inline int max_seagull_packing(const ColoredGraph& g) {
  const auto all = oracle::seagulls(g);
  std::vector<bool> used(g.n(), false);
  int best = 0;
  auto rec = [&](auto&& self, std::size_t i, int size) -> void {
    best = std::max(best, size);
    for (std::size_t j = i; j < all.size(); ++j) {
      const auto& s = all[j];
      if (used[s[0]] || used[s[1]] || used[s[2]]) continue;
      for (Vertex v : s) used[v] = true;
      self(self, j + 1, size + 1);
      for (Vertex v : s) used[v] = false;
    }
  };
  rec(rec, 0, 0);
  return best;
}

}  // namespace oracle
