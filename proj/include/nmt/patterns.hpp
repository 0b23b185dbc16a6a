#pragma once

#include <array>
#include <bit>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nmt/colored_graph.hpp"

namespace nmt {

enum class TriangleProfile { Monochromatic, NonMonochromatic, Rainbow };

inline const char* to_string(TriangleProfile p) {
  switch (p) {
    case TriangleProfile::Monochromatic: return "Monochromatic";
    case TriangleProfile::NonMonochromatic: return "NonMonochromatic";
    case TriangleProfile::Rainbow: return "Rainbow";
  }
  return "?";
}

struct TriangleWitness {
  std::array<Vertex, 3> vertices{};  // ascending
  std::array<Color, 3> colors{};     // pairs (0,1), (0,2), (1,2) of `vertices`
  TriangleProfile profile = TriangleProfile::Monochromatic;

  // Rainbow counts as non-monochromatic.
  bool nonmonochromatic() const { return profile != TriangleProfile::Monochromatic; }

  friend bool operator==(const TriangleWitness&, const TriangleWitness&) = default;
};

inline TriangleProfile classify_triangle(Color a, Color b, Color c) {
  if (a == b && b == c) return TriangleProfile::Monochromatic;
  if (a != b && b != c && a != c) return TriangleProfile::Rainbow;
  return TriangleProfile::NonMonochromatic;
}

inline TriangleWitness make_triangle(const ColoredGraph& g, Vertex a, Vertex b, Vertex c) {
  TriangleWitness t;
  t.vertices = {a, b, c};
  t.colors = {g.color(a, b), g.color(a, c), g.color(b, c)};
  t.profile = classify_triangle(t.colors[0], t.colors[1], t.colors[2]);
  return t;
}

namespace detail {

// Calls f(w) for every set bit w > after in (a & b & ~mask_out), ascending.
// Stops early when f returns true; returns whether it stopped.
template <class F>
bool scan_bits(std::span<const ColoredGraph::Word> a, std::span<const ColoredGraph::Word> b,
               const ColoredGraph::Word* mask_out_a, const ColoredGraph::Word* mask_out_b, Vertex after,
               F&& f) {
  const std::size_t first = static_cast<std::size_t>(after + 1) / 64;
  for (std::size_t i = first; i < a.size(); ++i) {
    auto word = a[i] & b[i];
    if (mask_out_a) word &= ~(mask_out_a[i] & mask_out_b[i]);
    if (i == first) {
      const int shift = (after + 1) % 64;
      word &= ~ColoredGraph::Word{0} << shift;
    }
    while (word) {
      const Vertex w = static_cast<Vertex>(i * 64 + std::countr_zero(word));
      if (f(w)) return true;
      word &= word - 1;
    }
  }
  return false;
}

}  // namespace detail

// Every triangle, ascending lexicographic by vertex triple.
inline std::vector<TriangleWitness> triangles(const ColoredGraph& g) {
  std::vector<TriangleWitness> out;
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v) {
      if (!g.adjacent(u, v)) continue;
      detail::scan_bits(g.row(0, u), g.row(0, v), nullptr, nullptr, v, [&](Vertex w) {
        out.push_back(make_triangle(g, u, v, w));
        return false;
      });
    }
  return out;
}

// Lexicographically first triangle that is not monochromatic.
inline std::optional<TriangleWitness> has_nonmono_triangle(const ColoredGraph& g) {
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v) {
      const Color c = g.color(u, v);
      if (c == kAbsent) continue;
      // w closes a non-monochromatic triangle unless both uw and vw have colour c.
      std::optional<TriangleWitness> found;
      detail::scan_bits(g.row(0, u), g.row(0, v), g.row(c, u).data(), g.row(c, v).data(), v,
                        [&](Vertex w) {
                          found = make_triangle(g, u, v, w);
                          return true;
                        });
      if (found) return found;
    }
  return std::nullopt;
}

inline bool is_monochromatic(const ColoredGraph& g) {
  for (Color c = 1; c <= g.k(); ++c)
    if (g.class_size(c) == g.edge_count()) return true;
  return false;
}

inline bool is_rainbow(const ColoredGraph& g) {
  for (Color c = 1; c <= g.k(); ++c)
    if (g.class_size(c) > 1) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Seagulls and alternating squares
// ---------------------------------------------------------------------------

enum class PatternKind { Seagull, AlternatingSquare };

struct ColoredPair {
  Vertex u = 0;
  Vertex v = 0;
  Color c = kAbsent;
  friend bool operator==(const ColoredPair&, const ColoredPair&) = default;
};

struct PatternWitness {
  PatternKind kind = PatternKind::Seagull;
  std::vector<Vertex> vertices;   // ascending
  std::vector<ColoredPair> edges;  // the induced edges, lexicographic by (u, v)

  VertexSet vertex_set() const { return VertexSet(vertices); }
  friend bool operator==(const PatternWitness&, const PatternWitness&) = default;
};

namespace detail {

inline PatternWitness collect(const ColoredGraph& g, PatternKind kind, std::vector<Vertex> vs) {
  PatternWitness p{kind, std::move(vs), {}};
  for (std::size_t i = 0; i < p.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < p.vertices.size(); ++j)
      if (Color c = g.color(p.vertices[i], p.vertices[j]); c != kAbsent)
        p.edges.push_back({p.vertices[i], p.vertices[j], c});
  return p;
}

}  // namespace detail

inline bool is_seagull(const ColoredGraph& g, Vertex a, Vertex b, Vertex c) {
  const Color x = g.color(a, b), y = g.color(a, c), z = g.color(b, c);
  const int edges = (x != kAbsent) + (y != kAbsent) + (z != kAbsent);
  if (edges != 2) return false;
  // The two present colours must differ.
  if (x == kAbsent) return y != z;
  if (y == kAbsent) return x != z;
  return x != y;
}

// Induced non-monochromatic 2-paths, ascending by vertex triple.
inline std::vector<PatternWitness> seagulls(const ColoredGraph& g) {
  std::vector<PatternWitness> out;
  if (g.k() < 2) return out;
  for (Vertex a = 0; a < g.n(); ++a)
    for (Vertex b = a + 1; b < g.n(); ++b)
      for (Vertex c = b + 1; c < g.n(); ++c)
        if (is_seagull(g, a, b, c)) out.push_back(detail::collect(g, PatternKind::Seagull, {a, b, c}));
  return out;
}

inline bool is_alternating_square(const ColoredGraph& g, const std::array<Vertex, 4>& q) {
  int edges = 0;
  std::array<int, 4> deg{};
  std::array<std::array<Color, 2>, 4> seen{};
  std::set<Color> palette;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const Color c = g.color(q[i], q[j]);
      if (c == kAbsent) continue;
      ++edges;
      if (deg[i] >= 2 || deg[j] >= 2) return false;
      seen[i][deg[i]++] = c;
      seen[j][deg[j]++] = c;
      palette.insert(c);
    }
  if (edges != 4 || palette.size() != 2) return false;
  // Four edges with every degree 2 is a 4-cycle; alternation means each vertex sees both colours.
  for (int i = 0; i < 4; ++i)
    if (deg[i] != 2 || seen[i][0] == seen[i][1]) return false;
  return true;
}

// Induced properly 2-coloured 4-cycles, ascending by vertex quadruple.
inline std::vector<PatternWitness> alternating_squares(const ColoredGraph& g) {
  std::vector<PatternWitness> out;
  const int n = g.n();
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex c = b + 1; c < n; ++c)
        for (Vertex d = c + 1; d < n; ++d)
          if (is_alternating_square(g, {a, b, c, d}))
            out.push_back(detail::collect(g, PatternKind::AlternatingSquare, {a, b, c, d}));
  return out;
}

// ---------------------------------------------------------------------------
// Disjoint seagull packings
// ---------------------------------------------------------------------------

enum class PackingMode { Exact, Greedy };

// Exact: a maximum packing, lexicographically first among maxima (in seagull
// stream order); n <= 64. Greedy: first-fit over the seagull stream.
inline std::vector<PatternWitness> max_disjoint_seagulls(const ColoredGraph& g, PackingMode mode) {
  const auto all = seagulls(g);
  if (mode == PackingMode::Greedy) {
    std::vector<bool> used(g.n(), false);
    std::vector<PatternWitness> out;
    for (const auto& s : all) {
      if (used[s.vertices[0]] || used[s.vertices[1]] || used[s.vertices[2]]) continue;
      for (Vertex v : s.vertices) used[v] = true;
      out.push_back(s);
    }
    return out;
  }

  if (g.n() > 64) throw std::length_error("max_disjoint_seagulls: exact mode supports at most 64 vertices");
  using Mask = std::uint64_t;
  std::vector<Mask> masks;
  masks.reserve(all.size());
  for (const auto& s : all) {
    Mask m = 0;
    for (Vertex v : s.vertices) m |= Mask{1} << v;
    masks.push_back(m);
  }

  std::vector<std::size_t> chosen, best;
  auto dfs = [&](auto&& self, std::size_t from, Mask used) -> void {
    if (chosen.size() > best.size()) best = chosen;
    const auto free_vertices = static_cast<std::size_t>(g.n() - std::popcount(used));
    if (chosen.size() + free_vertices / 3 <= best.size()) return;
    for (std::size_t i = from; i < masks.size(); ++i) {
      if (masks[i] & used) continue;
      chosen.push_back(i);
      self(self, i + 1, used | masks[i]);
      chosen.pop_back();
    }
  };
  dfs(dfs, 0, 0);

  std::vector<PatternWitness> out;
  for (auto i : best) out.push_back(all[i]);
  return out;
}

}  // namespace nmt
