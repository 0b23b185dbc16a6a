#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "nmt/colored_graph.hpp"

namespace nmt {

// Extremal constructions with no non-monochromatic triangle.
//
// H_m^k: an independent core X_0 of size (k-1)m joined completely to k cliques
// X_1..X_k of size m each; colour class i is every edge touching X_i. H_m is
// H_m^2 and H_m^+ is H_m with one extra core vertex. Vertices are laid out as
// X_0, X_1, ..., X_k in ascending blocks.

enum class FamilyKind { MonoClique, AlternatingC4, Hm, HmPlus, Hmk };

struct FamilySpec {
  FamilyKind kind = FamilyKind::Hm;
  int m = 0;
  int k = 2;
  Color color = 1;  // MonoClique only
  int n = 0;
  // Half-open vertex ranges of X_0, X_1, ..., X_k (empty for MonoClique / AlternatingC4).
  std::vector<std::pair<Vertex, Vertex>> parts;

  VertexSet part(int i) const { return VertexSet::range(parts.at(i).first, parts.at(i).second); }

  static FamilySpec mono_clique(int n, Color c, int k = 2) {
    if (n < 0) throw std::invalid_argument("mono_clique: negative order");
    if (c < 1 || c > k) throw std::invalid_argument("mono_clique: colour must lie in 1..k");
    FamilySpec s{FamilyKind::MonoClique, 0, k, c, n, {}};
    return s;
  }

  static FamilySpec alternating_c4() { return {FamilyKind::AlternatingC4, 0, 2, 1, 4, {}}; }

  static FamilySpec hm(int m) { return cores(FamilyKind::Hm, m, 2, m); }
  static FamilySpec hm_plus(int m) { return cores(FamilyKind::HmPlus, m, 2, m + 1); }
  static FamilySpec hmk(int m, int k) {
    if (k < 1) throw std::invalid_argument("h_m_k: k must be positive");
    return cores(FamilyKind::Hmk, m, k, (k - 1) * m);
  }

  ColoredGraph build() const {
    ColoredGraph g(n, k);
    switch (kind) {
      case FamilyKind::MonoClique:
        for (Vertex u = 0; u < n; ++u)
          for (Vertex v = u + 1; v < n; ++v) g.set(u, v, color);
        break;
      case FamilyKind::AlternatingC4:
        g.set(0, 1, 1);
        g.set(1, 2, 2);
        g.set(2, 3, 1);
        g.set(0, 3, 2);
        break;
      default: {
        const auto [core_begin, core_end] = parts[0];
        for (Color i = 1; i <= k; ++i) {
          const auto [begin, end] = parts[i];
          for (Vertex x = begin; x < end; ++x) {
            for (Vertex y = x + 1; y < end; ++y) g.set(x, y, i);
            for (Vertex z = core_begin; z < core_end; ++z) g.set(z, x, i);
          }
        }
      }
    }
    return g;
  }

 private:
  static FamilySpec cores(FamilyKind kind, int m, int k, int core) {
    if (m < 1) throw std::invalid_argument("family: m must be positive");
    FamilySpec s{kind, m, k, 1, core + k * m, {}};
    s.parts.emplace_back(0, core);
    for (int i = 0; i < k; ++i) s.parts.emplace_back(core + i * m, core + (i + 1) * m);
    return s;
  }
};

inline ColoredGraph mono_clique(int n, Color c, int k = 2) { return FamilySpec::mono_clique(n, c, k).build(); }
inline ColoredGraph alternating_c4() { return FamilySpec::alternating_c4().build(); }
inline ColoredGraph h_m(int m) { return FamilySpec::hm(m).build(); }
inline ColoredGraph h_m_plus(int m) { return FamilySpec::hm_plus(m).build(); }
inline ColoredGraph h_m_k(int m, int k) { return FamilySpec::hmk(m, k).build(); }

// |E_i| of H_m^k: C(m,2) + (k-1)m^2.
inline std::int64_t predicted_class_size(std::int64_t m, std::int64_t k) {
  if (m < 1 || k < 1) throw std::invalid_argument("predicted_class_size: m and k must be positive");
  return choose2(m) + (k - 1) * m * m;
}

}  // namespace nmt
