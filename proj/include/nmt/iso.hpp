#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "nmt/colored_graph.hpp"

namespace nmt {

// Isomorphism of k-edge-coloured graphs: a vertex bijection that maps every
// colour class onto some colour class. Colour permutation is part of the
// notion; ColorMode::Exact pins colours and exists for debugging only.

enum class ColorMode { Permute, Exact };

struct IsoCertificate {
  std::vector<Vertex> vertex_map;  // g-vertex -> h-vertex
  std::vector<Color> color_perm;   // index 1..k; color_perm[0] == 0
  friend bool operator==(const IsoCertificate&, const IsoCertificate&) = default;
};

// Image of g under the certificate.
inline ColoredGraph apply(const IsoCertificate& cert, const ColoredGraph& g) {
  ColoredGraph h(g.n(), g.k());
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (Color c = g.color(u, v); c != kAbsent) h.set(cert.vertex_map[u], cert.vertex_map[v], cert.color_perm[c]);
  return h;
}

inline ColoredGraph recolor(const ColoredGraph& g, const std::vector<Color>& perm) {
  IsoCertificate id{std::vector<Vertex>(g.n()), perm};
  std::iota(id.vertex_map.begin(), id.vertex_map.end(), 0);
  return apply(id, g);
}

namespace detail {

// deg[v * k + (c-1)] = number of colour-c neighbours of v.
inline std::vector<int> color_degrees(const ColoredGraph& g) {
  std::vector<int> deg(static_cast<std::size_t>(g.n()) * g.k(), 0);
  for (Vertex v = 0; v < g.n(); ++v)
    for (Color c = 1; c <= g.k(); ++c) deg[static_cast<std::size_t>(v) * g.k() + c - 1] = static_cast<int>(g.degree(v, c));
  return deg;
}

}  // namespace detail

// Certificate mapping g onto h, or nullopt. Colour permutations are tried in
// lexicographic order, and for each the lexicographically least vertex map is
// returned, so the answer is deterministic.
inline std::optional<IsoCertificate> are_isomorphic(const ColoredGraph& g, const ColoredGraph& h,
                                                    ColorMode mode = ColorMode::Permute) {
  if (g.n() != h.n() || g.k() != h.k() || g.edge_count() != h.edge_count()) return std::nullopt;
  const int n = g.n(), k = g.k();
  const auto gdeg = detail::color_degrees(g);
  const auto hdeg = detail::color_degrees(h);

  std::vector<Color> perm(k + 1);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool sizes_match = true;
    for (Color c = 1; c <= k && sizes_match; ++c) sizes_match = g.class_size(c) == h.class_size(perm[c]);
    if (!sizes_match) continue;

    auto invariant_match = [&](Vertex v, Vertex t) {
      for (Color c = 1; c <= k; ++c)
        if (gdeg[static_cast<std::size_t>(v) * k + c - 1] != hdeg[static_cast<std::size_t>(t) * k + perm[c] - 1])
          return false;
      return true;
    };

    std::vector<Vertex> map(n, -1);
    std::vector<bool> taken(n, false);
    auto extend = [&](auto&& self, Vertex v) -> bool {
      if (v == n) return true;
      for (Vertex t = 0; t < n; ++t) {
        if (taken[t] || !invariant_match(v, t)) continue;
        bool ok = true;
        for (Vertex u = 0; u < v && ok; ++u) ok = perm[g.color(u, v)] == h.color(map[u], t);
        if (!ok) continue;
        map[v] = t;
        taken[t] = true;
        if (self(self, v + 1)) return true;
        taken[t] = false;
      }
      map[v] = -1;
      return false;
    };
    if (extend(extend, 0)) return IsoCertificate{std::move(map), perm};
  } while (mode == ColorMode::Permute && std::next_permutation(perm.begin() + 1, perm.end()));
  return std::nullopt;
}

namespace detail {

using Cell = std::vector<Vertex>;
using Partition = std::vector<Cell>;

// Iterated colour-degree refinement: split every cell by each vertex's count of
// colour-c neighbours in every current cell until the partition is equitable.
// Sub-cells are ordered by signature, so the result is isomorphism-invariant.
inline void refine(const ColoredGraph& g, Partition& p) {
  const int n = g.n(), k = g.k();
  std::vector<int> cell_of(n);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < p.size(); ++i)
      for (Vertex v : p[i]) cell_of[v] = static_cast<int>(i);
    const std::size_t width = p.size() * static_cast<std::size_t>(k);
    Partition next;
    next.reserve(n);
    for (const Cell& cell : p) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<int>, Vertex>> sig;
      sig.reserve(cell.size());
      for (Vertex v : cell) {
        std::vector<int> s(width, 0);
        for (Vertex u = 0; u < n; ++u)
          if (u != v)
            if (Color c = g.color(v, u); c != kAbsent) ++s[static_cast<std::size_t>(cell_of[u]) * k + c - 1];
        sig.emplace_back(std::move(s), v);
      }
      std::sort(sig.begin(), sig.end());
      Cell current{sig[0].second};
      for (std::size_t i = 1; i < sig.size(); ++i) {
        if (sig[i].first != sig[i - 1].first) {
          next.push_back(std::move(current));
          current.clear();
          changed = true;
        }
        current.push_back(sig[i].second);
      }
      next.push_back(std::move(current));
    }
    p = std::move(next);
  }
}

// Byte-wise unsigned order on keys.
inline bool key_less(const std::string& a, const std::string& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), [](char x, char y) {
    return static_cast<unsigned char>(x) < static_cast<unsigned char>(y);
  });
}

inline bool twins(const ColoredGraph& g, Vertex a, Vertex b) {
  for (Vertex x = 0; x < g.n(); ++x)
    if (x != a && x != b && g.color(a, x) != g.color(b, x)) return false;
  return true;
}

inline std::string encode(const ColoredGraph& g, const std::vector<Vertex>& order) {
  const int n = g.n();
  std::string key;
  key.reserve(3 + choose2(n));
  key.push_back(static_cast<char>(n & 0xff));
  key.push_back(static_cast<char>((n >> 8) & 0xff));
  key.push_back(static_cast<char>(g.k()));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) key.push_back(static_cast<char>(g.color(order[i], order[j])));
  return key;
}

// Least encoding over all labellings reachable by individualisation-refinement.
// Within a target cell only one vertex per twin class is individualised: the
// transposition of two twins is an automorphism fixing everything chosen so far.
inline std::string exact_canonical(const ColoredGraph& g) {
  std::string best;
  auto search = [&](auto&& self, Partition p) -> void {
    refine(g, p);
    const auto target = std::find_if(p.begin(), p.end(), [](const Cell& c) { return c.size() > 1; });
    if (target == p.end()) {
      std::vector<Vertex> order;
      for (const Cell& c : p) order.push_back(c[0]);
      auto enc = encode(g, order);
      if (best.empty() || key_less(enc, best)) best = std::move(enc);
      return;
    }
    const auto t = static_cast<std::size_t>(target - p.begin());
    std::vector<Vertex> tried;
    for (Vertex v : p[t]) {
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twins(g, u, v); })) continue;
      tried.push_back(v);
      Partition child;
      child.reserve(p.size() + 1);
      child.insert(child.end(), p.begin(), p.begin() + t);
      child.push_back({v});
      Cell rest;
      for (Vertex u : p[t])
        if (u != v) rest.push_back(u);
      child.push_back(std::move(rest));
      child.insert(child.end(), p.begin() + t + 1, p.end());
      self(self, std::move(child));
    }
  };
  Cell all(g.n());
  std::iota(all.begin(), all.end(), 0);
  search(search, g.n() == 0 ? Partition{} : Partition{all});
  if (g.n() == 0) best = encode(g, {});
  return best;
}

// Colour relabellings that list classes by non-increasing size; ties are
// enumerated in every order.
inline std::vector<std::vector<Color>> size_sorted_color_perms(const ColoredGraph& g) {
  const int k = g.k();
  std::vector<Color> by_size(k);
  std::iota(by_size.begin(), by_size.end(), 1);
  std::stable_sort(by_size.begin(), by_size.end(),
                   [&](Color a, Color b) { return g.class_size(a) > g.class_size(b); });
  std::vector<std::pair<int, int>> groups;  // [begin, end) in by_size
  for (int i = 0; i < k;) {
    int j = i + 1;
    while (j < k && g.class_size(by_size[j]) == g.class_size(by_size[i])) ++j;
    groups.emplace_back(i, j);
    i = j;
  }
  std::vector<std::vector<Color>> out;
  auto rec = [&](auto&& self, std::size_t gi) -> void {
    if (gi == groups.size()) {
      std::vector<Color> perm(k + 1, 0);
      for (int rank = 0; rank < k; ++rank) perm[by_size[rank]] = rank + 1;
      out.push_back(std::move(perm));
      return;
    }
    auto [b, e] = groups[gi];
    std::sort(by_size.begin() + b, by_size.begin() + e);
    do {
      self(self, gi + 1);
    } while (std::next_permutation(by_size.begin() + b, by_size.begin() + e));
  };
  rec(rec, 0);
  return out;
}

}  // namespace detail

// Byte string equal for two graphs exactly when they are isomorphic
// (with colour classes allowed to permute).
inline std::string canonical_key(const ColoredGraph& g, ColorMode mode = ColorMode::Permute) {
  if (mode == ColorMode::Exact) return detail::exact_canonical(g);
  std::string best;
  for (const auto& perm : detail::size_sorted_color_perms(g)) {
    auto key = detail::exact_canonical(recolor(g, perm));
    if (best.empty() || detail::key_less(key, best)) best = std::move(key);
  }
  return best;
}

inline std::string to_hex(const std::string& bytes) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (unsigned char b : bytes) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xf]);
  }
  return out;
}

}  // namespace nmt
