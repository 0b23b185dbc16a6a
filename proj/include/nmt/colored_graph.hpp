#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace nmt {

using Vertex = int;
using Color = int;

// Pair value meaning "no edge". Edge colours are 1..k.
inline constexpr Color kAbsent = 0;
inline constexpr int kMaxColors = 255;

inline constexpr std::int64_t choose2(std::int64_t n) { return n < 2 ? 0 : n * (n - 1) / 2; }

// ---------------------------------------------------------------------------
// Ratio: exact non-negative rational, always stored reduced.
// ---------------------------------------------------------------------------
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  constexpr Ratio() = default;
  constexpr Ratio(std::int64_t p, std::int64_t q) : num(p), den(q) {
    if (q == 0) throw std::domain_error("Ratio: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    const auto g = std::gcd(num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  friend constexpr bool operator==(const Ratio& a, const Ratio& b) {
    return a.num == b.num && a.den == b.den;
  }
  friend constexpr std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    return a.num * b.den <=> b.num * a.den;
  }

  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

// ---------------------------------------------------------------------------
// VertexSet: sorted, duplicate-free list of vertex indices.
// ---------------------------------------------------------------------------
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> vs) : members_(vs) { normalize(); }
  explicit VertexSet(std::vector<Vertex> vs) : members_(std::move(vs)) { normalize(); }

  static VertexSet range(Vertex begin, Vertex end) {
    VertexSet s;
    for (Vertex v = begin; v < end; ++v) s.members_.push_back(v);
    return s;
  }

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }
  const std::vector<Vertex>& members() const { return members_; }

  bool contains(Vertex v) const { return std::binary_search(members_.begin(), members_.end(), v); }

  bool disjoint_from(const VertexSet& o) const {
    auto a = members_.begin();
    auto b = o.members_.begin();
    while (a != members_.end() && b != o.members_.end()) {
      if (*a == *b) return false;
      if (*a < *b) ++a; else ++b;
    }
    return true;
  }

  friend VertexSet operator|(const VertexSet& a, const VertexSet& b) {
    std::vector<Vertex> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void normalize() {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  }

  std::vector<Vertex> members_;
};

struct ColorStats {
  std::int64_t edge_total = 0;
  std::vector<std::int64_t> class_sizes;  // class_sizes[c-1] = |E_c|
  std::int64_t pair_total = 0;
};

// ---------------------------------------------------------------------------
// ColoredGraph: simple graph on vertices 0..n-1 whose edges are partitioned
// into k colour classes. Every unordered pair carries a value in {0..k}.
//
// Alongside the pair matrix the graph keeps one bit row per (colour, vertex)
// plus an "any colour" row, so common-neighbour queries are word ANDs.
// ---------------------------------------------------------------------------
class ColoredGraph {
 public:
  using Word = std::uint64_t;

  ColoredGraph() : ColoredGraph(0, 1) {}

  ColoredGraph(int n, int k) : n_(n), k_(k), words_((n + 63) / 64) {
    if (k < 1) throw std::invalid_argument("ColoredGraph: need at least one colour class");
    if (k > kMaxColors) throw std::invalid_argument("ColoredGraph: too many colour classes");
    if (n < 0) throw std::invalid_argument("ColoredGraph: negative vertex count");
    pair_.assign(static_cast<std::size_t>(n) * n, kAbsent);
    rows_.assign(static_cast<std::size_t>(k + 1) * n * words_, 0);
    class_size_.assign(k + 1, 0);
  }

  int n() const { return n_; }
  int k() const { return k_; }
  std::int64_t pair_count() const { return choose2(n_); }
  std::int64_t edge_count() const { return edges_; }

  std::int64_t class_size(Color c) const {
    check_color(c, false);
    return class_size_[c];
  }

  std::vector<std::int64_t> class_sizes() const {
    return {class_size_.begin() + 1, class_size_.end()};
  }

  ColorStats stats() const { return {edges_, class_sizes(), pair_count()}; }

  Color color(Vertex u, Vertex v) const {
    check_pair(u, v);
    return pair_[index(u, v)];
  }

  bool adjacent(Vertex u, Vertex v) const { return color(u, v) != kAbsent; }

  // Sets pair {u,v} to c (0 removes the edge). Overwrites any previous value.
  void set(Vertex u, Vertex v, Color c) {
    check_pair(u, v);
    check_color(c, true);
    const Color old = pair_[index(u, v)];
    if (old == c) return;
    if (old != kAbsent) {
      flip(old, u, v);
      flip(0, u, v);
      --class_size_[old];
      --edges_;
    }
    if (c != kAbsent) {
      flip(c, u, v);
      flip(0, u, v);
      ++class_size_[c];
      ++edges_;
    }
    pair_[index(u, v)] = pair_[index(v, u)] = static_cast<std::uint8_t>(c);
  }

  // Neighbourhood bit row of v in colour c; c == 0 selects every colour.
  std::span<const Word> row(Color c, Vertex v) const {
    return {rows_.data() + (static_cast<std::size_t>(c) * n_ + v) * words_, words_};
  }

  std::size_t words() const { return words_; }

  std::int64_t degree(Vertex v, Color c = 0) const {
    std::int64_t d = 0;
    for (Word w : row(c, v)) d += std::popcount(w);
    return d;
  }

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.pair_ == b.pair_;
  }

 private:
  std::size_t index(Vertex u, Vertex v) const { return static_cast<std::size_t>(u) * n_ + v; }

  void check_pair(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) throw std::out_of_range("ColoredGraph: vertex out of range");
    if (u == v) throw std::invalid_argument("ColoredGraph: self-pair");
  }

  void check_color(Color c, bool allow_absent) const {
    if (c < (allow_absent ? 0 : 1) || c > k_) throw std::out_of_range("ColoredGraph: colour out of range");
  }

  void flip(Color c, Vertex u, Vertex v) {
    auto* ru = rows_.data() + (static_cast<std::size_t>(c) * n_ + u) * words_;
    auto* rv = rows_.data() + (static_cast<std::size_t>(c) * n_ + v) * words_;
    ru[v / 64] ^= Word{1} << (v % 64);
    rv[u / 64] ^= Word{1} << (u % 64);
  }

  int n_;
  int k_;
  std::size_t words_;
  std::int64_t edges_ = 0;
  std::vector<std::uint8_t> pair_;
  std::vector<Word> rows_;
  std::vector<std::int64_t> class_size_;
};

// ---------------------------------------------------------------------------
// Counting primitives
// ---------------------------------------------------------------------------

inline Ratio density(const ColoredGraph& g) {
  if (g.n() < 2) throw std::domain_error("density: needs at least two vertices");
  return Ratio(g.edge_count(), g.pair_count());
}

namespace detail {

inline void check_members(const ColoredGraph& g, const VertexSet& x) {
  if (!x.empty() && (x[0] < 0 || x[x.size() - 1] >= g.n()))
    throw std::out_of_range("vertex set exceeds graph");
}

// color == 0 counts every edge.
inline std::int64_t within(const ColoredGraph& g, const VertexSet& x, Color c) {
  check_members(g, x);
  std::int64_t count = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const Color p = g.color(x[i], x[j]);
      if (p != kAbsent && (c == 0 || p == c)) ++count;
    }
  return count;
}

inline std::int64_t between(const ColoredGraph& g, const VertexSet& x, const VertexSet& y, Color c) {
  check_members(g, x);
  check_members(g, y);
  if (!x.disjoint_from(y)) throw std::invalid_argument("edges_between: sets overlap");
  std::int64_t count = 0;
  for (Vertex u : x)
    for (Vertex v : y) {
      const Color p = g.color(u, v);
      if (p != kAbsent && (c == 0 || p == c)) ++count;
    }
  return count;
}

}  // namespace detail

inline std::int64_t edges_within(const ColoredGraph& g, const VertexSet& x) {
  return detail::within(g, x, 0);
}

inline std::int64_t edges_within(const ColoredGraph& g, const VertexSet& x, Color c) {
  if (c < 1 || c > g.k()) throw std::out_of_range("edges_within: colour out of range");
  return detail::within(g, x, c);
}

inline std::int64_t edges_between(const ColoredGraph& g, const VertexSet& x, const VertexSet& y) {
  return detail::between(g, x, y, 0);
}

inline std::int64_t edges_between(const ColoredGraph& g, const VertexSet& x, const VertexSet& y, Color c) {
  if (c < 1 || c > g.k()) throw std::out_of_range("edges_between: colour out of range");
  return detail::between(g, x, y, c);
}

// Subgraph induced by x, relabelled 0..|x|-1 in ascending original order.
inline ColoredGraph induced(const ColoredGraph& g, const VertexSet& x) {
  detail::check_members(g, x);
  ColoredGraph h(static_cast<int>(x.size()), g.k());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j)
      if (Color c = g.color(x[i], x[j]); c != kAbsent) h.set(static_cast<Vertex>(i), static_cast<Vertex>(j), c);
  return h;
}

// Connected components, ordered by their smallest vertex.
inline std::vector<VertexSet> components(const ColoredGraph& g) {
  std::vector<int> comp(g.n(), -1);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < g.n(); ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    std::vector<Vertex> members{s};
    comp[s] = id;
    for (std::size_t head = 0; head < members.size(); ++head) {
      const Vertex u = members[head];
      for (Vertex v = 0; v < g.n(); ++v)
        if (v != u && comp[v] < 0 && g.adjacent(u, v)) {
          comp[v] = id;
          members.push_back(v);
        }
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

// Exact independence number by maximum clique search on the complement,
// bounded by a greedy colouring of the candidate set. Supports n <= 64.
inline int independence_number(const ColoredGraph& g) {
  using Mask = std::uint64_t;
  const int n = g.n();
  if (n == 0) return 0;
  if (n > 64) throw std::length_error("independence_number: supports at most 64 vertices");

  // nonadj[v]: vertices other than v not adjacent to v (the complement graph).
  std::vector<Mask> nonadj(n);
  const Mask all = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  for (Vertex v = 0; v < n; ++v) nonadj[v] = all & ~g.row(0, v)[0] & ~(Mask{1} << v);

  int best = 0;
  auto expand = [&](auto&& self, int size, Mask candidates) -> void {
    if (candidates == 0) {
      best = std::max(best, size);
      return;
    }
    // Greedy colouring into complement-independent classes gives an upper bound
    // on the clique that can be completed from each vertex in order.
    std::vector<Vertex> order;
    std::vector<int> bound;
    Mask uncoloured = candidates;
    int colour = 0;
    while (uncoloured) {
      ++colour;
      Mask avail = uncoloured;
      while (avail) {
        const Vertex v = std::countr_zero(avail);
        avail &= ~(Mask{1} << v) & ~nonadj[v];
        uncoloured &= ~(Mask{1} << v);
        order.push_back(v);
        bound.push_back(colour);
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (size + bound[i] <= best) return;
      const Vertex v = order[i];
      self(self, size + 1, candidates & nonadj[v]);
      candidates &= ~(Mask{1} << v);
    }
  };
  expand(expand, 0, all);
  return best;
}

}  // namespace nmt
