#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "nmt/colored_graph.hpp"
#include "nmt/families.hpp"
#include "nmt/iso.hpp"
#include "nmt/patterns.hpp"

namespace nmt {

// Every predicate here is exact integer arithmetic over |V|, |E| and the
// colour class sizes. The count-level overloads take class_sizes[c-1] = |E_c|
// and are what the search engine evaluates on partial colourings.

using ClassSizes = std::span<const std::int64_t>;

namespace detail {
inline std::int64_t total(ClassSizes s) {
  std::int64_t t = 0;
  for (auto x : s) t += x;
  return t;
}
}  // namespace detail

// Mantel: |E| > n^2 / 4.
inline bool mantel_premise(std::int64_t n, std::int64_t edges) { return 4 * edges > n * n; }

// |E| + min_i |E_i| against C(n,2). For k != 2 the minimum runs over all k
// classes, which generalises the two-colour statement.
inline std::int64_t main_lhs(ClassSizes s) {
  return detail::total(s) + (s.empty() ? 0 : *std::min_element(s.begin(), s.end()));
}
inline bool main_premise_strict(std::int64_t n, ClassSizes s) { return main_lhs(s) > choose2(n); }
inline bool main_premise_weak(std::int64_t n, ClassSizes s) { return main_lhs(s) >= choose2(n); }

// 3|E_i| > C(n,2) for every class (stated for k = 2).
inline bool corollary_premise(std::int64_t n, ClassSizes s) {
  return std::all_of(s.begin(), s.end(), [&](std::int64_t x) { return 3 * x > choose2(n); });
}

// 2|E| - max_i |E_i| against n^2/2 (Square) or against C(n,2) (Binomial; the
// tempting stronger form, refuted by a rainbow 4-cycle).
enum class Conj1Threshold { Square, Binomial };

inline bool conjecture1_premise(std::int64_t n, ClassSizes s, Conj1Threshold t = Conj1Threshold::Square) {
  const std::int64_t lhs = 2 * detail::total(s) - (s.empty() ? 0 : *std::max_element(s.begin(), s.end()));
  return t == Conj1Threshold::Square ? 2 * lhs > n * n : lhs > choose2(n);
}

// |E_i| > n^2 / (4k - 2) for every class; `weak` relaxes to >=.
inline bool conjecture2_premise(std::int64_t n, ClassSizes s, bool weak = false) {
  const auto k = static_cast<std::int64_t>(s.size());
  return std::all_of(s.begin(), s.end(), [&](std::int64_t x) {
    return weak ? (4 * k - 2) * x >= n * n : (4 * k - 2) * x > n * n;
  });
}

// 3|E| >= n(n-1), i.e. density at least 2/3.
inline bool dense_two_thirds(std::int64_t n, std::int64_t edges) { return 3 * edges >= n * (n - 1); }

// Graph-level forms.
inline bool mantel_premise(const ColoredGraph& g) { return mantel_premise(g.n(), g.edge_count()); }
inline bool main_premise_strict(const ColoredGraph& g) { return main_premise_strict(g.n(), g.class_sizes()); }
inline bool main_premise_weak(const ColoredGraph& g) { return main_premise_weak(g.n(), g.class_sizes()); }
inline bool corollary_premise(const ColoredGraph& g) {
  if (g.k() != 2) throw std::invalid_argument("corollary_premise: defined for two colours");
  return corollary_premise(g.n(), g.class_sizes());
}
inline bool conjecture1_premise(const ColoredGraph& g, Conj1Threshold t = Conj1Threshold::Square) {
  return conjecture1_premise(g.n(), g.class_sizes(), t);
}
inline bool conjecture2_premise(const ColoredGraph& g, bool weak = false) {
  return conjecture2_premise(g.n(), g.class_sizes(), weak);
}

// True when a main-premise evaluation used the k-class generalisation.
inline bool generalized_colours(const ColoredGraph& g) { return g.k() != 2; }

// ---------------------------------------------------------------------------
// Tight-case classification
// ---------------------------------------------------------------------------

enum class TightKind { HasNonMonoTriangle, MonoClique, AlternatingSquare, FamilyHm, FamilyHmPlus, Violation };

struct TightClass {
  TightKind kind = TightKind::Violation;
  int m = 0;
  std::optional<TriangleWitness> witness;

  std::string label() const {
    switch (kind) {
      case TightKind::HasNonMonoTriangle: return "HasNonMonoTriangle";
      case TightKind::MonoClique: return "MonoClique";
      case TightKind::AlternatingSquare: return "AlternatingSquare";
      case TightKind::FamilyHm: return "FamilyHm(" + std::to_string(m) + ")";
      case TightKind::FamilyHmPlus: return "FamilyHmPlus(" + std::to_string(m) + ")";
      case TightKind::Violation: return "Violation";
    }
    return "?";
  }
};

// Which of the four outcomes a two-coloured graph with
// |E| + min(|E_1|,|E_2|) >= C(n,2) falls into. Connectivity is not assumed.
// Violation would be a counterexample to the characterisation.
inline TightClass classify_tight(const ColoredGraph& g) {
  if (g.k() != 2) throw std::invalid_argument("classify_tight: defined for two colours");
  if (!main_premise_weak(g)) throw std::invalid_argument("classify_tight: |E| + min|E_i| < C(n,2)");

  if (auto w = has_nonmono_triangle(g)) return {TightKind::HasNonMonoTriangle, 0, w};
  if (g.edge_count() == g.pair_count() && is_monochromatic(g)) return {TightKind::MonoClique, 0, std::nullopt};

  const int n = g.n();
  std::optional<std::string> key;
  auto matches = [&](const ColoredGraph& candidate) {
    if (candidate.edge_count() != g.edge_count()) return false;
    if (!key) key = canonical_key(g);
    return canonical_key(candidate) == *key;
  };
  if (n == 4 && matches(alternating_c4())) return {TightKind::AlternatingSquare, 0, std::nullopt};
  if (n >= 3 && n % 3 == 0 && matches(h_m(n / 3))) return {TightKind::FamilyHm, n / 3, std::nullopt};
  if (n >= 4 && n % 3 == 1 && matches(h_m_plus((n - 1) / 3)))
    return {TightKind::FamilyHmPlus, (n - 1) / 3, std::nullopt};
  return {TightKind::Violation, 0, std::nullopt};
}

// ---------------------------------------------------------------------------
// Component / independence bound for dense graphs
// ---------------------------------------------------------------------------

struct LemmaViolation {
  ColoredGraph graph;
  std::string reason;
};

// For n >= 2 and density >= 2/3 (colours ignored): some component G' has
// 3|V(G')| > 2n and alpha(G') + 1 <= 2|V(G')| - n. Returns the failure, if any.
inline std::optional<LemmaViolation> lemma1_check(const ColoredGraph& g) {
  const std::int64_t n = g.n();
  if (n < 2) throw std::invalid_argument("lemma1_check: needs at least two vertices");
  if (!dense_two_thirds(n, g.edge_count())) throw std::invalid_argument("lemma1_check: density below 2/3");

  bool large_component = false;
  for (const auto& comp : components(g)) {
    const auto size = static_cast<std::int64_t>(comp.size());
    if (3 * size <= 2 * n) continue;
    large_component = true;
    if (independence_number(induced(g, comp)) + 1 <= 2 * size - n) return std::nullopt;
  }
  return LemmaViolation{g, large_component ? "independence bound fails on every large component"
                                           : "no component exceeds two thirds of the vertices"};
}

// ---------------------------------------------------------------------------
// Audits of the structural claims about seagulls
// ---------------------------------------------------------------------------

struct ClaimViolation {
  int claim = 0;  // 2: outside vertex sees all of a seagull; 4: two-seagull bounds
  std::vector<Vertex> vertices;
  std::string detail;
};

struct ClaimAuditReport {
  bool claim2_applies = false;  // no non-monochromatic triangle
  bool claim4_applies = false;  // additionally two colours and no alternating square
  std::int64_t claim2_checked = 0;    // (seagull, outside vertex) pairs
  std::int64_t claim4_checked = 0;    // unordered disjoint seagull pairs
  std::int64_t claim4_saturated = 0;  // pairs with r + b = 6
  std::vector<ClaimViolation> violations;
};

inline const std::string& h2_key() {
  static const std::string key = canonical_key(h_m(2));
  return key;
}

// Checks, on whatever hypotheses g satisfies:
//  - no non-mono triangle: every vertex outside a seagull X has at most 2 edges to X;
//  - also no alternating square (k = 2): for disjoint seagulls S1, S2 with
//    r red and b blue edges between them, r + b <= 6, r + b + max(r, b) <= 9,
//    and r + b = 6 forces G[S1 u S2] to be H_2.
inline ClaimAuditReport claim_audit(const ColoredGraph& g) {
  ClaimAuditReport report;
  if (has_nonmono_triangle(g)) return report;
  report.claim2_applies = true;

  const auto gulls = seagulls(g);
  for (const auto& s : gulls) {
    const auto x = s.vertex_set();
    for (Vertex v = 0; v < g.n(); ++v) {
      if (x.contains(v)) continue;
      ++report.claim2_checked;
      if (edges_between(g, VertexSet{v}, x) > 2)
        report.violations.push_back({2, {s.vertices[0], s.vertices[1], s.vertices[2], v}, "outside vertex adjacent to all three"});
    }
  }

  if (g.k() != 2 || !alternating_squares(g).empty()) return report;
  report.claim4_applies = true;
  for (std::size_t i = 0; i < gulls.size(); ++i) {
    const auto s1 = gulls[i].vertex_set();
    for (std::size_t j = i + 1; j < gulls.size(); ++j) {
      const auto s2 = gulls[j].vertex_set();
      if (!s1.disjoint_from(s2)) continue;
      ++report.claim4_checked;
      const auto r = edges_between(g, s1, s2, 1);
      const auto b = edges_between(g, s1, s2, 2);
      std::vector<Vertex> both = (s1 | s2).members();
      if (r + b > 6) report.violations.push_back({4, both, "r + b > 6"});
      if (r + b + std::max(r, b) > 9) report.violations.push_back({4, both, "r + b + max(r, b) > 9"});
      if (r + b == 6) {
        ++report.claim4_saturated;
        if (canonical_key(induced(g, s1 | s2)) != h2_key())
          report.violations.push_back({4, both, "r + b = 6 but the six vertices do not induce H_2"});
      }
    }
  }
  return report;
}

}  // namespace nmt
