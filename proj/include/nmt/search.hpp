#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "nmt/colored_graph.hpp"
#include "nmt/iso.hpp"
#include "nmt/patterns.hpp"
#include "nmt/theorems.hpp"

namespace nmt {

// Exhaustive sweeps over every assignment of {0..k} to the C(n,2) vertex
// pairs. Pairs are ordered (0,1), (0,2), ..., (n-2,n-1) and leaves are visited
// in lexicographic order of the value vector.

inline constexpr std::uint64_t kDefaultBudget = 1'000'000'000;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SearchMode { VerifyTheorem, CharacterizeTight, VerifyLemma, HuntConjecture1, HuntConjecture2, AuditClaims };

inline const char* mode_name(SearchMode m) {
  switch (m) {
    case SearchMode::VerifyTheorem: return "theorem";
    case SearchMode::CharacterizeTight: return "tight";
    case SearchMode::VerifyLemma: return "lemma";
    case SearchMode::HuntConjecture1: return "conj1";
    case SearchMode::HuntConjecture2: return "conj2";
    case SearchMode::AuditClaims: return "claims";
  }
  return "?";
}

inline std::optional<SearchMode> parse_mode(const std::string& s) {
  for (auto m : {SearchMode::VerifyTheorem, SearchMode::CharacterizeTight, SearchMode::VerifyLemma,
                 SearchMode::HuntConjecture1, SearchMode::HuntConjecture2, SearchMode::AuditClaims})
    if (s == mode_name(m)) return m;
  return std::nullopt;
}

struct SearchSpec {
  int n = 0;
  int k = 2;  // forced to 1 for VerifyLemma
  SearchMode mode = SearchMode::VerifyTheorem;
  bool dedup = true;
  int shards = 1;
  std::uint64_t budget = kDefaultBudget;
  bool prune = true;
  Conj1Threshold conj1_threshold = Conj1Threshold::Square;
  bool conj2_weak = false;
  std::size_t max_listed = 1000;

  int value_count() const { return mode == SearchMode::VerifyLemma ? 2 : k + 1; }
  int colours() const { return mode == SearchMode::VerifyLemma ? 1 : k; }
};

using PairValues = std::vector<std::uint8_t>;

// One isomorphism class (or one labelled colouring, without dedup).
struct TightBucket {
  std::string key;  // raw key bytes
  std::string label;
  std::uint64_t multiplicity = 0;
  PairValues representative;  // lexicographically least member
};

struct Counterexample {
  PairValues values;
  ColoredGraph graph;
};

struct AuditTally {
  std::uint64_t claim2_checked = 0;
  std::uint64_t claim4_checked = 0;
  std::uint64_t claim4_saturated = 0;
  std::uint64_t violations = 0;
};

struct ShardTrace {
  int shard = 0;
  std::uint64_t enumerated = 0;
  double wall_time_ms = 0;
};

struct SearchReport {
  SearchSpec spec;
  std::uint64_t enumerated = 0;
  std::uint64_t premise_hits = 0;
  std::uint64_t conclusion_hits = 0;  // premise holds and so does the conclusion
  std::vector<TightBucket> tight_classes;  // sorted by key
  std::vector<Counterexample> counterexamples;  // first max_listed, lexicographic
  std::uint64_t counterexample_total = 0;
  AuditTally audit;
  double wall_time_ms = 0;
  std::vector<ShardTrace> trace;

  bool verified() const { return counterexample_total == 0; }
};

inline std::vector<std::pair<Vertex, Vertex>> pair_order(int n) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) out.emplace_back(u, v);
  return out;
}

inline ColoredGraph graph_from_values(int n, int k, const PairValues& values) {
  ColoredGraph g(n, k);
  const auto pairs = pair_order(n);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (values[i]) g.set(pairs[i].first, pairs[i].second, values[i]);
  return g;
}

// base^exp, or nullopt once it exceeds `limit`.
inline std::optional<std::uint64_t> bounded_power(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (r > limit / base) return std::nullopt;
    r *= base;
  }
  return r;
}

inline std::uint64_t domain_size_or_throw(int n, int values, std::uint64_t budget) {
  if (n < 1) throw std::invalid_argument("search: n must be at least 1");
  if (n > 64) throw std::invalid_argument("search: n must be at most 64");
  const auto pairs = static_cast<std::uint64_t>(choose2(n));
  auto size = bounded_power(values, pairs, budget);
  if (!size) {
    const long double approx = std::pow(static_cast<long double>(values), static_cast<long double>(pairs));
    throw BudgetExceeded("search domain " + std::to_string(values) + "^" + std::to_string(pairs) + " ~ " +
                         std::to_string(static_cast<double>(approx)) + " leaves exceeds the budget of " +
                         std::to_string(budget) + "; raise --budget to run it");
  }
  return *size;
}

// Visits every colouring of K_n with values {0..k}, in lexicographic order.
// The graph passed to the visitor is reused between calls.
template <class Visitor>
void enumerate_colorings(int n, int k, Visitor&& visit, std::uint64_t budget = kDefaultBudget) {
  domain_size_or_throw(n, k + 1, budget);
  const auto pairs = pair_order(n);
  ColoredGraph g(n, k);
  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (depth == pairs.size()) {
      visit(static_cast<const ColoredGraph&>(g));
      return;
    }
    for (Color c = 0; c <= k; ++c) {
      g.set(pairs[depth].first, pairs[depth].second, c);
      self(self, depth + 1);
    }
    g.set(pairs[depth].first, pairs[depth].second, kAbsent);
  };
  rec(rec, 0);
}

namespace detail {

// One shard's depth-first sweep. With pruning, triangles are tracked
// incrementally: assigning pair (u,v) completes exactly the triangles {a,u,v}
// with a < u, so a single mask test per assignment finds the first
// non-monochromatic triangle on every root-to-leaf path. Subtrees whose
// outcome no longer depends on the remaining pairs are tallied in closed form.
class Sweep {
 public:
  using Mask = std::uint64_t;

  explicit Sweep(const SearchSpec& spec)
      : spec_(spec),
        n_(spec.n),
        k_(spec.colours()),
        values_count_(spec.value_count()),
        pairs_(pair_order(spec.n)),
        values_(pairs_.size(), 0),
        sizes_(k_, 0),
        adj_(n_, 0),
        col_(static_cast<std::size_t>(k_ + 1) * n_, 0),
        graph_(n_, k_) {
    report_.spec = spec;
    const int top = static_cast<int>(pairs_.size()) + 1;
    binom_.assign(top, std::vector<std::uint64_t>(top, 0));
    for (int i = 0; i < top; ++i) {
      binom_[i][0] = 1;
      for (int j = 1; j <= i; ++j) binom_[i][j] = binom_[i - 1][j - 1] + (j < i ? binom_[i - 1][j] : 0);
    }
    power_.assign(top, 1);
    for (int i = 1; i < top; ++i) power_[i] = power_[i - 1] * values_count_;
  }

  void run(const PairValues& prefix) {
    prefix_ = &prefix;
    dfs(0, false);
  }

  SearchReport take() && { return std::move(report_); }

 private:
  std::size_t depth_count() const { return pairs_.size(); }

  bool assign(std::size_t depth, int value) {
    values_[depth] = static_cast<std::uint8_t>(value);
    if (value == 0) return false;
    const auto [u, v] = pairs_[depth];
    const Mask closes = adj_[u] & adj_[v] & ~(col(value, u) & col(value, v));
    adj_[u] |= Mask{1} << v;
    adj_[v] |= Mask{1} << u;
    col(value, u) |= Mask{1} << v;
    col(value, v) |= Mask{1} << u;
    ++sizes_[value - 1];
    graph_.set(u, v, value);
    return closes != 0;
  }

  void unassign(std::size_t depth) {
    const int value = values_[depth];
    values_[depth] = 0;
    if (value == 0) return;
    const auto [u, v] = pairs_[depth];
    adj_[u] &= ~(Mask{1} << v);
    adj_[v] &= ~(Mask{1} << u);
    col(value, u) &= ~(Mask{1} << v);
    col(value, v) &= ~(Mask{1} << u);
    --sizes_[value - 1];
    graph_.set(u, v, kAbsent);
  }

  Mask& col(int c, Vertex v) { return col_[static_cast<std::size_t>(c) * n_ + v]; }

  bool premise(const std::vector<std::int64_t>& sizes) const {
    switch (spec_.mode) {
      case SearchMode::VerifyTheorem: return main_premise_strict(n_, sizes);
      case SearchMode::CharacterizeTight: return main_premise_weak(n_, sizes);
      case SearchMode::VerifyLemma: return n_ >= 2 && dense_two_thirds(n_, sizes[0]);
      case SearchMode::HuntConjecture1: return conjecture1_premise(n_, sizes, spec_.conj1_threshold);
      case SearchMode::HuntConjecture2: return conjecture2_premise(n_, sizes, spec_.conj2_weak);
      case SearchMode::AuditClaims: return true;
    }
    return false;
  }

  // Graph-level evaluation for the unpruned route.
  bool premise(const ColoredGraph& g) const {
    switch (spec_.mode) {
      case SearchMode::VerifyTheorem: return main_premise_strict(g);
      case SearchMode::CharacterizeTight: return main_premise_weak(g);
      case SearchMode::VerifyLemma: return g.n() >= 2 && dense_two_thirds(g.n(), g.edge_count());
      case SearchMode::HuntConjecture1: return conjecture1_premise(g, spec_.conj1_threshold);
      case SearchMode::HuntConjecture2: return conjecture2_premise(g, spec_.conj2_weak);
      case SearchMode::AuditClaims: return true;
    }
    return false;
  }

  // Every premise is non-decreasing as edges are added, and for a fixed edge
  // total it is best served by a balanced split, so the water-filled
  // completion is the most favourable one.
  bool premise_reachable(std::size_t remaining) const {
    if (spec_.mode == SearchMode::AuditClaims) return true;
    if (spec_.mode == SearchMode::VerifyLemma && n_ < 2) return false;
    auto filled = sizes_;
    for (std::size_t i = 0; i < remaining; ++i) ++*std::min_element(filled.begin(), filled.end());
    return premise(filled);
  }

  // Number of completions of the remaining pairs whose final class sizes satisfy the premise.
  std::uint64_t premise_completions(std::size_t remaining) {
    std::uint64_t count = 0;
    auto sizes = sizes_;
    auto rec = [&](auto&& self, int c, std::size_t left, std::uint64_t ways) -> void {
      if (c == k_) {
        if (premise(sizes)) count += ways;
        return;
      }
      for (std::size_t a = 0; a <= left; ++a) {
        sizes[c] += static_cast<std::int64_t>(a);
        self(self, c + 1, left - a, ways * binom_[left][a]);
        sizes[c] -= static_cast<std::int64_t>(a);
      }
    };
    rec(rec, 0, remaining, 1);
    return count;
  }

  bool triangle_settles_subtree() const {
    return spec_.mode != SearchMode::VerifyLemma;
  }

  void dfs(std::size_t depth, bool nonmono) {
    const std::size_t remaining = depth_count() - depth;
    if (depth >= prefix_->size() && spec_.prune && remaining > 0) {
      if (!premise_reachable(remaining)) {
        report_.enumerated += power_[remaining];
        return;
      }
      if (nonmono && triangle_settles_subtree()) {
        report_.enumerated += power_[remaining];
        if (spec_.mode != SearchMode::AuditClaims) {
          const auto hits = premise_completions(remaining);
          report_.premise_hits += hits;
          report_.conclusion_hits += hits;
        }
        return;
      }
    }
    if (remaining == 0) {
      leaf(nonmono);
      return;
    }
    if (depth < prefix_->size()) {
      const bool closes = assign(depth, (*prefix_)[depth]);
      dfs(depth + 1, nonmono || closes);
      unassign(depth);
      return;
    }
    for (int value = 0; value < values_count_; ++value) {
      const bool closes = assign(depth, value);
      dfs(depth + 1, nonmono || closes);
      unassign(depth);
    }
  }

  void leaf(bool nonmono_incremental) {
    ++report_.enumerated;
    const bool nonmono = spec_.prune ? nonmono_incremental : has_nonmono_triangle(graph_).has_value();
    const bool holds = spec_.prune ? premise(sizes_) : premise(graph_);
    if (!holds) return;

    switch (spec_.mode) {
      case SearchMode::VerifyLemma: {
        ++report_.premise_hits;
        if (lemma1_check(graph_)) record_counterexample();
        else ++report_.conclusion_hits;
        return;
      }
      case SearchMode::AuditClaims: {
        if (nonmono) return;
        ++report_.premise_hits;
        const auto audit = claim_audit(graph_);
        report_.audit.claim2_checked += audit.claim2_checked;
        report_.audit.claim4_checked += audit.claim4_checked;
        report_.audit.claim4_saturated += audit.claim4_saturated;
        report_.audit.violations += audit.violations.size();
        if (audit.violations.empty()) ++report_.conclusion_hits;
        else record_counterexample();
        return;
      }
      default: break;
    }

    ++report_.premise_hits;
    if (nonmono) {
      ++report_.conclusion_hits;
      return;
    }
    if (spec_.mode == SearchMode::CharacterizeTight) {
      const auto key = spec_.dedup ? canonical_key(graph_) : labelled_key();
      auto& bucket = bucket_for(key);
      if (bucket.multiplicity == 0) bucket.label = classify_tight(graph_).label();
      ++bucket.multiplicity;
      if (bucket.label == "Violation") record_counterexample();
      else ++report_.conclusion_hits;
      return;
    }
    auto& bucket = bucket_for(spec_.dedup ? canonical_key(graph_) : labelled_key());
    if (bucket.multiplicity == 0) bucket.label = "NoNonMonoTriangle";
    ++bucket.multiplicity;
    record_counterexample();
  }

  std::string labelled_key() const {
    std::vector<Vertex> identity(n_);
    std::iota(identity.begin(), identity.end(), 0);
    return encode(graph_, identity);
  }

  TightBucket& bucket_for(const std::string& key) {
    auto [it, fresh] = buckets_.try_emplace(key);
    if (fresh) {
      it->second.key = key;
      it->second.representative = values_;  // first visit is the lexicographic minimum
    }
    return it->second;
  }

  void record_counterexample() {
    ++report_.counterexample_total;
    if (report_.counterexamples.size() < spec_.max_listed) report_.counterexamples.push_back({values_, graph_});
  }

 public:
  void finish() {
    report_.tight_classes.clear();
    for (auto& [key, bucket] : buckets_) report_.tight_classes.push_back(std::move(bucket));
    buckets_.clear();
  }

 private:
  SearchSpec spec_;
  int n_;
  int k_;
  int values_count_;
  std::vector<std::pair<Vertex, Vertex>> pairs_;
  PairValues values_;
  std::vector<std::int64_t> sizes_;
  std::vector<Mask> adj_;
  std::vector<Mask> col_;
  ColoredGraph graph_;
  std::vector<std::vector<std::uint64_t>> binom_;
  std::vector<std::uint64_t> power_;
  const PairValues* prefix_ = nullptr;
  std::map<std::string, TightBucket> buckets_;
  SearchReport report_;
};

}  // namespace detail

// Associative, commutative fold of two shard reports over disjoint prefixes.
inline SearchReport merge_reports(SearchReport a, const SearchReport& b) {
  a.enumerated += b.enumerated;
  a.premise_hits += b.premise_hits;
  a.conclusion_hits += b.conclusion_hits;
  a.counterexample_total += b.counterexample_total;
  a.audit.claim2_checked += b.audit.claim2_checked;
  a.audit.claim4_checked += b.audit.claim4_checked;
  a.audit.claim4_saturated += b.audit.claim4_saturated;
  a.audit.violations += b.audit.violations;

  std::map<std::string, TightBucket> buckets;
  for (auto& t : a.tight_classes) buckets.emplace(t.key, std::move(t));
  for (const auto& t : b.tight_classes) {
    auto [it, fresh] = buckets.try_emplace(t.key, t);
    if (!fresh) {
      it->second.multiplicity += t.multiplicity;
      it->second.representative = std::min(it->second.representative, t.representative);
    }
  }
  a.tight_classes.clear();
  for (auto& [key, t] : buckets) a.tight_classes.push_back(std::move(t));

  a.counterexamples.insert(a.counterexamples.end(), b.counterexamples.begin(), b.counterexamples.end());
  std::sort(a.counterexamples.begin(), a.counterexamples.end(),
            [](const Counterexample& x, const Counterexample& y) { return x.values < y.values; });
  if (a.counterexamples.size() > a.spec.max_listed) a.counterexamples.resize(a.spec.max_listed);

  a.trace.insert(a.trace.end(), b.trace.begin(), b.trace.end());
  return a;
}

// Runs a sweep. Shards take disjoint sets of fixed values for the first
// ceil(log_{k+1} shards) pairs (prefix p goes to shard p mod shards) and run
// on their own threads; reports are merged after every shard has finished.
inline SearchReport run_search(const SearchSpec& spec_in) {
  SearchSpec spec = spec_in;
  if (spec.mode == SearchMode::VerifyLemma) spec.k = 1;
  if (spec.k < 1) throw std::invalid_argument("search: k must be at least 1");
  if (spec.shards < 1) throw std::invalid_argument("search: shards must be at least 1");
  if ((spec.mode == SearchMode::CharacterizeTight || spec.mode == SearchMode::AuditClaims) && spec.k != 2)
    throw std::invalid_argument(std::string("search: mode ") + mode_name(spec.mode) + " needs k = 2");
  domain_size_or_throw(spec.n, spec.value_count(), spec.budget);

  const auto start = std::chrono::steady_clock::now();
  const auto values = static_cast<std::uint64_t>(spec.value_count());
  const auto pairs = static_cast<std::size_t>(choose2(spec.n));
  std::size_t depth = 0;
  std::uint64_t prefixes = 1;
  while (prefixes < static_cast<std::uint64_t>(spec.shards) && depth < pairs) {
    prefixes *= values;
    ++depth;
  }

  std::vector<SearchReport> partial(spec.shards);
  auto work = [&](int shard) {
    const auto t0 = std::chrono::steady_clock::now();
    detail::Sweep sweep(spec);
    PairValues prefix(depth);
    for (std::uint64_t p = shard; p < prefixes; p += spec.shards) {
      auto rest = p;
      for (std::size_t i = depth; i-- > 0;) {
        prefix[i] = static_cast<std::uint8_t>(rest % values);
        rest /= values;
      }
      sweep.run(prefix);
    }
    sweep.finish();
    partial[shard] = std::move(sweep).take();
    const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
    partial[shard].trace = {{shard, partial[shard].enumerated, dt.count()}};
  };

  if (spec.shards == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (int s = 0; s < spec.shards; ++s) threads.emplace_back(work, s);
  }

  SearchReport report = std::move(partial[0]);
  for (int s = 1; s < spec.shards; ++s) report = merge_reports(std::move(report), partial[s]);
  report.spec = spec;
  const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - start;
  report.wall_time_ms = dt.count();
  return report;
}

inline SearchReport verify_theorem(int n, int shards = 1, std::uint64_t budget = kDefaultBudget) {
  return run_search({.n = n, .k = 2, .mode = SearchMode::VerifyTheorem, .shards = shards, .budget = budget});
}

inline SearchReport characterize_tight(int n, int shards = 1, bool dedup = true,
                                       std::uint64_t budget = kDefaultBudget) {
  return run_search({.n = n, .k = 2, .mode = SearchMode::CharacterizeTight, .dedup = dedup, .shards = shards,
                     .budget = budget});
}

// One report per order n = 2..n_max.
inline std::vector<SearchReport> verify_lemma(int n_max, int shards = 1, std::uint64_t budget = kDefaultBudget) {
  std::vector<SearchReport> out;
  for (int n = 2; n <= n_max; ++n)
    out.push_back(run_search({.n = n, .k = 1, .mode = SearchMode::VerifyLemma, .shards = shards, .budget = budget}));
  return out;
}

inline SearchReport hunt_conjecture(const SearchSpec& spec) {
  if (spec.mode != SearchMode::HuntConjecture1 && spec.mode != SearchMode::HuntConjecture2)
    throw std::invalid_argument("hunt_conjecture: mode must be conj1 or conj2");
  return run_search(spec);
}

inline SearchReport audit_claims_sweep(int n, int shards = 1, std::uint64_t budget = kDefaultBudget) {
  return run_search({.n = n, .k = 2, .mode = SearchMode::AuditClaims, .shards = shards, .budget = budget});
}

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

// Random two-coloured graph with no non-monochromatic triangle: pairs are
// visited in random order and each takes a uniformly random value among those
// that keep the graph free of non-monochromatic triangles (absent always qualifies).
template <class Rng>
ColoredGraph random_hypothesis_graph(int n, Rng& rng, int k = 2) {
  ColoredGraph g(n, k);
  auto pairs = pair_order(n);
  std::shuffle(pairs.begin(), pairs.end(), rng);
  std::vector<Color> allowed;
  for (const auto& [u, v] : pairs) {
    allowed.assign(1, kAbsent);
    for (Color c = 1; c <= k; ++c) {
      bool clean = true;
      for (Vertex w = 0; w < n && clean; ++w) {
        if (w == u || w == v) continue;
        const Color a = g.color(u, w), b = g.color(v, w);
        if (a != kAbsent && b != kAbsent && (a != c || b != c)) clean = false;
      }
      if (clean) allowed.push_back(c);
    }
    std::uniform_int_distribution<std::size_t> pick(0, allowed.size() - 1);
    g.set(u, v, allowed[pick(rng)]);
  }
  return g;
}

// Claim audits over `samples` random hypothesis-satisfying graphs.
inline SearchReport audit_claims_sampled(int n, std::uint64_t samples, std::uint64_t seed) {
  SearchReport report;
  report.spec = {.n = n, .k = 2, .mode = SearchMode::AuditClaims, .dedup = false};
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(seed);
  for (std::uint64_t i = 0; i < samples; ++i) {
    const auto g = random_hypothesis_graph(n, rng);
    ++report.enumerated;
    ++report.premise_hits;
    const auto audit = claim_audit(g);
    report.audit.claim2_checked += audit.claim2_checked;
    report.audit.claim4_checked += audit.claim4_checked;
    report.audit.claim4_saturated += audit.claim4_saturated;
    report.audit.violations += audit.violations.size();
    if (audit.violations.empty()) {
      ++report.conclusion_hits;
    } else {
      ++report.counterexample_total;
      if (report.counterexamples.size() < report.spec.max_listed) report.counterexamples.push_back({{}, g});
    }
  }
  const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - start;
  report.wall_time_ms = dt.count();
  return report;
}

}  // namespace nmt
