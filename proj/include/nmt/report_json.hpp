#pragma once

#include <string>

#include "json.hpp"
#include "nmt/ecg.hpp"
#include "nmt/iso.hpp"
#include "nmt/search.hpp"

namespace nmt {

// Report schema. Stable keys: spec, enumerated, premise_hits, conclusion_hits,
// tight_classes, counterexamples, counterexample_total, wall_time_ms, trace;
// claim sweeps add "audit". Only wall_time_ms and trace vary between runs
// and shard counts.

inline nlohmann::ordered_json spec_to_json(const SearchSpec& spec) {
  nlohmann::ordered_json j;
  j["mode"] = mode_name(spec.mode);
  j["n"] = spec.n;
  j["k"] = spec.colours();
  j["dedup"] = spec.dedup;
  j["prune"] = spec.prune;
  j["budget"] = spec.budget;
  j["max_listed"] = spec.max_listed;
  if (spec.mode == SearchMode::HuntConjecture1)
    j["threshold"] = spec.conj1_threshold == Conj1Threshold::Square ? "square" : "binomial";
  if (spec.mode == SearchMode::HuntConjecture2) j["threshold"] = spec.conj2_weak ? "weak" : "strict";
  if (spec.mode == SearchMode::VerifyTheorem || spec.mode == SearchMode::CharacterizeTight)
    j["generalized_k"] = spec.k != 2;
  return j;
}

inline nlohmann::ordered_json to_json(const SearchReport& r) {
  nlohmann::ordered_json j;
  j["spec"] = spec_to_json(r.spec);
  j["enumerated"] = r.enumerated;
  j["premise_hits"] = r.premise_hits;
  j["conclusion_hits"] = r.conclusion_hits;
  auto classes = nlohmann::ordered_json::array();
  for (const auto& t : r.tight_classes) {
    nlohmann::ordered_json b;
    b["key"] = to_hex(t.key);
    b["class"] = t.label;
    b["multiplicity"] = t.multiplicity;
    b["representative"] = emit_ecg(graph_from_values(r.spec.n, r.spec.colours(), t.representative));
    classes.push_back(std::move(b));
  }
  j["tight_classes"] = std::move(classes);
  auto cex = nlohmann::ordered_json::array();
  for (const auto& c : r.counterexamples) cex.push_back(emit_ecg(c.graph));
  j["counterexamples"] = std::move(cex);
  j["counterexample_total"] = r.counterexample_total;
  if (r.spec.mode == SearchMode::AuditClaims) {
    j["audit"] = {{"claim2_checked", r.audit.claim2_checked},
                  {"claim4_checked", r.audit.claim4_checked},
                  {"claim4_saturated", r.audit.claim4_saturated},
                  {"violations", r.audit.violations}};
  }
  j["wall_time_ms"] = r.wall_time_ms;
  auto trace = nlohmann::ordered_json::array();
  for (const auto& t : r.trace)
    trace.push_back({{"shard", t.shard}, {"enumerated", t.enumerated}, {"wall_time_ms", t.wall_time_ms}});
  j["trace"] = {{"shards", r.spec.shards}, {"per_shard", std::move(trace)}};
  return j;
}

// The report with run-dependent fields removed, as compact text.
inline std::string deterministic_dump(const SearchReport& r) {
  auto j = to_json(r);
  j.erase("wall_time_ms");
  j.erase("trace");
  return j.dump();
}

}  // namespace nmt
