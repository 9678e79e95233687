#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "lslab/instance.hpp"
#include "lslab/rng.hpp"

namespace lslab {

enum class PivotKind { FirstImprovement, BestImprovement, RandomImprovement };

// Pivoting rules are pure functions of (instance, solution, rule): the random
// rule derives its generator from the seed mixed with the solution hash, so
// the same solution always yields the same choice.
struct PivotingRule {
  PivotKind kind = PivotKind::FirstImprovement;
  std::uint64_t seed = 0;

  std::string name() const {
    switch (kind) {
      case PivotKind::FirstImprovement: return "first";
      case PivotKind::BestImprovement: return "best";
      case PivotKind::RandomImprovement: return "random";
    }
    return "?";
  }

  static PivotKind parse_kind(const std::string& s) {
    if (s == "first") return PivotKind::FirstImprovement;
    if (s == "best") return PivotKind::BestImprovement;
    if (s == "random") return PivotKind::RandomImprovement;
    throw InputContractError("unknown pivoting rule: " + s);
  }
};

// A run of strict improvements: start, then each successive solution.
// objectives[i] belongs to the i-th entry of the walk (start included), so
// it has steps.size() + 1 entries.
struct ImprovingSequence {
  Bits start;
  std::vector<Bits> steps;
  std::vector<Rat> objectives;

  std::size_t length() const { return steps.size(); }
  const Bits& last() const { return steps.empty() ? start : steps.back(); }
};

struct SequenceCheck {
  enum class Fail { None, Arity, Invalid, NotNeighbor, NotImproving, NotMaximal, BadObjective };
  bool ok = true;
  Fail fail = Fail::None;
  std::size_t index = 0;  // step index where the violation occurred
  std::string message;

  explicit operator bool() const { return ok; }

  static SequenceCheck failure(Fail f, std::size_t idx, std::string msg) {
    return SequenceCheck{false, f, idx, std::move(msg)};
  }
};

// Explicit transition graph: nodes are all valid solutions in ascending lex
// order, edges point to strictly better valid neighbors (targets ascending).
struct TransitionGraph {
  std::vector<Bits> nodes;
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> sinks;
  std::unordered_map<Bits, std::uint32_t, BitsHash> index;

  std::optional<std::uint32_t> node_id(const Bits& b) const {
    auto it = index.find(b);
    if (it == index.end()) return std::nullopt;
    return it->second;
  }

  bool is_sink(std::uint32_t id) const { return out[id].empty(); }

  std::uint64_t edge_count() const {
    std::uint64_t c = 0;
    for (auto& e : out) c += e.size();
    return c;
  }
};

inline bool is_local_optimum(const LocalSearchInstance& inst, const Bits& s) {
  inst.require_valid(s);
  return !inst.has_improving_neighbor(s);
}

inline TransitionGraph build_transition_graph(const LocalSearchInstance& inst,
                                              std::uint64_t budget) {
  TransitionGraph tg;
  inst.enumerate_valid(budget, [&](const Bits& b) { tg.nodes.push_back(b); });
  tg.index.reserve(tg.nodes.size() * 2);
  for (std::uint32_t i = 0; i < tg.nodes.size(); ++i) {
    if (i > 0 && !tg.nodes[i - 1].lex_less(tg.nodes[i]))
      throw InternalError("solution enumeration out of lex order");
    tg.index.emplace(tg.nodes[i], i);
  }
  tg.out.resize(tg.nodes.size());
  for (std::uint32_t i = 0; i < tg.nodes.size(); ++i) {
    for (auto& nb : inst.improving_neighbors(tg.nodes[i])) {
      auto id = tg.node_id(nb);
      if (!id) throw InternalError("improving neighbor missing from node set");
      tg.out[i].push_back(*id);
    }
    std::sort(tg.out[i].begin(), tg.out[i].end());
    if (tg.out[i].empty()) tg.sinks.push_back(i);
  }
  // Improvement is strict, so the graph must admit a topological order.
  std::vector<std::uint32_t> indeg(tg.nodes.size(), 0);
  for (auto& es : tg.out)
    for (auto t : es) ++indeg[t];
  std::vector<std::uint32_t> queue;
  for (std::uint32_t i = 0; i < indeg.size(); ++i)
    if (indeg[i] == 0) queue.push_back(i);
  std::size_t seen = 0;
  while (seen < queue.size()) {
    std::uint32_t v = queue[seen++];
    for (auto t : tg.out[v])
      if (--indeg[t] == 0) queue.push_back(t);
  }
  if (seen != tg.nodes.size()) throw InternalError("transition graph has a cycle");
  return tg;
}

inline SequenceCheck verify_improving_sequence(const LocalSearchInstance& inst,
                                               const ImprovingSequence& seq,
                                               bool require_maximal) {
  using Fail = SequenceCheck::Fail;
  auto check_one = [&](const Bits& b, std::size_t idx) -> std::optional<SequenceCheck> {
    if (b.size() != inst.ground_size())
      return SequenceCheck::failure(Fail::Arity, idx, "payload width mismatch");
    if (!inst.valid(b))
      return SequenceCheck::failure(Fail::Invalid, idx,
                                    "solution rejected by " + inst.validity_name());
    return std::nullopt;
  };
  if (auto f = check_one(seq.start, 0)) return *f;
  const Bits* prev = &seq.start;
  Rat prev_obj = inst.objective(seq.start);
  if (!seq.objectives.empty()) {
    if (seq.objectives.size() != seq.steps.size() + 1)
      return SequenceCheck::failure(Fail::BadObjective, 0, "objective list length mismatch");
    if (seq.objectives[0] != prev_obj)
      return SequenceCheck::failure(Fail::BadObjective, 0, "recorded start objective differs");
  }
  for (std::size_t i = 0; i < seq.steps.size(); ++i) {
    const Bits& cur = seq.steps[i];
    if (auto f = check_one(cur, i + 1)) return *f;
    if (!inst.is_neighbor(*prev, cur))
      return SequenceCheck::failure(Fail::NotNeighbor, i + 1, "step leaves the neighborhood");
    Rat obj = inst.objective(cur);
    if (!inst.better(obj, prev_obj))
      return SequenceCheck::failure(Fail::NotImproving, i + 1, "step does not improve");
    if (!seq.objectives.empty() && seq.objectives[i + 1] != obj)
      return SequenceCheck::failure(Fail::BadObjective, i + 1, "recorded objective differs");
    prev = &cur;
    prev_obj = obj;
  }
  if (require_maximal && inst.has_improving_neighbor(*prev))
    return SequenceCheck::failure(Fail::NotMaximal, seq.steps.size(),
                                  "final solution still has an improving neighbor");
  return SequenceCheck{};
}

// Rule selection over a precomputed improving list (ascending lex order).
inline std::optional<Bits> apply_pivot(const LocalSearchInstance& inst, const Bits& s,
                                       const std::vector<Bits>& imp, const PivotingRule& rule) {
  if (imp.empty()) return std::nullopt;
  switch (rule.kind) {
    case PivotKind::FirstImprovement:
      return imp.front();
    case PivotKind::BestImprovement: {
      std::size_t best = 0;
      Rat best_obj = inst.objective(imp[0]);
      for (std::size_t i = 1; i < imp.size(); ++i) {
        Rat obj = inst.objective(imp[i]);
        if (inst.better(obj, best_obj)) {  // lex-smallest wins ties
          best = i;
          best_obj = obj;
        }
      }
      return imp[best];
    }
    case PivotKind::RandomImprovement: {
      Rng rng(rule.seed ^ (s.hash() * 0x9e3779b97f4a7c15ull));
      return imp[rng.next_below(imp.size())];
    }
  }
  return std::nullopt;
}

// One pivot step; empty when s is locally optimal.
inline std::optional<Bits> apply_pivot(const LocalSearchInstance& inst, const Bits& s,
                                       const PivotingRule& rule) {
  inst.require_valid(s);
  return apply_pivot(inst, s, inst.improving_neighbors(s), rule);
}

}  // namespace lslab
