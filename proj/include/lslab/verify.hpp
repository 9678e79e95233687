#pragma once

#include <cmath>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lslab/bundle.hpp"
#include "lslab/transition.hpp"

namespace lslab {

struct ConditionResult {
  bool checked = false;
  bool pass = true;
  std::string detail;
  std::vector<Bits> witness;  // offending solution, pair, or full path
};

struct TightnessReport {
  // 1: every target sink is marked; 2: embedding is a marked right inverse
  // of the projection; 3: marked-to-marked paths without interior marks
  // project to an edge or a fixed point; 4: embedded endpoints of a source
  // step lie within the declared distance.
  ConditionResult cond1, cond2, cond3, cond4;
  std::uint64_t source_nodes = 0;
  std::uint64_t target_nodes = 0;

  bool ok() const { return cond1.pass && cond2.pass && cond3.pass && cond4.pass; }
};

namespace detail {

inline TransitionGraph graph_or_resource_error(const LocalSearchInstance& inst,
                                               std::uint64_t budget, const char* which) {
  try {
    return build_transition_graph(inst, budget);
  } catch (const BudgetError& e) {
    throw ResourceError(std::string(which) + " transition graph exceeds the budget of " +
                        std::to_string(e.budget) + " solutions");
  }
}

}  // namespace detail

inline TightnessReport check_tight_reduction(const ReductionBundle& b,
                                             std::uint64_t budget = 1u << 22) {
  TightnessReport rep;
  TransitionGraph src = detail::graph_or_resource_error(*b.source, budget, "source");
  rep.source_nodes = src.nodes.size();

  // The target solution set can run into the millions while its sink set and
  // the improving region around each marked solution stay small, so the
  // target graph is never materialized: one streaming pass over the ordered
  // solution enumeration finds sinks and marks, and condition 3 expands
  // improving edges on demand from the marked nodes only.
  const LocalSearchInstance& tgt = *b.target;
  rep.cond1.checked = true;
  std::vector<Bits> marked;
  std::optional<Bits> prev;
  std::uint64_t count = 0;
  try {
    tgt.enumerate_valid(budget, [&](const Bits& q) {
      ++count;
      if (prev && !prev->lex_less(q))
        throw InternalError("solution enumeration out of lex order");
      prev = q;
      if (b.r_member(q)) {
        marked.push_back(q);
      } else if (rep.cond1.pass && !tgt.has_improving_neighbor(q)) {
        rep.cond1.pass = false;
        rep.cond1.detail = "a locally optimal target solution is not marked";
        rep.cond1.witness = {q};
      }
    });
  } catch (const BudgetError& e) {
    throw ResourceError("target transition graph exceeds the budget of " +
                        std::to_string(e.budget) + " solutions");
  }
  rep.target_nodes = count;

  rep.cond2.checked = true;
  for (auto& p : src.nodes) {
    Bits sq = b.embed(p);
    if (sq.size() != tgt.ground_size() || !tgt.valid(sq)) {
      rep.cond2.pass = false;
      rep.cond2.detail = "embedding left the target solution set";
      rep.cond2.witness = {p, sq};
      break;
    }
    if (!b.r_member(sq)) {
      rep.cond2.pass = false;
      rep.cond2.detail = "embedded solution is not marked";
      rep.cond2.witness = {p, sq};
      break;
    }
    if (b.psi(sq) != p) {
      rep.cond2.pass = false;
      rep.cond2.detail = "projection does not invert the embedding";
      rep.cond2.witness = {p, sq};
      break;
    }
  }

  // Walk improving edges from each marked node, stopping at marked nodes;
  // interior nodes are unmarked, so each stop is a no-interior-mark path.
  rep.cond3.checked = true;
  auto source_edge = [&](const Bits& from, const Bits& to) {
    auto f = src.node_id(from), t = src.node_id(to);
    if (!f || !t) return false;
    for (auto x : src.out[*f])
      if (x == *t) return true;
    return false;
  };
  for (auto& root : marked) {
    if (!rep.cond3.pass) break;
    std::unordered_map<Bits, Bits, BitsHash> parent;  // child -> predecessor
    std::vector<Bits> stack{root};
    std::unordered_set<Bits, BitsHash> seen{root};
    while (!stack.empty() && rep.cond3.pass) {
      Bits cur = stack.back();
      stack.pop_back();
      for (auto& nxt : tgt.improving_neighbors(cur)) {
        if (b.r_member(nxt)) {
          Bits pp = b.psi(root);
          Bits qq = b.psi(nxt);
          if (pp == qq || source_edge(pp, qq)) continue;
          rep.cond3.pass = false;
          rep.cond3.detail = "a mark-free path projects to a non-edge";
          std::vector<Bits> path{nxt};
          for (Bits at = cur;; at = parent.at(at)) {
            path.push_back(at);
            if (at == root) break;
          }
          rep.cond3.witness.assign(path.rbegin(), path.rend());
          break;
        }
        if (seen.insert(nxt).second) {
          parent.emplace(nxt, cur);
          stack.push_back(nxt);
        }
      }
    }
  }
  return rep;
}

// Directed BFS distance in the explicit graph, capped; nullopt when the cap
// is exceeded or the goal is unreachable.
inline std::optional<std::uint64_t> bounded_distance(const TransitionGraph& tg,
                                                     std::uint32_t from, std::uint32_t to,
                                                     std::uint64_t cap) {
  if (from == to) return 0;
  std::vector<char> seen(tg.nodes.size(), 0);
  seen[from] = 1;
  std::vector<std::uint32_t> frontier{from};
  for (std::uint64_t depth = 1; depth <= cap; ++depth) {
    std::vector<std::uint32_t> next;
    for (auto cur : frontier)
      for (auto nxt : tg.out[cur]) {
        if (nxt == to) return depth;
        if (!seen[nxt]) {
          seen[nxt] = 1;
          next.push_back(nxt);
        }
      }
    if (next.empty()) break;
    frontier = std::move(next);
  }
  return std::nullopt;
}

// Adds the distance condition: for every source step (p, p'), the embedded
// endpoints must be within ell in the target graph. Embedded fixed points
// are distance 0, so only proper edges need a search.
inline TightnessReport check_l_tight(const ReductionBundle& b, std::uint64_t ell,
                                     std::uint64_t budget = 1u << 22) {
  TightnessReport rep = check_tight_reduction(b, budget);
  TransitionGraph src = detail::graph_or_resource_error(*b.source, budget, "source");
  TransitionGraph tgt = detail::graph_or_resource_error(*b.target, budget, "target");

  rep.cond4.checked = true;
  for (std::uint32_t p = 0; p < src.nodes.size() && rep.cond4.pass; ++p) {
    auto from = tgt.node_id(b.embed(src.nodes[p]));
    if (!from) {
      rep.cond4.pass = false;
      rep.cond4.detail = "embedding left the target solution set";
      rep.cond4.witness = {src.nodes[p]};
      break;
    }
    for (auto q : src.out[p]) {
      auto to = tgt.node_id(b.embed(src.nodes[q]));
      if (!to) {
        rep.cond4.pass = false;
        rep.cond4.detail = "embedding left the target solution set";
        rep.cond4.witness = {src.nodes[q]};
        break;
      }
      auto dist = bounded_distance(tgt, *from, *to, ell);
      if (!dist) {
        rep.cond4.pass = false;
        rep.cond4.detail = "embedded endpoints of a source step are farther apart than " +
                           std::to_string(ell);
        rep.cond4.witness = {src.nodes[p], src.nodes[q]};
        break;
      }
    }
  }
  return rep;
}

// Implicit breadth-first search from the start to the nearest solution with
// no improving neighbor. The graph is finite and acyclic, so a sink is
// always reachable.
inline std::uint64_t measure_shortest_max_sequence(const LocalSearchInstance& inst,
                                                   const Bits& start,
                                                   std::uint64_t budget = 1u << 22) {
  inst.require_valid(start);
  std::unordered_set<Bits, BitsHash> seen;
  seen.insert(start);
  std::vector<Bits> frontier{start};
  for (std::uint64_t depth = 0;; ++depth) {
    std::vector<Bits> next;
    for (auto& cur : frontier) {
      auto imp = inst.improving_neighbors(cur);
      if (imp.empty()) return depth;
      for (auto& x : imp)
        if (seen.insert(x).second) {
          next.push_back(x);
          if (seen.size() > budget)
            throw ResourceError("reachable set exceeds the budget of " + std::to_string(budget) +
                                " solutions");
        }
    }
    if (next.empty()) throw InternalError("no sink reachable in a finite acyclic graph");
    frontier = std::move(next);
  }
}

struct GrowthRow {
  std::string id;
  std::uint64_t size = 0;
  std::optional<std::uint64_t> length;
  std::string note;
};

struct GrowthTable {
  std::vector<GrowthRow> rows;
  std::optional<double> log2_slope;  // least-squares slope of log2(length) against size
};

using FamilyGenerator =
    std::function<std::pair<std::shared_ptr<const LocalSearchInstance>, Bits>(std::uint64_t)>;

// Measures the shortest maximal sequence per family member. Budget failures
// annotate the row instead of aborting the sweep; the slope is only data,
// never a verdict about asymptotic growth.
inline GrowthTable growth_experiment(const FamilyGenerator& family,
                                     const std::vector<std::uint64_t>& sizes,
                                     std::uint64_t budget = 1u << 22) {
  GrowthTable table;
  for (auto size : sizes) {
    GrowthRow row;
    row.size = size;
    row.id = "size-" + std::to_string(size);
    try {
      auto [inst, start] = family(size);
      row.length = measure_shortest_max_sequence(*inst, start, budget);
    } catch (const ResourceError& e) {
      row.note = e.what();
    } catch (const BudgetError& e) {
      row.note = e.what();
    }
    table.rows.push_back(row);
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::uint64_t cnt = 0;
  for (auto& row : table.rows) {
    if (!row.length || *row.length == 0) continue;
    double x = static_cast<double>(row.size);
    double y = std::log2(static_cast<double>(*row.length));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++cnt;
  }
  if (cnt >= 2) {
    double denom = cnt * sxx - sx * sx;
    if (denom != 0) table.log2_slope = (cnt * sxy - sx * sy) / denom;
  }
  return table;
}

}  // namespace lslab
