#pragma once

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "lslab/circuit.hpp"
#include "lslab/frank_tardos.hpp"
#include "lslab/swop.hpp"
#include "lslab/transition.hpp"

namespace lslab {

enum class SolveOutcome { LocalOptimumFound, BudgetExhausted, PromiseViolated };

inline const char* solve_outcome_name(SolveOutcome o) {
  switch (o) {
    case SolveOutcome::LocalOptimumFound: return "local-optimum-found";
    case SolveOutcome::BudgetExhausted: return "budget-exhausted";
    case SolveOutcome::PromiseViolated: return "promise-violated";
  }
  return "?";
}

struct SolveReport {
  ImprovingSequence sequence;
  std::uint64_t steps = 0;
  SolveOutcome outcome = SolveOutcome::LocalOptimumFound;
  std::uint64_t evaluations = 0;  // neighbor evaluations spent
};

inline constexpr std::uint64_t kDefaultEvalBudget = 10000000;

// Repeat the pivoting rule until a local optimum; stops with a partial trace
// when the evaluation budget runs out before the next move is affordable.
inline SolveReport standard_local_search(const LocalSearchInstance& inst, const Bits& start,
                                         const PivotingRule& rule,
                                         std::uint64_t budget = kDefaultEvalBudget) {
  inst.require_valid(start);
  SolveReport rep;
  rep.sequence.start = start;
  rep.sequence.objectives.push_back(inst.objective(start));
  Bits cur = start;
  Rat cur_obj = rep.sequence.objectives.back();
  for (;;) {
    auto nb = inst.neighbors(cur);
    rep.evaluations += nb.size();
    std::vector<Bits> imp;
    for (auto& x : nb)
      if (inst.better(inst.objective(x), cur_obj)) imp.push_back(x);
    if (imp.empty()) {
      rep.outcome = SolveOutcome::LocalOptimumFound;
      break;
    }
    if (rep.evaluations > budget) {
      rep.outcome = SolveOutcome::BudgetExhausted;
      break;
    }
    cur = *apply_pivot(inst, cur, imp, rule);
    cur_obj = inst.objective(cur);
    rep.sequence.steps.push_back(cur);
    rep.sequence.objectives.push_back(cur_obj);
    ++rep.steps;
  }
  return rep;
}

// Depth-first search over improving paths of length at most ell, children in
// ascending lex order, so the first maximal sequence found is the lex-least
// one. Dead (solution, remaining-depth) pairs are memoized; a solution that
// failed with depth d also fails with any smaller depth.
inline SolveReport pivot_search_bounded(const LocalSearchInstance& inst, const Bits& start,
                                        std::uint64_t ell,
                                        std::uint64_t budget = kDefaultEvalBudget) {
  inst.require_valid(start);
  SolveReport rep;
  rep.sequence.start = start;
  std::unordered_map<Bits, std::uint64_t, BitsHash> failed_at;  // max remaining depth that failed
  std::vector<Bits> path;
  std::vector<Rat> objs{inst.objective(start)};
  bool out_of_budget = false;

  auto rec = [&](auto&& self, const Bits& s, std::uint64_t remaining) -> bool {
    auto it = failed_at.find(s);
    if (it != failed_at.end() && it->second >= remaining) return false;
    auto nb = inst.neighbors(s);
    rep.evaluations += nb.size();
    std::vector<Bits> imp;
    for (auto& x : nb)
      if (inst.better(inst.objective(x), objs.back())) imp.push_back(x);
    if (imp.empty()) return true;  // maximal here
    if (remaining == 0 || out_of_budget) return false;
    for (auto& x : imp) {
      if (rep.evaluations > budget) {
        out_of_budget = true;
        return false;
      }
      path.push_back(x);
      objs.push_back(inst.objective(x));
      if (self(self, x, remaining - 1)) return true;
      path.pop_back();
      objs.pop_back();
    }
    auto& slot = failed_at[s];
    if (slot < remaining) slot = remaining;
    return false;
  };

  if (rec(rec, start, ell)) {
    rep.sequence.steps = path;
    rep.sequence.objectives = objs;
    rep.steps = path.size();
    rep.outcome = SolveOutcome::LocalOptimumFound;
  } else {
    rep.sequence.objectives = {inst.objective(start)};
    rep.outcome = out_of_budget ? SolveOutcome::BudgetExhausted : SolveOutcome::PromiseViolated;
  }
  return rep;
}

namespace detail {

// Distinct weight values in first-occurrence order plus the class index of
// every coordinate; equal weights share a class so they stay equal after
// reduction.
inline void weight_classes(const std::vector<Rat>& w, std::vector<Rat>& values,
                           std::vector<std::size_t>& cls) {
  values.clear();
  cls.assign(w.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::size_t j = 0;
    while (j < values.size() && values[j] != w[i]) ++j;
    if (j == values.size()) values.push_back(w[i]);
    cls[i] = j;
  }
}

}  // namespace detail

// Replace the weights by sign-equivalent small integers (radius c covers any
// swap difference pattern), solve there, and replay against the original
// weights; both instances have the same improving-neighbor structure.
inline SolveReport fpt_distinct_weights_solve(const SwopInstance& inst, const Bits& start,
                                              const PivotingRule& rule,
                                              std::uint64_t budget = kDefaultEvalBudget) {
  inst.require_valid(start);
  std::vector<Rat> values;
  std::vector<std::size_t> cls;
  detail::weight_classes(inst.w, values, cls);
  auto red = frank_tardos_reduce(values, static_cast<std::uint64_t>(inst.c) + 1);
  std::vector<Rat> wbar(inst.w.size());
  for (std::size_t i = 0; i < wbar.size(); ++i) wbar[i] = Rat(red.entries[cls[i]]);
  SwopInstance reduced(inst.g, wbar, inst.cert, inst.c);

  SolveReport rep = standard_local_search(reduced, start, rule, budget);

  BigInt maxw(0);
  for (auto& e : red.entries) {
    BigInt a = e < 0 ? BigInt(-e) : e;
    if (a > maxw) maxw = a;
  }
  if (BigInt(rep.steps) > BigInt(2) * BigInt(inst.ground_size()) * maxw)
    throw InternalError("step count exceeds the reduced-weight range bound");

  rep.sequence.objectives.clear();
  rep.sequence.objectives.push_back(inst.objective(rep.sequence.start));
  for (auto& s : rep.sequence.steps) rep.sequence.objectives.push_back(inst.objective(s));
  auto check = verify_improving_sequence(inst, rep.sequence,
                                         rep.outcome == SolveOutcome::LocalOptimumFound);
  if (!check.ok)
    throw InternalError("reduced-weight trace does not replay on the original weights: " +
                        check.message);
  return rep;
}

// Local search on a circuit; a path revisits no output state, so more than
// 2^m moves would contradict the state-collision bound.
inline SolveReport circuit_output_bounded_solve(const CircuitInstance& inst, const Bits& start,
                                                const PivotingRule& rule,
                                                std::uint64_t budget = kDefaultEvalBudget) {
  if (inst.outputs.size() > 62)
    throw ResourceError("too many outputs for the step-ceiling representation");
  std::uint64_t ceiling = 1ull << inst.outputs.size();
  SolveReport rep = standard_local_search(inst, start, rule, budget);
  if (rep.steps > ceiling)
    throw InternalError("more moves than output states: the collision bound failed");
  return rep;
}

struct StepBoundDescriptor {
  std::uint64_t t = 0;  // most outputs influenced by any single input
  std::uint64_t k = 0;  // distinct weight values
  std::vector<BigInt> reduced_weights;
  BigInt step_bound;
  std::shared_ptr<const CircuitInstance> reduced;
};

// A flip changes at most t outputs, so sign preservation over 1-norm radius t
// keeps the improvement structure; the reduced weights bound every maximal
// sequence by their total magnitude.
inline StepBoundDescriptor bound_steps_by_output_degree(const CircuitInstance& inst) {
  StepBoundDescriptor d;
  d.t = inst.max_outputs_per_input();
  std::vector<Rat> values;
  std::vector<std::size_t> cls;
  detail::weight_classes(inst.wout, values, cls);
  d.k = values.size();
  auto red = frank_tardos_reduce(values, std::max<std::uint64_t>(d.t + 1, 2));
  std::vector<Rat> wbar(inst.wout.size());
  d.step_bound = 0;
  for (std::size_t i = 0; i < wbar.size(); ++i) {
    BigInt e = red.entries[cls[i]];
    d.reduced_weights.push_back(e);
    wbar[i] = Rat(e);
    d.step_bound += e < 0 ? BigInt(-e) : e;
  }
  d.step_bound *= 2;
  d.reduced = std::make_shared<CircuitInstance>(inst.n_in, inst.gates, inst.outputs, wbar);
  return d;
}

}  // namespace lslab
