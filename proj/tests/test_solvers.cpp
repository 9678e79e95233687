#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include "lslab/bits.hpp"
#include "lslab/circuit.hpp"
#include "lslab/errors.hpp"
#include "lslab/solvers.hpp"
#include "lslab/swop.hpp"
#include "lslab/transition.hpp"
#include "lslab/verify.hpp"
#include "oracles.hpp"

using namespace lslab;
using namespace lslab::testing;

namespace {

SwopInstance cycle_wis(const std::vector<Rat>& vw, std::uint32_t c) {
  Graph g;
  g.n = static_cast<std::uint32_t>(vw.size());
  for (std::uint32_t v = 0; v < g.n; ++v) g.edges.emplace_back(v, (v + 1) % g.n);
  std::vector<Rat> w = vw;
  w.resize(vw.size() * 2, Rat(0));
  return SwopInstance(g, w, Certifier{CertifierKind::IndependentSet, {}}, c);
}

CircuitInstance identity_circuit(std::uint32_t m) {
  std::vector<Gate> gates(m, Gate::input());
  std::vector<std::uint32_t> outs;
  for (std::uint32_t i = 0; i < m; ++i) outs.push_back(i);
  return CircuitInstance(m, gates, outs, max_circuit_weights(m, false));
}

const PivotingRule kFirst{PivotKind::FirstImprovement, 0};
const PivotingRule kBest{PivotKind::BestImprovement, 0};

void expect_same_transition_graph(const LocalSearchInstance& a, const LocalSearchInstance& b) {
  auto ta = build_transition_graph(a, 1u << 16);
  auto tb = build_transition_graph(b, 1u << 16);
  REQUIRE(ta.nodes == tb.nodes);
  REQUIRE(ta.out == tb.out);
  REQUIRE(ta.sinks == tb.sinks);
}

}  // namespace

TEST_CASE("search from a local optimum stops immediately", "[solvers]") {
  auto c5 = cycle_wis(std::vector<Rat>(5, Rat(1)), 3);
  Bits opt = Bits::from_indices(10, {0, 2});
  auto rep = standard_local_search(c5, opt, kFirst);
  REQUIRE(rep.outcome == SolveOutcome::LocalOptimumFound);
  REQUIRE(rep.steps == 0);
  REQUIRE(rep.sequence.steps.empty());
  REQUIRE(rep.sequence.objectives == std::vector<Rat>{Rat(2)});
}

TEST_CASE("first improvement walks the five-cycle along the documented trace", "[solvers]") {
  auto c5 = cycle_wis(std::vector<Rat>(5, Rat(1)), 3);
  auto rep = standard_local_search(c5, Bits(10), kFirst);
  REQUIRE(rep.outcome == SolveOutcome::LocalOptimumFound);
  REQUIRE(rep.steps == 2);
  REQUIRE(rep.sequence.steps[0] == Bits::from_indices(10, {4}));
  REQUIRE(rep.sequence.steps[1] == Bits::from_indices(10, {2, 4}));
  REQUIRE(verify_improving_sequence(c5, rep.sequence, true).ok);
}

TEST_CASE("every pivoting rule reaches a certified optimum deterministically", "[solvers]") {
  auto c5 = cycle_wis({Rat(2), Rat(3), Rat(4), Rat(3), Rat(2)}, 3);
  for (auto kind :
       {PivotKind::FirstImprovement, PivotKind::BestImprovement, PivotKind::RandomImprovement}) {
    PivotingRule rule{kind, 99};
    auto rep = standard_local_search(c5, Bits(10), rule);
    REQUIRE(rep.outcome == SolveOutcome::LocalOptimumFound);
    REQUIRE(verify_improving_sequence(c5, rep.sequence, true).ok);
    auto again = standard_local_search(c5, Bits(10), rule);
    REQUIRE(again.sequence.steps == rep.sequence.steps);
  }
  auto best = standard_local_search(c5, Bits(10), kBest);
  REQUIRE(best.sequence.steps.front() == Bits::from_indices(10, {2}));  // heaviest single
}

TEST_CASE("a tiny evaluation budget stops the walk early", "[solvers]") {
  auto c5 = cycle_wis(std::vector<Rat>(5, Rat(1)), 3);
  auto rep = standard_local_search(c5, Bits(10), kFirst, 1);
  REQUIRE(rep.outcome == SolveOutcome::BudgetExhausted);
  REQUIRE(rep.steps == 0);
  REQUIRE(rep.sequence.steps.size() == rep.steps);
}

TEST_CASE("depth-bounded pivoting finds maximal runs exactly within the bound", "[solvers]") {
  auto id2 = identity_circuit(2);
  Bits start = Bits::from_string("00");
  REQUIRE(measure_shortest_max_sequence(id2, start) == 2);
  REQUIRE(measure_shortest_max_sequence(id2, Bits::from_string("10")) == 1);
  REQUIRE(measure_shortest_max_sequence(id2, Bits::from_string("11")) == 0);

  auto blocked = pivot_search_bounded(id2, start, 1);
  REQUIRE(blocked.outcome == SolveOutcome::PromiseViolated);
  REQUIRE(blocked.steps == 0);

  auto found = pivot_search_bounded(id2, start, 2);
  REQUIRE(found.outcome == SolveOutcome::LocalOptimumFound);
  REQUIRE(found.steps == 2);
  REQUIRE(found.sequence.last() == Bits::from_string("11"));
  REQUIRE(verify_improving_sequence(id2, found.sequence, true).ok);

  auto roomy = pivot_search_bounded(id2, start, 10);
  REQUIRE(roomy.outcome == SolveOutcome::LocalOptimumFound);
  REQUIRE(verify_improving_sequence(id2, roomy.sequence, true).ok);

  auto trivial = pivot_search_bounded(id2, Bits::from_string("11"), 0);
  REQUIRE(trivial.outcome == SolveOutcome::LocalOptimumFound);
  REQUIRE(trivial.steps == 0);
  REQUIRE(pivot_search_bounded(id2, start, 0).outcome == SolveOutcome::PromiseViolated);
}

TEST_CASE("weight-class reduction keeps the transition graph intact", "[solvers]") {
  Graph g4;
  g4.n = 4;
  std::vector<SwopInstance> insts;
  insts.push_back(SwopInstance(g4, {Rat(1, 3), Rat(1, 2), Rat(1, 2), Rat(1, 3)},
                               Certifier{CertifierKind::AllSubsets, {}}, 2));
  insts.push_back(cycle_wis(std::vector<Rat>(4, Rat(1)), 3));
  insts.push_back(SwopInstance(g4, {Rat(-1, 2), Rat(1, 3), Rat(1, 3), Rat(-1, 2)},
                               Certifier{CertifierKind::AllSubsets, {}}, 3));

  for (auto& inst : insts) {
    std::vector<Rat> values;
    std::vector<std::size_t> cls;
    detail::weight_classes(inst.w, values, cls);
    REQUIRE(values.size() <= 3);
    auto red = frank_tardos_reduce(values, inst.c + 1);
    std::vector<Rat> wbar(inst.w.size());
    for (std::size_t i = 0; i < wbar.size(); ++i) wbar[i] = Rat(red.entries[cls[i]]);
    SwopInstance reduced(inst.g, wbar, inst.cert, inst.c);
    expect_same_transition_graph(inst, reduced);
  }
}

TEST_CASE("the distinct-weights solver replays its trace on the original weights",
          "[solvers]") {
  auto uniform = cycle_wis(std::vector<Rat>(5, Rat(1)), 3);
  auto direct = standard_local_search(uniform, Bits(10), kFirst);
  auto via_fpt = fpt_distinct_weights_solve(uniform, Bits(10), kFirst);
  REQUIRE(via_fpt.outcome == SolveOutcome::LocalOptimumFound);
  REQUIRE(via_fpt.sequence.steps == direct.sequence.steps);
  REQUIRE(via_fpt.sequence.objectives.back() == Rat(2));

  Graph g3;
  g3.n = 3;
  SwopInstance frac(g3, {Rat(1, 3), Rat(1, 2), Rat(1, 4)},
                    Certifier{CertifierKind::AllSubsets, {}}, 1);
  auto rep = fpt_distinct_weights_solve(frac, Bits(3), kBest);
  REQUIRE(rep.outcome == SolveOutcome::LocalOptimumFound);
  REQUIRE(verify_improving_sequence(frac, rep.sequence, true).ok);
  REQUIRE(rep.sequence.last() == Bits::from_string("111"));  // all weights positive
}

TEST_CASE("circuit walks never exceed the output-state ceiling", "[solvers]") {
  auto id3 = identity_circuit(3);
  auto best = circuit_output_bounded_solve(id3, Bits(3), kBest);
  REQUIRE(best.outcome == SolveOutcome::LocalOptimumFound);
  REQUIRE(best.steps == 3);
  REQUIRE(best.sequence.steps[0] == Bits::from_string("001"));  // heaviest output first
  REQUIRE(best.sequence.steps[1] == Bits::from_string("011"));
  REQUIRE(best.sequence.steps[2] == Bits::from_string("111"));

  CircuitInstance konst(2, {Gate::input(), Gate::input(), Gate::konst(true)}, {2}, {Rat(5)});
  auto flat = circuit_output_bounded_solve(konst, Bits(2), kFirst);
  REQUIRE(flat.steps == 0);

  Rng rng(19);
  for (int trial = 0; trial < 40; ++trial) {
    std::uint32_t n_in = 1 + static_cast<std::uint32_t>(rng.next_below(4));
    auto c = sample_circuit(rng, n_in, 1 + static_cast<std::uint32_t>(rng.next_below(5)),
                            1 + static_cast<std::uint32_t>(rng.next_below(6)));
    Bits start(n_in);
    for (std::uint32_t i = 0; i < n_in; ++i) start.set(i, rng.next_bool());
    auto rep = circuit_output_bounded_solve(c, start, kFirst);
    REQUIRE(rep.outcome == SolveOutcome::LocalOptimumFound);
    REQUIRE(rep.steps <= (1ull << c.outputs.size()));
    REQUIRE(verify_improving_sequence(c, rep.sequence, true).ok);
  }
}

TEST_CASE("output-degree reduction certifies a step ceiling", "[solvers]") {
  auto id3 = identity_circuit(3);
  auto d = bound_steps_by_output_degree(id3);
  REQUIRE(d.t == 1);
  REQUIRE(d.k == 3);
  BigInt total(0);
  for (auto& e : d.reduced_weights) total += e < 0 ? BigInt(-e) : e;
  REQUIRE(d.step_bound == BigInt(2) * total);
  expect_same_transition_graph(id3, *d.reduced);

  // One input fanning into three outputs raises t to 3.
  CircuitInstance fan(1, {Gate::input(), Gate::gnot(0)}, {0, 1, 0},
                      {Rat(1), Rat(2), Rat(4)});
  auto df = bound_steps_by_output_degree(fan);
  REQUIRE(df.t == 3);
  expect_same_transition_graph(fan, *df.reduced);
}

TEST_CASE("positive-weight two-swaps terminate within a quadratic bound", "[solvers]") {
  Rng rng(83);
  for (int trial = 0; trial < 15; ++trial) {
    std::uint32_t nv = 3 + static_cast<std::uint32_t>(rng.next_below(4));
    Graph g = sample_graph(rng, nv, 40);
    std::uint32_t ground = g.n + static_cast<std::uint32_t>(g.edges.size());
    std::vector<Rat> w;
    for (std::uint32_t i = 0; i < ground; ++i)
      w.push_back(Rat(static_cast<std::int64_t>(1 + rng.next_below(30))));
    Certifier cert{trial % 2 ? CertifierKind::IndependentSet : CertifierKind::AllSubsets, {}};
    SwopInstance inst(g, w, cert, 2);
    auto ranks = weight_ranks(inst.w);
    for (auto kind : {PivotKind::FirstImprovement, PivotKind::BestImprovement,
                      PivotKind::RandomImprovement}) {
      auto rep = standard_local_search(inst, Bits(ground), PivotingRule{kind, 7});
      REQUIRE(rep.outcome == SolveOutcome::LocalOptimumFound);
      REQUIRE(rep.steps <= static_cast<std::uint64_t>(ground) * ground);
      std::uint64_t pot = rank_potential(ranks, rep.sequence.start);
      for (auto& s : rep.sequence.steps) {
        std::uint64_t nxt = rank_potential(ranks, s);
        REQUIRE(nxt > pot);
        pot = nxt;
      }
    }
  }
}
