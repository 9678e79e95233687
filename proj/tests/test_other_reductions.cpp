#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <vector>

#include "lslab/bits.hpp"
#include "lslab/errors.hpp"
#include "lslab/mis_pivot.hpp"
#include "lslab/solvers.hpp"
#include "lslab/swop.hpp"
#include "lslab/swop_to_circuit.hpp"
#include "lslab/transition.hpp"
#include "lslab/verify.hpp"
#include "oracles.hpp"

using namespace lslab;
using namespace lslab::testing;

namespace {

SwopInstance free_pair() {
  Graph g;
  g.n = 2;
  return SwopInstance(g, {Rat(1), Rat(2)}, Certifier{CertifierKind::AllSubsets, {}}, 1);
}

SwopInstance adjacent_pair() {
  Graph g;
  g.n = 2;
  g.edges = {{0, 1}};
  return SwopInstance(g, {Rat(2), Rat(3), Rat(0)},
                      Certifier{CertifierKind::IndependentSet, {}}, 3);
}

SwopInstance seed_instance() { return adjacent_pair(); }

MisInstance colorable_instance() {
  Graph g;
  g.n = 5;
  g.edges = {{0, 1}, {2, 3}, {1, 2}};
  return MisInstance{g, {{0, 1}, {2, 3}, {4}}};
}

MisInstance uncolorable_instance() {
  Graph g;
  g.n = 3;
  g.edges = {{0, 2}, {1, 2}};
  return MisInstance{g, {{0}, {1}, {2}}};
}

void check_circuit_equivalence(const SwopInstance& src) {
  auto red = reduce_swop_to_maxcircuit(src);
  std::uint32_t width = 2 * src.ground_size() + 2;
  REQUIRE(red.target->n_in == width);
  for (auto& x : every_string(width)) {
    auto expect = classify_raw(src, x);
    REQUIRE(red.target->objective(x) == Rat(expect.value));
    auto st = red.decode(x);
    REQUIRE(st.form == expect.form);
    REQUIRE(red.r_member(x) == (st.form != StructuredForm::Unstructured));
    if (st.form == StructuredForm::Unstructured) {
      REQUIRE(red.psi(x) == Bits(src.ground_size()));
    } else {
      REQUIRE(red.psi(x) == *st.u);
    }
    bool doubled_opt = st.form == StructuredForm::Uu00 && x == red.embed(*st.u) &&
                       is_local_optimum(src, *st.u);
    REQUIRE(is_local_optimum(*red.target, x) == doubled_opt);
  }
}

}  // namespace

TEST_CASE("doubled-solution circuit values follow the piecewise table", "[swop2circ]") {
  auto src = free_pair();
  auto red = reduce_swop_to_maxcircuit(src);
  REQUIRE(red.declared_tightness == 8);  // 4 times the swap bound, plus 4

  Bits top = Bits::from_string("11");
  REQUIRE(red.target->objective(red.embed(top)) == Rat(35));
  Bits raised = red.embed(top);
  raised.flip(4);  // first selector up
  REQUIRE(red.target->objective(raised) == Rat(34));
  REQUIRE(red.decode(raised).form == StructuredForm::Uu10);

  check_circuit_equivalence(src);
}

TEST_CASE("invalid doubled blocks always land in the fallback band", "[swop2circ]") {
  auto src = adjacent_pair();
  auto red = reduce_swop_to_maxcircuit(src);
  Bits ones(2 * src.ground_size() + 2);
  for (std::uint32_t i = 0; i < ones.size(); ++i) ones.set(i, true);
  REQUIRE(red.decode(ones).form == StructuredForm::Unstructured);
  REQUIRE(red.target->objective(ones) == Rat(0));
  check_circuit_equivalence(src);
}

TEST_CASE("circuit reductions cover signed and wider ground sets", "[swop2circ]") {
  Graph g2;
  g2.n = 2;
  check_circuit_equivalence(
      SwopInstance(g2, {Rat(1), Rat(-1)}, Certifier{CertifierKind::AllSubsets, {}}, 2));
  Graph g3;
  g3.n = 3;
  check_circuit_equivalence(
      SwopInstance(g3, {Rat(1), Rat(2), Rat(2)}, Certifier{CertifierKind::AllSubsets, {}}, 2));
}

TEST_CASE("rewrite walks climb through selector flips in 2H+4 moves", "[swop2circ]") {
  auto src = free_pair();
  auto red = reduce_swop_to_maxcircuit(src);
  Bits from(2);
  Bits to = Bits::from_indices(2, {1});
  auto walk = red.direct_sequence(from, to);
  REQUIRE(walk.size() == 7);  // 2 * 1 + 4 moves
  REQUIRE(walk.front() == red.embed(from));
  REQUIRE(walk.back() == red.embed(to));
  ImprovingSequence seq;
  seq.start = walk.front();
  for (std::size_t i = 1; i < walk.size(); ++i) {
    seq.steps.push_back(walk[i]);
    seq.objectives.push_back(red.target->objective(walk[i]));
  }
  REQUIRE(verify_improving_sequence(*red.target, seq, false).ok);

  REQUIRE_THROWS_AS(red.direct_sequence(from, from), InputContractError);
  REQUIRE_THROWS_AS(red.direct_sequence(to, from), InputContractError);  // downhill
  REQUIRE_THROWS_AS(red.direct_sequence(from, Bits::from_string("11")), InputContractError);
}

TEST_CASE("the doubled-solution bundle is certified with bound 4c+4", "[swop2circ]") {
  auto red = reduce_swop_to_maxcircuit(free_pair());
  auto rep = check_l_tight(red.to_bundle(), red.declared_tightness);
  REQUIRE(rep.ok());
  REQUIRE(rep.target_nodes == 64);
  // Instances whose empty subset is rejected cannot host the fallback band.
  Graph g;
  g.n = 2;
  g.edges = {{0, 1}};
  SwopInstance cover(g, {Rat(1), Rat(1), Rat(0)}, Certifier{CertifierKind::VertexCover, {}}, 1);
  REQUIRE_THROWS_AS(reduce_swop_to_maxcircuit(cover), InputContractError);
}

TEST_CASE("colored instances validate their class structure", "[mispivot]") {
  auto good = colorable_instance();
  good.check();

  auto two_classes = good;
  two_classes.classes = {{0, 1}, {2, 3, 4}};
  REQUIRE_THROWS_AS(two_classes.check(), InputContractError);

  auto overlap = good;
  overlap.classes = {{0, 1}, {1, 2, 3}, {4}};
  REQUIRE_THROWS_AS(overlap.check(), InputContractError);

  auto gap = good;
  gap.classes = {{0, 1}, {2}, {4}};
  REQUIRE_THROWS_AS(gap.check(), InputContractError);

  auto not_clique = good;
  not_clique.classes = {{0, 4}, {2, 3}, {1}};  // 0 and 4 are not adjacent
  REQUIRE_THROWS_AS(not_clique.check(), InputContractError);

  auto wide_last = good;
  wide_last.classes = {{4}, {0, 1}, {2, 3}};
  REQUIRE_THROWS_AS(wide_last.check(), InputContractError);

  auto out_of_range = good;
  out_of_range.classes = {{0, 1}, {2, 3}, {7}};
  REQUIRE_THROWS_AS(out_of_range.check(), ArityError);
}

TEST_CASE("pivot targets reject unusable seeds", "[mispivot]") {
  auto mis = colorable_instance();
  Graph g;
  g.n = 2;
  g.edges = {{0, 1}};
  Bits start = Bits::from_indices(3, {1});

  SwopInstance not_is(g, {Rat(2), Rat(3), Rat(0)}, Certifier{CertifierKind::AllSubsets, {}}, 3);
  REQUIRE_THROWS_AS(reduce_mis_to_wis_pivot(mis, not_is, start), InputContractError);

  SwopInstance wrong_c(g, {Rat(2), Rat(3), Rat(0)},
                       Certifier{CertifierKind::IndependentSet, {}}, 2);
  REQUIRE_THROWS_AS(reduce_mis_to_wis_pivot(mis, wrong_c, start), InputContractError);

  SwopInstance zero_w(g, {Rat(0), Rat(3), Rat(0)},
                      Certifier{CertifierKind::IndependentSet, {}}, 3);
  REQUIRE_THROWS_AS(reduce_mis_to_wis_pivot(mis, zero_w, start), InputContractError);

  REQUIRE_THROWS_AS(reduce_mis_to_wis_pivot(mis, seed_instance(), Bits::from_indices(3, {2})),
                    CertificationError);
}

TEST_CASE("a colorable instance admits a short pivot, and the filled set is a sink",
          "[mispivot]") {
  auto mis = colorable_instance();
  auto seed = seed_instance();
  Bits seed_start = Bits::from_indices(3, {1});
  auto pivot = reduce_mis_to_wis_pivot(mis, seed, seed_start);

  REQUIRE(pivot.n == 5);
  REQUIRE(pivot.seed_n == 2);
  REQUIRE(pivot.k == 3);
  REQUIRE(pivot.builder.size() == 10);  // 5 colored + 2 seed + 1 chain + v* + w*
  REQUIRE_FALSE(pivot.y.has_value());
  REQUIRE(pivot.builder.weight(pivot.seed_vertex(0)) == Rat(80));  // factor 8n = 40
  REQUIRE(pivot.builder.weight(pivot.seed_vertex(1)) == Rat(120));
  REQUIRE(pivot.omega_max == Rat(120));
  REQUIRE(pivot.builder.weight(pivot.vstar) == Rat(240));
  REQUIRE(pivot.builder.weight(pivot.wstar) == Rat(361));
  REQUIRE(pivot.builder.weight(pivot.x_vertex(2)) == Rat(3));

  const auto& tgt = *pivot.target;
  REQUIRE(tgt.valid(pivot.start));
  REQUIRE(pivot.start.get(pivot.vstar));
  REQUIRE(pivot.start.get(4));  // last color class
  REQUIRE(pivot.start.get(pivot.seed_vertex(1)));
  REQUIRE(pivot.bottleneck.get(pivot.wstar));

  auto rep = pivot_search_bounded(tgt, pivot.start, pivot.k);
  REQUIRE(rep.outcome == SolveOutcome::LocalOptimumFound);
  REQUIRE(rep.steps >= 1);
  REQUIRE(rep.steps <= pivot.k);
  REQUIRE(verify_improving_sequence(tgt, rep.sequence, true).ok);

  // Filling the colored side with a full multicolored independent set while
  // keeping the guard vertex produces a local optimum.
  Bits filled(tgt.ground_size());
  for (auto v : {0u, 2u, 4u}) filled.set(v, true);
  filled.set(pivot.seed_vertex(1), true);
  filled.set(pivot.vstar, true);
  REQUIRE(tgt.valid(filled));
  REQUIRE(is_local_optimum(tgt, filled));

  // Some maximal run avoids the pass-through solution entirely.
  auto tg = build_transition_graph(tgt, 1u << 20);
  auto sid = tg.node_id(pivot.start);
  auto bid = tg.node_id(pivot.bottleneck);
  REQUIRE(sid.has_value());
  REQUIRE(bid.has_value());
  std::vector<int> memo(tg.nodes.size(), -1);
  REQUIRE_FALSE(all_paths_hit(tg, *sid, *bid, memo));
}

TEST_CASE("an uncolorable instance funnels every maximal run through w*", "[mispivot]") {
  auto pivot = reduce_mis_to_wis_pivot(uncolorable_instance(), seed_instance(),
                                       Bits::from_indices(3, {1}));
  const auto& tgt = *pivot.target;
  auto tg = build_transition_graph(tgt, 1u << 20);
  auto sid = tg.node_id(pivot.start);
  auto bid = tg.node_id(pivot.bottleneck);
  REQUIRE(sid.has_value());
  REQUIRE(bid.has_value());
  REQUIRE(tg.is_sink(*bid));
  std::vector<int> memo(tg.nodes.size(), -1);
  REQUIRE(all_paths_hit(tg, *sid, *bid, memo));
}
