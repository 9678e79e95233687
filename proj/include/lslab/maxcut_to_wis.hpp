#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "lslab/bundle.hpp"
#include "lslab/maxcut.hpp"
#include "lslab/simulator.hpp"

namespace lslab {

// Fixed vertex layout of the produced independent-set graph. Companion
// ("prime") vertices come first so that every elevator's carried ordering,
// which follows ascending ids, starts with the two companions.
struct MaxCutWisLayout {
  std::uint32_t n = 0;  // cut instance vertices
  std::uint32_t m = 0;  // cut instance edges

  // side: 0 for A, 1 for B; k: 0 for ', 1 for ''
  std::uint32_t prime(std::uint32_t v, std::uint32_t side, std::uint32_t k) const {
    return 4 * v + 2 * side + k;
  }
  std::uint32_t anchor(std::uint32_t v, std::uint32_t side) const { return 4 * n + 2 * v + side; }
  // slot 0 carries the stored edge orientation (first, second), slot 1 the reverse
  std::uint32_t cross(std::uint32_t eidx, std::uint32_t slot) const {
    return 6 * n + 2 * eidx + slot;
  }
  std::uint32_t core_size() const { return 6 * n + 2 * m; }
};

struct FlipSimulator {
  std::uint32_t v = 0;
  bool reversed = false;            // false: A-to-B walk, true: B-to-A walk
  std::vector<std::uint32_t> p;     // neighbors on the destination side, ascending
  std::vector<std::uint32_t> q;     // neighbors on the origin side, ascending
  Simulator sim;
};

class MaxCutToWis {
 public:
  std::shared_ptr<const MaxCutInstance> source;
  std::shared_ptr<const SwopInstance> target;
  GraphBuilder builder;  // labels and weights of the produced graph
  MaxCutWisLayout layout;
  std::vector<FlipSimulator> sims;
  std::vector<Rat> edge_weight;  // rescaled cut edge weights
  Rat alpha;                     // companion weight; anchors weigh 4*alpha*n
  std::uint64_t declared_tightness = 0;

  Bits psi(const Bits& s) const {
    if (s.size() != target->ground_size()) throw ArityError("payload width mismatch");
    Bits cut(layout.n);
    for (std::uint32_t v = 0; v < layout.n; ++v) {
      bool on_a = s.get(layout.anchor(v, 0)) || s.get(layout.prime(v, 0, 0)) ||
                  s.get(layout.prime(v, 0, 1));
      cut.set(v, !on_a);  // no trace of side A defaults to side B
    }
    return cut;
  }

  Bits embed(const Bits& cut) const {
    if (cut.size() != layout.n) throw ArityError("payload width mismatch");
    Bits s(target->ground_size());
    for (std::uint32_t v = 0; v < layout.n; ++v) {
      std::uint32_t side = cut.get(v) ? 1 : 0;
      s.set(layout.anchor(v, side), true);
      s.set(layout.prime(v, side, 0), true);
      s.set(layout.prime(v, side, 1), true);
    }
    auto& edges = source->edges;
    for (std::uint32_t e = 0; e < edges.size(); ++e) {
      auto [u, w] = edges[e];
      if (cut.get(u) == cut.get(w)) continue;
      s.set(layout.cross(e, cut.get(u) ? 1 : 0), true);  // first coordinate on side A
    }
    return s;
  }

  bool r_member(const Bits& s) const { return embed(psi(s)) == s; }

  // The canonical walk simulating one improving flip: climb the up elevator
  // past the departing crossing vertices, take the turn, descend while
  // releasing the arriving ones. Requires cuts differing in one flip that
  // strictly improves; the walk has flip-degree + 4 moves.
  std::vector<Bits> direct_sequence(const Bits& cut, const Bits& next) const {
    if (cut.size() != layout.n || next.size() != layout.n)
      throw ArityError("payload width mismatch");
    if (cut.diff_count(next) != 1) throw InputContractError("cuts must differ by one flip");
    std::uint32_t v = cut.xored(next).indices().front();
    bool reversed = cut.get(v);  // flipping away from side B
    std::vector<std::uint32_t> p;
    // Bind before iterating: the range-for would otherwise reference into a
    // temporary destroyed ahead of the loop body.
    auto lists = source->to_graph().neighbor_lists();
    for (auto r : lists[v])
      if (cut.get(r) == next.get(v)) p.push_back(r);
    const FlipSimulator* fs = nullptr;
    for (auto& cand : sims)
      if (cand.v == v && cand.reversed == reversed && cand.p == p) fs = &cand;
    if (!fs) throw InputContractError("no simulator for this flip: it does not improve");

    std::vector<Bits> walk;
    Bits s = embed(cut);
    walk.push_back(s);
    auto move = [&](const std::vector<std::uint32_t>& add, const std::vector<std::uint32_t>& rem) {
      for (auto i : rem) {
        if (!s.get(i)) throw InternalError("walk removes an absent vertex");
        s.set(i, false);
      }
      for (auto i : add) {
        if (s.get(i)) throw InternalError("walk adds a present vertex");
        s.set(i, true);
      }
      walk.push_back(s);
    };
    const Simulator& sim = fs->sim;
    move({sim.up.levels[0]}, {sim.spec.up_carried[0], sim.spec.up_carried[1]});
    for (std::size_t j = 0; j + 1 < sim.up.levels.size(); ++j) {
      auto st = elevator_climb_step(sim.up, j);
      move(st.add, st.remove);
    }
    move({sim.turn}, {sim.up.top(), sim.spec.anchor_in});
    move({sim.down.top(), sim.spec.anchor_out}, {sim.turn});
    for (std::size_t j = sim.down.levels.size() - 1; j > 0; --j) {
      auto st = elevator_descend_step(sim.down, j);
      move(st.add, st.remove);
    }
    auto st = elevator_descend_step(sim.down, 0);
    move(st.add, st.remove);
    if (s != embed(next)) throw InternalError("walk does not land on the embedded flip");
    return walk;
  }

  ReductionBundle to_bundle() const {
    ReductionBundle b;
    b.name = "maxcut-to-wis";
    b.source = source;
    b.target = target;
    b.psi = [this](const Bits& s) { return psi(s); };
    b.embed = [this](const Bits& s) { return embed(s); };
    b.r_member = [this](const Bits& s) { return r_member(s); };
    b.declared_tightness = declared_tightness;
    b.direct_sequence = [this](const Bits& a, const Bits& c) { return direct_sequence(a, c); };
    return b;
  }
};

// Rescales edge weights so that any strict cut imbalance beats the slack the
// gadget arithmetic introduces: weights become multiples of q, for q the
// least multiple of 2n reaching n+3, and any two distinct neighborhood sums
// then differ by at least q.
inline Rat maxcut_wis_weight_unit(std::uint32_t n) {
  std::uint32_t q = 2 * n;
  while (q < n + 3) q += 2 * n;
  return Rat(q);
}

inline MaxCutToWis reduce_maxcut_to_wis(const MaxCutInstance& mc) {
  Graph g = mc.to_graph();
  std::uint32_t n = g.n;
  std::uint32_t m = g.edge_count();
  if (m == 0) throw InputContractError("the cut instance must have at least one edge");
  if (g.has_parallel_edges()) throw InputContractError("parallel edges are not supported here");
  for (auto& w : mc.we)
    if (sign_of(w) <= 0) throw InputContractError("edge weights must be positive");

  MaxCutToWis red;
  red.source = std::make_shared<MaxCutInstance>(mc);
  red.layout = {n, m};

  // Clear denominators, then rescale so every weight is a multiple of the
  // required unit and sums of distinct neighbor sets stay far apart.
  BigInt denom(1);
  for (auto& w : mc.we) denom = lcm_big(denom, rat_den(w));
  BigInt common(0);
  for (auto& w : mc.we) common = gcd_big(common, rat_num(w * Rat(denom)));
  BigInt unit = rat_num(maxcut_wis_weight_unit(n));
  Rat kappa = Rat(unit / gcd_big(unit, common)) * Rat(denom);
  Rat total(0);
  for (auto& w : mc.we) {
    red.edge_weight.push_back(w * kappa);
    total += w * kappa;
  }
  red.alpha = Rat(2) * total;

  GraphBuilder& b = red.builder;
  const MaxCutWisLayout& lay = red.layout;
  const char* side_name[2] = {"A", "B"};
  for (std::uint32_t v = 0; v < n; ++v)
    for (std::uint32_t side = 0; side < 2; ++side)
      for (std::uint32_t k = 0; k < 2; ++k) {
        auto id = b.add("v" + std::to_string(v) + side_name[side] + (k ? "''" : "'"), red.alpha);
        if (id != lay.prime(v, side, k)) throw InternalError("layout drift");
      }
  for (std::uint32_t v = 0; v < n; ++v)
    for (std::uint32_t side = 0; side < 2; ++side) {
      auto id = b.add("v" + std::to_string(v) + side_name[side], red.alpha * Rat(4) * Rat(n));
      if (id != lay.anchor(v, side)) throw InternalError("layout drift");
    }
  for (std::uint32_t e = 0; e < m; ++e) {
    auto [u, w] = g.edges[e];
    auto id0 = b.add("x" + std::to_string(u) + "," + std::to_string(w), red.edge_weight[e]);
    auto id1 = b.add("x" + std::to_string(w) + "," + std::to_string(u), red.edge_weight[e]);
    if (id0 != lay.cross(e, 0) || id1 != lay.cross(e, 1)) throw InternalError("layout drift");
  }

  auto triple = [&](std::uint32_t v, std::uint32_t side) {
    return std::vector<std::uint32_t>{lay.anchor(v, side), lay.prime(v, side, 0),
                                      lay.prime(v, side, 1)};
  };
  for (std::uint32_t v = 0; v < n; ++v) b.biclique(triple(v, 0), triple(v, 1));

  // Crossing vertex x_{u,w}: conflicts pin u to side A and w to side B.
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> eidx;
  for (std::uint32_t e = 0; e < m; ++e) {
    auto [u, w] = g.edges[e];
    eidx[{std::min(u, w), std::max(u, w)}] = e;
  }
  auto xvert = [&](std::uint32_t from, std::uint32_t to) {
    auto e = eidx.at({std::min(from, to), std::max(from, to)});
    return lay.cross(e, g.edges[e].first == from ? 0 : 1);
  };
  auto nbrs = g.neighbor_lists();
  for (std::uint32_t v = 0; v < n; ++v)
    for (auto u : nbrs[v]) {
      b.connect(xvert(u, v), triple(v, 0));
      b.connect(xvert(v, u), triple(v, 1));
      for (auto w : nbrs[v]) b.edge(xvert(u, v), xvert(v, w));
    }

  // One simulator per vertex, direction, and improving neighborhood split:
  // p holds the destination-side neighbors (their crossing vertices leave),
  // q the origin-side ones (their crossing vertices arrive).
  std::uint64_t max_deg = 0;
  for (std::uint32_t v = 0; v < n; ++v) max_deg = std::max<std::uint64_t>(max_deg, nbrs[v].size());
  if (max_deg > 20) throw ResourceError("degree too large to enumerate neighborhood splits");
  red.declared_tightness = max_deg + 4;

  for (std::uint32_t v = 0; v < n; ++v) {
    std::uint32_t d = static_cast<std::uint32_t>(nbrs[v].size());
    for (std::uint32_t dir = 0; dir < 2; ++dir) {
      bool rev = dir == 1;  // origin side B
      std::uint32_t from = rev ? 1u : 0u, to = 1u - from;
      for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
        FlipSimulator fs;
        fs.v = v;
        fs.reversed = rev;
        Rat sp(0), sq(0);
        for (std::uint32_t i = 0; i < d; ++i) {
          auto r = nbrs[v][i];
          Rat we = red.edge_weight[eidx.at({std::min(v, r), std::max(v, r)})];
          if (mask & (1u << i)) {
            fs.p.push_back(r);
            sp += we;
          } else {
            fs.q.push_back(r);
            sq += we;
          }
        }
        if (!(sp < sq)) continue;

        SimulatorSpec spec;
        spec.anchor_in = lay.anchor(v, from);
        spec.anchor_out = lay.anchor(v, to);
        spec.up_carried = {lay.prime(v, from, 0), lay.prime(v, from, 1)};
        for (auto pp : fs.p)
          spec.up_carried.push_back(rev ? xvert(pp, v) : xvert(v, pp));
        spec.down_carried = {lay.prime(v, to, 0), lay.prime(v, to, 1)};
        for (auto qq : fs.q)
          spec.down_carried.push_back(rev ? xvert(v, qq) : xvert(qq, v));
        std::sort(spec.up_carried.begin() + 2, spec.up_carried.end());
        std::sort(spec.down_carried.begin() + 2, spec.down_carried.end());

        std::vector<std::uint32_t> marks;  // triples the walk is incompatible with
        for (auto pp : fs.p)
          for (auto t : triple(pp, from)) marks.push_back(t);
        for (auto qq : fs.q)
          for (auto t : triple(qq, to)) marks.push_back(t);

        spec.up_external = marks;
        for (auto t : triple(v, to)) spec.up_external.push_back(t);
        for (auto qq : fs.q) spec.up_external.push_back(rev ? xvert(v, qq) : xvert(qq, v));
        for (auto r : nbrs[v]) spec.up_external.push_back(rev ? xvert(v, r) : xvert(r, v));

        spec.down_external = marks;
        for (auto t : triple(v, from)) spec.down_external.push_back(t);
        for (auto pp : fs.p) spec.down_external.push_back(rev ? xvert(pp, v) : xvert(v, pp));
        for (auto r : nbrs[v]) spec.down_external.push_back(rev ? xvert(r, v) : xvert(v, r));

        spec.turn_external = marks;
        for (std::uint32_t side = 0; side < 2; ++side)
          for (std::uint32_t k = 0; k < 2; ++k)
            spec.turn_external.push_back(lay.prime(v, side, k));
        for (auto r : nbrs[v]) {
          spec.turn_external.push_back(xvert(v, r));
          spec.turn_external.push_back(xvert(r, v));
        }
        spec.turn_external.push_back(lay.anchor(v, 0));
        spec.turn_external.push_back(lay.anchor(v, 1));

        std::string tag = "s" + std::to_string(v) + (rev ? "r" : "f") + std::to_string(mask);
        fs.sim = build_simulator(b, spec, tag);
        if (!simulator_exchange_gap_ok(b, fs.sim))
          throw InternalError("rescaled weights must satisfy the exchange gap");
        red.sims.push_back(std::move(fs));
      }
    }
  }

  // Everything outside the core is one clique, so at most one gadget vertex
  // can ever be picked at a time.
  std::vector<std::uint32_t> dset;
  for (std::uint32_t i = lay.core_size(); i < b.size(); ++i) dset.push_back(i);
  b.clique(dset);

  red.target = std::make_shared<SwopInstance>(b.to_wis(3));
  return red;
}

}  // namespace lslab
