#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lslab/simulator.hpp"
#include "lslab/transition.hpp"

namespace lslab {

// Colored independent-set instance: color classes partition the vertices and
// every class is a clique, so any independent set picks at most one vertex
// per class. The last class must be a single vertex.
struct MisInstance {
  Graph g;
  std::vector<std::vector<std::uint32_t>> classes;

  std::uint32_t k() const { return static_cast<std::uint32_t>(classes.size()); }

  void check() const {
    g.check();
    for (auto& [u, v] : g.edges)
      if (u == v) throw InputContractError("self-loops are not supported");
    if (classes.size() < 3) throw InputContractError("need at least three color classes");
    std::vector<std::uint32_t> owner(g.n, g.n);
    for (std::size_t i = 0; i < classes.size(); ++i) {
      if (classes[i].empty()) throw InputContractError("color classes must be nonempty");
      for (auto v : classes[i]) {
        if (v >= g.n) throw ArityError("class member out of range");
        if (owner[v] != g.n) throw InputContractError("color classes must be disjoint");
        owner[v] = static_cast<std::uint32_t>(i);
      }
    }
    for (std::uint32_t v = 0; v < g.n; ++v)
      if (owner[v] == g.n) throw InputContractError("color classes must cover every vertex");
    auto adj = g.adjacency_masks();
    for (auto& cls : classes)
      for (std::size_t a = 0; a < cls.size(); ++a)
        for (std::size_t b = a + 1; b < cls.size(); ++b)
          if (!adj[cls[a]].get(cls[b]))
            throw InputContractError("each color class must be a clique");
    if (classes.back().size() != 1)
      throw InputContractError("the last color class must have exactly one vertex");
  }
};

// The produced pivot instance: graph ids are laid out as
// [colored vertices | seed vertices | x chain | y levels | v* | w*].
struct MisPivot {
  std::shared_ptr<const MisInstance> mis;
  std::shared_ptr<const SwopInstance> target;
  GraphBuilder builder;
  Bits start;       // T = seed start + last class vertex + v*
  Bits bottleneck;  // seed start + w*: the pass-through solution on no-instances
  std::uint32_t n = 0;       // colored vertices
  std::uint32_t seed_n = 0;  // seed vertices
  std::uint32_t k = 0;
  std::uint32_t x0 = 0;  // id of the first chain vertex
  std::optional<Elevator> y;
  std::uint32_t vstar = 0;
  std::uint32_t wstar = 0;
  Rat omega_max;  // largest rescaled seed weight

  std::uint32_t seed_vertex(std::uint32_t u) const { return n + u; }
  std::uint32_t x_vertex(std::uint32_t i) const { return x0 + (i - 2); }  // i in [2, k-1]
};

// Wires the colored graph to a weighted-independent-set seed so that a
// maximal improving sequence from the start is short exactly when a full
// multicolored independent set exists; otherwise every maximal sequence must
// fall through w* into the seed.
inline MisPivot reduce_mis_to_wis_pivot(const MisInstance& mis, const SwopInstance& seed,
                                        const Bits& seed_start) {
  mis.check();
  if (seed.cert.kind != CertifierKind::IndependentSet)
    throw InputContractError("the seed must be an independent-set instance");
  if (seed.c != 3) throw InputContractError("the seed must use 3-swaps");
  seed.require_valid(seed_start);
  for (std::uint32_t u = 0; u < seed.g.n; ++u)
    if (sign_of(seed.w[u]) <= 0) throw InputContractError("seed weights must be positive");

  MisPivot out;
  out.mis = std::make_shared<MisInstance>(mis);
  out.n = mis.g.n;
  out.seed_n = seed.g.n;
  out.k = mis.k();

  // Rescale so every seed weight is an integer multiple of 8n: the whole
  // chain-plus-colored part then weighs less than any single seed vertex.
  BigInt denom(1);
  for (std::uint32_t u = 0; u < seed.g.n; ++u) denom = lcm_big(denom, rat_den(seed.w[u]));
  Rat factor = Rat(8) * Rat(out.n) * Rat(denom);
  out.omega_max = Rat(0);

  GraphBuilder& b = out.builder;
  for (std::uint32_t v = 0; v < mis.g.n; ++v) b.add("v" + std::to_string(v), Rat(1));
  for (std::uint32_t u = 0; u < seed.g.n; ++u) {
    Rat w = seed.w[u] * factor;
    if (out.omega_max < w) out.omega_max = w;
    b.add("u" + std::to_string(u), w);
  }
  for (auto& [u, v] : mis.g.edges) b.edge(u, v);
  for (auto& [u, v] : seed.g.edges) b.edge(out.seed_vertex(u), out.seed_vertex(v));

  std::vector<std::uint32_t> others;  // U minus the seed start
  for (std::uint32_t u = 0; u < seed.g.n; ++u)
    if (!seed_start.get(u)) others.push_back(out.seed_vertex(u));

  out.x0 = b.size();
  std::vector<std::uint32_t> xs;
  for (std::uint32_t i = 2; i <= out.k - 1; ++i) {
    auto id = b.add("x" + std::to_string(i), Rat(3));
    xs.push_back(id);
    for (std::uint32_t j = i - 2; j <= i; ++j)
      for (auto v : mis.classes[j]) b.edge(id, v);
  }

  std::vector<std::uint32_t> all_v;
  for (std::uint32_t v = 0; v < mis.g.n; ++v) all_v.push_back(v);
  if (out.k >= 4) {
    std::vector<std::uint32_t> ext = all_v;  // w* joins this neighborhood below
    ext.insert(ext.end(), others.begin(), others.end());
    out.y = attach_elevator(b, ElevatorDirection::Up, xs, ext, "y");
  }

  out.vstar = b.add("v*", Rat(2) * out.omega_max);
  out.wstar = b.add("w*", Rat(3) * out.omega_max + Rat(1));
  b.edge(out.vstar, out.wstar);
  for (auto v : all_v) b.edge(out.wstar, v);
  for (auto x : xs) b.edge(out.wstar, x);
  if (out.y)
    for (auto l : out.y->levels) b.edge(out.wstar, l);
  for (auto u : others) {
    for (auto v : all_v) b.edge(v, u);
    for (auto x : xs) b.edge(x, u);
    if (out.y)
      for (auto l : out.y->levels) b.edge(l, u);
    b.edge(out.vstar, u);
  }

  // The whole colored-plus-chain side must weigh less than one seed vertex.
  Rat side = Rat(3) * Rat(out.k - 2) + Rat(out.k);
  if (out.k > 3) side += Rat(4) * Rat(out.k) - Rat(9);
  if (!(side < Rat(8) * Rat(out.n)))
    throw InternalError("chain-side weight bound does not hold");

  out.target = std::make_shared<SwopInstance>(b.to_wis(3));

  Bits t(out.target->ground_size());
  for (std::uint32_t u = 0; u < seed.g.n; ++u)
    if (seed_start.get(u)) t.set(out.seed_vertex(u), true);
  out.bottleneck = t;
  out.bottleneck.set(out.wstar, true);
  t.set(mis.classes.back().front(), true);
  t.set(out.vstar, true);
  out.start = t;
  out.target->require_valid(out.start);
  out.target->require_valid(out.bottleneck);
  return out;
}

}  // namespace lslab
