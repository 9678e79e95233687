#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "lslab/instance.hpp"
#include "lslab/swop.hpp"

namespace lslab {

// Max Cut under single-vertex flips. A solution assigns each vertex a side:
// bit v = 0 puts v on side A, bit v = 1 on side B; the objective is the
// total weight of edges crossing the partition. Every assignment is valid.
class MaxCutInstance final : public LocalSearchInstance {
 public:
  std::uint32_t n = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::vector<Rat> we;  // nonnegative

  MaxCutInstance(std::uint32_t nv, std::vector<std::pair<std::uint32_t, std::uint32_t>> es,
                 std::vector<Rat> weights)
      : n(nv), edges(std::move(es)), we(std::move(weights)) {
    if (we.size() != edges.size()) throw ArityError("one weight per edge required");
    for (auto& [u, v] : edges) {
      if (u >= n || v >= n) throw ArityError("edge endpoint out of range");
      if (u == v) throw InputContractError("self-loops are not supported");
    }
    for (auto& x : we)
      if (x < 0) throw InputContractError("edge weights must be nonnegative");
  }

  std::uint32_t ground_size() const override { return n; }
  std::string family_name() const override { return "max-cut"; }
  std::string validity_name() const override { return "partition"; }

  bool valid(const Bits& s) const override { return s.size() == n; }

  Rat objective(const Bits& s) const override {
    Rat t = 0;
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (s.get(edges[e].first) != s.get(edges[e].second)) t += we[e];
    return t;
  }

  bool is_neighbor(const Bits& a, const Bits& b) const override {
    return a.diff_count(b) == 1;
  }

  std::vector<Bits> neighbors(const Bits& s) const override {
    std::vector<Bits> out;
    out.reserve(n);
    for (std::uint32_t v = 0; v < n; ++v) {
      Bits nb = s;
      nb.flip(v);
      out.push_back(std::move(nb));
    }
    std::sort(out.begin(), out.end(), [](const Bits& x, const Bits& y) { return x.lex_less(y); });
    return out;
  }

  void enumerate_valid(std::uint64_t budget,
                       const std::function<void(const Bits&)>& cb) const override {
    if (n > 26) throw ResourceError("partition enumeration limited to 26 vertices");
    std::uint64_t total = std::uint64_t(1) << n;
    if (total > budget) throw BudgetError("partition enumeration over budget", budget);
    for (std::uint64_t v = 0; v < total; ++v) cb(Bits::from_counter(n, v));
  }

  std::uint32_t max_incidence_degree() const {
    std::vector<std::uint32_t> d(n, 0);
    for (auto& [u, v] : edges) {
      ++d[u];
      ++d[v];
    }
    std::uint32_t m = 0;
    for (auto x : d) m = std::max(m, x);
    return m;
  }

  Graph to_graph() const {
    Graph g;
    g.n = n;
    g.edges = edges;
    return g;
  }
};

inline Rat cut_value(const MaxCutInstance& inst, const Bits& partition) {
  inst.require_valid(partition);
  return inst.objective(partition);
}

// Max Cut/Flip rendered as a subset-weight instance: each vertex gains D
// isolated companions (D = max incidence degree) tied into an all-or-none
// group, the certifier forces the edge part to be exactly the boundary of
// the selected side, and the swap bound 2D+1 admits exactly one group plus
// its boundary edges per move. Vertex weights 0, edge weights carried over.
struct MaxCutSwopEmbedding {
  std::shared_ptr<SwopInstance> swop;
  std::uint32_t companions_per_vertex = 0;
  // Side-B partition -> certified subset (group vertices plus boundary).
  Bits embed_partition(const Bits& partition) const {
    const auto& inst = *swop;
    Bits s(inst.ground_size());
    std::uint32_t nv_src = partition.size();
    for (std::uint32_t v = 0; v < nv_src; ++v) {
      if (!partition.get(v)) continue;
      s.set(v, true);
      for (std::uint32_t j = 0; j < companions_per_vertex; ++j)
        s.set(nv_src + v * companions_per_vertex + j, true);
    }
    for (std::uint32_t e = 0; e < inst.g.edge_count(); ++e) {
      auto [a, b] = inst.g.edges[e];
      if (partition.get(a) != partition.get(b)) s.set(inst.g.n + e, true);
    }
    return s;
  }
  Bits project_partition(std::uint32_t src_n, const Bits& s) const {
    Bits p(src_n);
    for (std::uint32_t v = 0; v < src_n; ++v) p.set(v, s.get(v));
    return p;
  }
};

inline MaxCutSwopEmbedding embed_maxcut_as_swop(const MaxCutInstance& mc) {
  std::uint32_t d = mc.max_incidence_degree();
  Graph g;
  g.n = mc.n * (1 + d);
  g.edges = mc.edges;  // companions stay isolated
  std::vector<Rat> w(std::size_t(g.n) + g.edges.size(), Rat(0));
  for (std::size_t e = 0; e < mc.edges.size(); ++e) w[g.n + e] = mc.we[e];

  Certifier cert;
  cert.kind = CertifierKind::CutWithBoundary;
  for (std::uint32_t v = 0; v < mc.n; ++v) {
    std::vector<std::uint32_t> grp{v};
    for (std::uint32_t j = 0; j < d; ++j) grp.push_back(mc.n + v * d + j);
    cert.groups.push_back(std::move(grp));
  }

  MaxCutSwopEmbedding out;
  out.swop = std::make_shared<SwopInstance>(std::move(g), std::move(w), std::move(cert), 2 * d + 1);
  out.companions_per_vertex = d;
  return out;
}

}  // namespace lslab
