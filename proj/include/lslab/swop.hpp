#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lslab/graph.hpp"
#include "lslab/instance.hpp"
#include "lslab/wis_engine.hpp"

namespace lslab {

enum class CertifierKind {
  AllSubsets,
  IndependentSet,
  Clique,
  VertexCover,
  GroupedAllOrNone,
  CutWithBoundary,
};

// Closed catalogue of subset certifiers. `groups` feeds the all-or-none
// families (GroupedAllOrNone over arbitrary ground coordinates;
// CutWithBoundary over vertices, ungrouped vertices acting as singletons
// with the first listed member as the group's primary vertex).
struct Certifier {
  CertifierKind kind = CertifierKind::AllSubsets;
  std::vector<std::vector<std::uint32_t>> groups;

  std::string name() const {
    switch (kind) {
      case CertifierKind::AllSubsets: return "all-subsets";
      case CertifierKind::IndependentSet: return "independent-set";
      case CertifierKind::Clique: return "clique";
      case CertifierKind::VertexCover: return "vertex-cover";
      case CertifierKind::GroupedAllOrNone: return "grouped-all-or-none";
      case CertifierKind::CutWithBoundary: return "cut-with-boundary";
    }
    return "?";
  }

  static CertifierKind parse_kind(const std::string& s) {
    if (s == "all-subsets") return CertifierKind::AllSubsets;
    if (s == "independent-set") return CertifierKind::IndependentSet;
    if (s == "clique") return CertifierKind::Clique;
    if (s == "vertex-cover") return CertifierKind::VertexCover;
    if (s == "grouped-all-or-none") return CertifierKind::GroupedAllOrNone;
    if (s == "cut-with-boundary") return CertifierKind::CutWithBoundary;
    throw InputContractError("unknown certifier kind: " + s);
  }
};

// Subset-weight optimization instance: ground set = vertices then edges of a
// graph, additive rational weights, certified subsets, neighborhood = swaps
// of symmetric difference at most c.
class SwopInstance final : public LocalSearchInstance {
 public:
  Graph g;
  std::vector<Rat> w;  // |V| + |E|; edge i lives at coordinate g.n + i
  Certifier cert;
  std::uint32_t c = 1;

  SwopInstance(Graph graph, std::vector<Rat> weights, Certifier certifier, std::uint32_t swap_bound)
      : g(std::move(graph)), w(std::move(weights)), cert(std::move(certifier)), c(swap_bound) {
    g.check();
    for (auto& [u, v] : g.edges)
      if (u == v) throw InputContractError("self-loops are not supported");
    if (w.size() != std::size_t(g.n) + g.edges.size())
      throw ArityError("weight vector must cover vertices then edges");
    if (c == 0) throw InputContractError("swap bound must be positive");
    prepare();
  }

  std::uint32_t ground_size() const override { return g.n + g.edge_count(); }
  std::string family_name() const override { return "swop"; }
  std::string validity_name() const override { return "certifier " + cert.name(); }

  bool valid(const Bits& s) const override {
    if (s.size() != ground_size()) return false;
    switch (cert.kind) {
      case CertifierKind::AllSubsets:
        return true;
      case CertifierKind::IndependentSet: {
        if (edge_bit_present(s)) return false;
        for (std::uint32_t v = 0; v < g.n; ++v)
          if (s.get(v) && adj_[v].intersects(s)) return false;
        return true;
      }
      case CertifierKind::Clique: {
        if (edge_bit_present(s)) return false;
        for (std::uint32_t v = 0; v < g.n; ++v) {
          if (!s.get(v)) continue;
          for (std::uint32_t u = 0; u < g.n; ++u)
            if (u != v && s.get(u) && !adj_[v].get(u)) return false;
        }
        return true;
      }
      case CertifierKind::VertexCover: {
        if (edge_bit_present(s)) return false;
        for (auto& [u, v] : g.edges)
          if (!s.get(u) && !s.get(v)) return false;
        return true;
      }
      case CertifierKind::GroupedAllOrNone: {
        for (auto& grp : cert.groups) {
          bool first = s.get(grp.front());
          for (auto i : grp)
            if (s.get(i) != first) return false;
        }
        return true;
      }
      case CertifierKind::CutWithBoundary: {
        // Vertex part: per-group all-or-none; edge part must equal the
        // boundary of the selected primaries exactly.
        std::vector<bool> in_u(g.n, false);
        for (auto& grp : vgroups_) {
          bool first = s.get(grp.front());
          for (auto i : grp) {
            if (s.get(i) != first) return false;
            in_u[i] = first;
          }
        }
        for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
          auto [a, b] = g.edges[e];
          bool boundary = in_u[a] != in_u[b];
          if (s.get(g.n + e) != boundary) return false;
        }
        return true;
      }
    }
    return false;
  }

  Rat objective(const Bits& s) const override {
    Rat t = 0;
    for (std::uint32_t i = 0; i < s.size(); ++i)
      if (s.get(i)) t += w[i];
    return t;
  }

  bool is_neighbor(const Bits& a, const Bits& b) const override {
    std::uint32_t d = a.diff_count(b);
    return d >= 1 && d <= c;
  }

  std::vector<Bits> neighbors(const Bits& s) const override {
    const auto& masks = swap_masks();
    std::vector<Bits> out;
    for (auto& m : masks) {
      Bits nb = s.xored(m);
      if (valid(nb)) out.push_back(std::move(nb));
    }
    std::sort(out.begin(), out.end(), [](const Bits& x, const Bits& y) { return x.lex_less(y); });
    return out;
  }

  std::vector<Bits> improving_neighbors(const Bits& s) const override {
    if (engine_ && c == 3) {
      auto es = to_engine(s);
      std::vector<Bits> out;
      engine_->for_each_improving(es, [&](const std::uint32_t* adds, int na,
                                          const std::uint32_t* rems, int nr) {
        Bits nb = s;
        for (int i = 0; i < na; ++i) nb.set(adds[i], true);
        for (int i = 0; i < nr; ++i) nb.set(rems[i], false);
        out.push_back(std::move(nb));
      });
      std::sort(out.begin(), out.end(), [](const Bits& x, const Bits& y) { return x.lex_less(y); });
      return out;
    }
    return LocalSearchInstance::improving_neighbors(s);
  }

  bool has_improving_neighbor(const Bits& s) const override {
    if (engine_ && c == 3) return engine_->has_improving_set(to_engine(s));
    return LocalSearchInstance::has_improving_neighbor(s);
  }

  void enumerate_valid(std::uint64_t budget,
                       const std::function<void(const Bits&)>& cb) const override {
    if (cert.kind == CertifierKind::IndependentSet && engine_) {
      Bits scratch(ground_size());
      auto& words = scratch.words();
      engine_->enumerate(budget, [&](const std::uint64_t* S, const std::uint64_t*) {
        for (std::uint32_t k = 0; k < engine_->nw; ++k) words[k] = S[k];
        cb(scratch);
      });
      return;
    }
    LocalSearchInstance::enumerate_valid(budget, cb);
  }

  const std::optional<WisEngine>& engine() const { return engine_; }

  WisEngine::Set to_engine(const Bits& s) const {
    WisEngine::Set es(engine_->nw, 0);
    const auto& words = s.words();
    for (std::uint32_t k = 0; k < engine_->nw; ++k) es[k] = words[k] & engine_->word_mask(k);
    return es;
  }

  Bits from_engine(const WisEngine::Set& es) const {
    Bits s(ground_size());
    auto& words = s.words();
    for (std::uint32_t k = 0; k < engine_->nw; ++k) words[k] = es[k];
    return s;
  }

 private:
  std::vector<Bits> adj_;                            // vertex adjacency over ground width
  std::vector<std::vector<std::uint32_t>> vgroups_;  // CutWithBoundary vertex groups
  std::optional<WisEngine> engine_;
  mutable std::vector<Bits> masks_;                  // lazily built swap masks

  bool edge_bit_present(const Bits& s) const {
    for (std::uint32_t e = 0; e < g.edge_count(); ++e)
      if (s.get(g.n + e)) return true;
    return false;
  }

  void prepare() {
    std::uint32_t width = ground_size();
    auto vmasks = g.adjacency_masks();
    adj_.assign(g.n, Bits(width));
    for (std::uint32_t v = 0; v < g.n; ++v)
      for (auto u : vmasks[v].indices()) adj_[v].set(u, true);

    for (auto& grp : cert.groups) {
      if (grp.empty()) throw InputContractError("empty certifier group");
      for (auto i : grp)
        if (i >= width) throw ArityError("certifier group index out of range");
    }
    if (cert.kind == CertifierKind::CutWithBoundary) {
      std::vector<bool> seen(g.n, false);
      for (auto& grp : cert.groups) {
        for (auto i : grp) {
          if (i >= g.n) throw InputContractError("cut groups must contain vertices only");
          if (seen[i]) throw InputContractError("cut groups must be disjoint");
          seen[i] = true;
        }
        vgroups_.push_back(grp);
      }
      for (std::uint32_t v = 0; v < g.n; ++v)
        if (!seen[v]) vgroups_.push_back({v});
    }
    if (cert.kind == CertifierKind::GroupedAllOrNone) {
      std::vector<bool> seen(width, false);
      for (auto& grp : cert.groups)
        for (auto i : grp) {
          if (seen[i]) throw InputContractError("all-or-none groups must be disjoint");
          seen[i] = true;
        }
    }

    if (cert.kind == CertifierKind::IndependentSet && g.n <= 512) {
      bool integral = true;
      std::vector<std::int64_t> wi(g.n, 0);
      for (std::uint32_t v = 0; v < g.n && integral; ++v) {
        if (rat_den(w[v]) != 1 || w[v] <= 0) {
          integral = false;
          break;
        }
        BigInt nu = rat_num(w[v]);
        if (nu > (BigInt(1) << 50)) {  // sums over <=512 vertices stay in int64
          integral = false;
          break;
        }
        wi[v] = static_cast<std::int64_t>(nu);
      }
      if (integral) engine_.emplace(WisEngine::build(g.n, g.neighbor_lists(), std::move(wi)));
    }
  }

  const std::vector<Bits>& swap_masks() const {
    if (!masks_.empty()) return masks_;
    std::uint32_t width = ground_size();
    std::uint64_t count = 0, acc = 1;
    for (std::uint32_t i = 1; i <= c && i <= width; ++i) {
      acc = acc * (width - i + 1) / i;
      count += acc;
      if (count > 200000) throw ResourceError("swap mask enumeration too large for this ground set");
    }
    std::vector<std::uint32_t> pick;
    build_masks(0, width, pick);
    return masks_;
  }

  void build_masks(std::uint32_t from, std::uint32_t width, std::vector<std::uint32_t>& pick) const {
    if (!pick.empty()) masks_.push_back(Bits::from_indices(width, pick));
    if (pick.size() == c) return;
    for (std::uint32_t i = from; i < width; ++i) {
      pick.push_back(i);
      build_masks(i + 1, width, pick);
      pick.pop_back();
    }
  }
};

// Neighborhood of a certified subset: all certified subsets within symmetric
// difference c, ascending lex order.
inline std::vector<Bits> swop_neighbors(const SwopInstance& inst, const Bits& s) {
  inst.require_valid(s);
  return inst.neighbors(s);
}

}  // namespace lslab
