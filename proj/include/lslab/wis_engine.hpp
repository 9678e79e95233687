#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <vector>

#include "lslab/errors.hpp"

namespace lslab {

// Word-packed engine for vertex-weight independent-set instances: solution
// enumeration, sink tests, and improving-swap enumeration for swap bound 3.
// Weights must be positive and fit int64. Solutions here are vertex-only
// words; callers pad edge coordinates back on when talking to the public
// bit-vector interfaces.
class WisEngine {
 public:
  std::uint32_t nv = 0;
  std::uint32_t nw = 0;
  std::vector<std::uint64_t> adj;                    // nv rows * nw words
  std::vector<std::int64_t> w;                       // positive
  std::vector<std::vector<std::uint32_t>> nlist;     // ascending neighbor lists

  static constexpr std::uint32_t kMaxWords = 8;

  using Set = std::vector<std::uint64_t>;

  static WisEngine build(std::uint32_t nv,
                         const std::vector<std::vector<std::uint32_t>>& neighbor_lists,
                         std::vector<std::int64_t> weights) {
    WisEngine e;
    e.nv = nv;
    e.nw = (nv + 63) / 64;
    if (e.nw > kMaxWords) throw ResourceError("independent-set engine limited to 512 vertices");
    if (e.nw == 0) e.nw = 1;
    e.adj.assign(std::size_t(nv) * e.nw, 0);
    e.w = std::move(weights);
    e.nlist = neighbor_lists;
    for (std::uint32_t v = 0; v < nv; ++v) {
      if (e.w[v] <= 0) throw InputContractError("engine requires positive vertex weights");
      for (auto u : e.nlist[v]) e.adj[std::size_t(v) * e.nw + (u >> 6)] |= std::uint64_t(1) << (u & 63);
    }
    return e;
  }

  const std::uint64_t* row(std::uint32_t v) const { return adj.data() + std::size_t(v) * nw; }

  static bool test(const std::uint64_t* S, std::uint32_t i) {
    return (S[i >> 6] >> (i & 63)) & 1u;
  }

  std::int64_t weight_of(const std::uint64_t* S) const {
    std::int64_t t = 0;
    for (std::uint32_t k = 0; k < nw; ++k) {
      std::uint64_t x = S[k];
      while (x) {
        std::uint32_t b = static_cast<std::uint32_t>(std::countr_zero(x));
        x &= x - 1;
        t += w[(k << 6) + b];
      }
    }
    return t;
  }

  std::uint32_t conflict_count(const std::uint64_t* S, std::uint32_t u) const {
    const std::uint64_t* r = row(u);
    std::uint32_t c = 0;
    for (std::uint32_t k = 0; k < nw; ++k) c += static_cast<std::uint32_t>(std::popcount(r[k] & S[k]));
    return c;
  }

  std::int64_t conflict_weight(const std::uint64_t* S, std::uint32_t u) const {
    const std::uint64_t* r = row(u);
    std::int64_t t = 0;
    for (std::uint32_t k = 0; k < nw; ++k) {
      std::uint64_t x = r[k] & S[k];
      while (x) {
        std::uint32_t b = static_cast<std::uint32_t>(std::countr_zero(x));
        x &= x - 1;
        t += w[(k << 6) + b];
      }
    }
    return t;
  }

  bool independent(const std::uint64_t* S) const {
    for (std::uint32_t k = 0; k < nw; ++k) {
      std::uint64_t x = S[k];
      while (x) {
        std::uint32_t b = static_cast<std::uint32_t>(std::countr_zero(x));
        x &= x - 1;
        const std::uint64_t* r = row((k << 6) + b);
        for (std::uint32_t j = 0; j < nw; ++j)
          if (r[j] & S[j]) return false;
      }
    }
    return true;
  }

  // Every independent set in ascending lex order (coordinate 0 most
  // significant, 0 before 1): emit a set before its supersets, and
  // descend into extension vertices in decreasing index order.
  // leaf(S, blocked): blocked = union of neighborhoods of S. Both transient.
  template <class F>
  void enumerate(std::uint64_t budget, F&& leaf) const {
    Set S(nw, 0), blocked(nw, 0);
    std::uint64_t emitted = 0;
    rec_enum(S.data(), blocked.data(), 0, emitted, budget, leaf);
  }

  std::uint64_t count_valid(std::uint64_t budget) const {
    std::uint64_t n = 0;
    enumerate(budget, [&](const std::uint64_t*, const std::uint64_t*) { ++n; });
    return n;
  }

  bool has_improving(const std::uint64_t* S, const std::uint64_t* blocked) const {
    // Free vertex: adding it alone improves (weights positive).
    for (std::uint32_t k = 0; k < nw; ++k) {
      std::uint64_t freew = ~(S[k] | blocked[k]) & word_mask(k);
      if (freew) return true;
    }
    // No free vertex: single adds paying off their blockers, then pairs
    // sharing one blocker. Swap bound 3 admits nothing else here.
    std::vector<std::uint32_t> single_u;
    for (std::uint32_t u = 0; u < nv; ++u) {
      if (test(S, u)) continue;
      std::uint32_t kc = conflict_count(S, u);
      if (kc >= 1 && kc <= 2 && w[u] > conflict_weight(S, u)) return true;
      if (kc == 1) single_u.push_back(u);
    }
    return pair_swap_exists(S, single_u, nullptr);
  }

  bool has_improving_set(const Set& S) const {
    Set blocked(nw, 0);
    fill_blocked(S.data(), blocked.data());
    return has_improving(S.data(), blocked.data());
  }

  // Full improving-move enumeration for swap bound 3.
  // cb(adds, na, rems, nr); index arrays are transient.
  template <class F>
  void for_each_improving(const Set& S, F&& cb) const {
    Set blocked(nw, 0);
    fill_blocked(S.data(), blocked.data());
    const std::uint64_t* Sp = S.data();

    std::vector<std::uint32_t> members = set_indices(Sp);
    std::vector<std::uint32_t> freev;
    std::vector<std::uint32_t> k1, k2;  // outside vertices with 1 / 2 conflicts
    for (std::uint32_t u = 0; u < nv; ++u) {
      if (test(Sp, u)) continue;
      if (!test(blocked.data(), u)) {
        freev.push_back(u);
        continue;
      }
      std::uint32_t kc = conflict_count(Sp, u);
      if (kc == 1) k1.push_back(u);
      else if (kc == 2) k2.push_back(u);
    }

    std::uint32_t adds[3], rems[3];

    // a=1, free: remove any 0..2 members lighter than the gain.
    for (auto u : freev) {
      adds[0] = u;
      cb(adds, 1, rems, 0);
      for (std::size_t i = 0; i < members.size(); ++i) {
        if (w[members[i]] >= w[u]) continue;
        rems[0] = members[i];
        cb(adds, 1, rems, 1);
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          if (w[members[i]] + w[members[j]] >= w[u]) continue;
          rems[1] = members[j];
          cb(adds, 1, rems, 2);
        }
      }
    }
    // a=1, one conflict: pay the blocker, optionally one extra member.
    for (auto u : k1) {
      std::uint32_t t = first_conflict(Sp, u);
      if (w[u] <= w[t]) continue;
      adds[0] = u;
      rems[0] = t;
      cb(adds, 1, rems, 1);
      for (auto e : members) {
        if (e == t || w[t] + w[e] >= w[u]) continue;
        rems[1] = e;
        cb(adds, 1, rems, 2);
      }
    }
    // a=1, two conflicts.
    for (auto u : k2) {
      if (w[u] <= conflict_weight(Sp, u)) continue;
      adds[0] = u;
      two_conflicts(Sp, u, rems);
      cb(adds, 1, rems, 2);
    }
    // a=2, both free: optional single removal.
    for (std::size_t i = 0; i < freev.size(); ++i)
      for (std::size_t j = i + 1; j < freev.size(); ++j) {
        std::uint32_t u = freev[i], v = freev[j];
        if (adjacent(u, v)) continue;
        adds[0] = u;
        adds[1] = v;
        cb(adds, 2, rems, 0);
        for (auto e : members) {
          if (w[e] >= w[u] + w[v]) continue;
          rems[0] = e;
          cb(adds, 2, rems, 1);
        }
      }
    // a=2, one shared blocker: one free + one single-conflict, or two
    // single-conflict vertices with the same blocker.
    for (auto u : k1) {
      std::uint32_t t = first_conflict(Sp, u);
      adds[0] = u;
      rems[0] = t;
      for (auto v : freev) {
        if (adjacent(u, v) || w[u] + w[v] <= w[t]) continue;
        adds[1] = v;
        cb(adds, 2, rems, 1);
      }
      for (auto v : k1) {
        if (v <= u) continue;
        if (first_conflict(Sp, v) != t) continue;
        if (adjacent(u, v) || w[u] + w[v] <= w[t]) continue;
        adds[1] = v;
        cb(adds, 2, rems, 1);
      }
    }
    // a=3, all free, mutually non-adjacent.
    for (std::size_t i = 0; i < freev.size(); ++i)
      for (std::size_t j = i + 1; j < freev.size(); ++j) {
        if (adjacent(freev[i], freev[j])) continue;
        for (std::size_t l = j + 1; l < freev.size(); ++l) {
          if (adjacent(freev[i], freev[l]) || adjacent(freev[j], freev[l])) continue;
          adds[0] = freev[i];
          adds[1] = freev[j];
          adds[2] = freev[l];
          cb(adds, 3, rems, 0);
        }
      }
  }

  bool adjacent(std::uint32_t u, std::uint32_t v) const {
    return (row(u)[v >> 6] >> (v & 63)) & 1u;
  }

  void fill_blocked(const std::uint64_t* S, std::uint64_t* blocked) const {
    for (std::uint32_t k = 0; k < nw; ++k) {
      std::uint64_t x = S[k];
      while (x) {
        std::uint32_t b = static_cast<std::uint32_t>(std::countr_zero(x));
        x &= x - 1;
        const std::uint64_t* r = row((k << 6) + b);
        for (std::uint32_t j = 0; j < nw; ++j) blocked[j] |= r[j];
      }
    }
  }

  std::vector<std::uint32_t> set_indices(const std::uint64_t* S) const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t k = 0; k < nw; ++k) {
      std::uint64_t x = S[k];
      while (x) {
        std::uint32_t b = static_cast<std::uint32_t>(std::countr_zero(x));
        x &= x - 1;
        out.push_back((k << 6) + b);
      }
    }
    return out;
  }

  std::uint64_t word_mask(std::uint32_t k) const {
    std::uint32_t hi = (k + 1) * 64;
    if (hi <= nv) return ~std::uint64_t(0);
    std::uint32_t rem = nv - k * 64;
    return rem == 0 ? 0 : (~std::uint64_t(0) >> (64 - rem));
  }

 private:
  std::uint32_t first_conflict(const std::uint64_t* S, std::uint32_t u) const {
    const std::uint64_t* r = row(u);
    for (std::uint32_t k = 0; k < nw; ++k) {
      std::uint64_t x = r[k] & S[k];
      if (x) return (k << 6) + static_cast<std::uint32_t>(std::countr_zero(x));
    }
    throw InternalError("conflict lookup on conflict-free vertex");
  }

  void two_conflicts(const std::uint64_t* S, std::uint32_t u, std::uint32_t* out) const {
    const std::uint64_t* r = row(u);
    std::uint32_t n = 0;
    for (std::uint32_t k = 0; k < nw && n < 2; ++k) {
      std::uint64_t x = r[k] & S[k];
      while (x && n < 2) {
        std::uint32_t b = static_cast<std::uint32_t>(std::countr_zero(x));
        x &= x - 1;
        out[n++] = (k << 6) + b;
      }
    }
  }

  bool pair_swap_exists(const std::uint64_t* S, const std::vector<std::uint32_t>& single_u,
                        const std::uint64_t*) const {
    // Pairs of outside vertices with exactly one conflict each, sharing the
    // same blocker, mutually non-adjacent, jointly outweighing it.
    for (std::size_t i = 0; i < single_u.size(); ++i) {
      std::uint32_t u = single_u[i];
      std::uint32_t t = first_conflict(S, u);
      for (std::size_t j = i + 1; j < single_u.size(); ++j) {
        std::uint32_t v = single_u[j];
        if (first_conflict(S, v) != t) continue;
        if (adjacent(u, v)) continue;
        if (w[u] + w[v] > w[t]) return true;
      }
    }
    return false;
  }

  template <class F>
  void rec_enum(std::uint64_t* S, std::uint64_t* blocked, std::uint32_t from,
                std::uint64_t& emitted, std::uint64_t budget, F&& leaf) const {
    if (++emitted > budget) throw BudgetError("independent-set enumeration over budget", budget);
    leaf(S, blocked);
    std::uint64_t saved[kMaxWords];
    std::uint32_t fw = from >> 6;
    for (std::uint32_t ki = nw; ki-- > fw;) {
      std::uint64_t freew = ~(S[ki] | blocked[ki]) & word_mask(ki);
      if (ki == fw && (from & 63)) freew &= ~std::uint64_t(0) << (from & 63);
      while (freew) {
        std::uint32_t b = 63 - static_cast<std::uint32_t>(std::countl_zero(freew));
        freew &= ~(std::uint64_t(1) << b);
        std::uint32_t u = (ki << 6) + b;
        S[ki] |= std::uint64_t(1) << b;
        std::memcpy(saved, blocked, nw * sizeof(std::uint64_t));
        const std::uint64_t* r = row(u);
        for (std::uint32_t j = 0; j < nw; ++j) blocked[j] |= r[j];
        rec_enum(S, blocked, u + 1, emitted, budget, leaf);
        std::memcpy(blocked, saved, nw * sizeof(std::uint64_t));
        S[ki] &= ~(std::uint64_t(1) << b);
      }
    }
  }
};

}  // namespace lslab
