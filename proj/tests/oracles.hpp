#pragma once
// Brute-force reference implementations used to cross-check the library.
// Everything here recomputes results from first principles in the most
// direct way available and deliberately shares no logic with the code under
// test beyond the public data types.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <utility>
#include <vector>

#include "lslab/bits.hpp"
#include "lslab/circuit.hpp"
#include "lslab/graph.hpp"
#include "lslab/maxcut.hpp"
#include "lslab/rational.hpp"
#include "lslab/rng.hpp"
#include "lslab/swop.hpp"
#include "lslab/swop_to_circuit.hpp"
#include "lslab/transition.hpp"

namespace lslab {

// Test failure messages print solutions as bit strings.
inline std::ostream& operator<<(std::ostream& os, const Bits& b) { return os << b.to_string(); }

namespace testing {

// All bit strings of a given width, ascending lexicographic (coordinate 0
// most significant), which coincides with ascending counter order.
inline std::vector<Bits> every_string(std::uint32_t n) {
  std::vector<Bits> out;
  out.reserve(std::size_t(1) << n);
  for (std::uint64_t v = 0; v < (std::uint64_t(1) << n); ++v)
    out.push_back(Bits::from_counter(n, v));
  return out;
}

inline Rat subset_weight(const std::vector<Rat>& w, const Bits& s) {
  Rat total(0);
  for (std::uint32_t i = 0; i < s.size(); ++i)
    if (s.get(i)) total += w[i];
  return total;
}

// Certifier semantics recomputed longhand from the definitions.
inline bool certifies(const SwopInstance& inst, const Bits& s) {
  const Graph& g = inst.g;
  const std::uint32_t n = g.n;
  if (s.size() != n + g.edge_count()) return false;
  auto edge_bits_clear = [&] {
    for (std::uint32_t e = 0; e < g.edge_count(); ++e)
      if (s.get(n + e)) return false;
    return true;
  };
  auto adjacent = [&](std::uint32_t a, std::uint32_t b) {
    for (auto& [u, v] : g.edges)
      if ((u == a && v == b) || (u == b && v == a)) return true;
    return false;
  };
  switch (inst.cert.kind) {
    case CertifierKind::AllSubsets:
      return true;
    case CertifierKind::IndependentSet: {
      if (!edge_bits_clear()) return false;
      for (auto& [u, v] : g.edges)
        if (s.get(u) && s.get(v)) return false;
      return true;
    }
    case CertifierKind::Clique: {
      if (!edge_bits_clear()) return false;
      for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = a + 1; b < n; ++b)
          if (s.get(a) && s.get(b) && !adjacent(a, b)) return false;
      return true;
    }
    case CertifierKind::VertexCover: {
      if (!edge_bits_clear()) return false;
      for (auto& [u, v] : g.edges)
        if (!s.get(u) && !s.get(v)) return false;
      return true;
    }
    case CertifierKind::GroupedAllOrNone: {
      for (auto& grp : inst.cert.groups) {
        bool first = s.get(grp.front());
        for (auto i : grp)
          if (s.get(i) != first) return false;
      }
      return true;
    }
    case CertifierKind::CutWithBoundary: {
      std::vector<char> side(n, 0);
      for (auto& grp : inst.cert.groups) {
        bool first = s.get(grp.front());
        for (auto i : grp) {
          if (s.get(i) != first) return false;
          side[i] = first ? 1 : 0;
        }
      }
      for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges[e];
        if (s.get(n + e) != (side[u] != side[v])) return false;
      }
      return true;
    }
  }
  return false;
}

// Valid strings other than s within swap distance c, ascending lex. Only
// usable while 2^ground stays enumerable.
inline std::vector<Bits> swap_neighborhood(const SwopInstance& inst, const Bits& s) {
  std::vector<Bits> out;
  for (auto& t : every_string(inst.ground_size()))
    if (!(t == s) && s.diff_count(t) <= inst.c && certifies(inst, t)) out.push_back(t);
  return out;
}

inline std::vector<Bits> improving_swaps(const SwopInstance& inst, const Bits& s) {
  std::vector<Bits> out;
  Rat base = subset_weight(inst.w, s);
  for (auto& t : swap_neighborhood(inst, s))
    if (subset_weight(inst.w, t) > base) out.push_back(t);
  return out;
}

// Improving single-bit flips straight from the definition; relies on the
// instance only for validity and objective values.
inline std::vector<Bits> improving_flips(const LocalSearchInstance& inst, const Bits& s) {
  std::vector<Bits> out;
  Rat base = inst.objective(s);
  for (std::uint32_t i = 0; i < s.size(); ++i) {
    Bits t = s;
    t.flip(i);
    if (!inst.valid(t)) continue;
    Rat o = inst.objective(t);
    if (inst.maximize() ? o > base : o < base) out.push_back(t);
  }
  std::sort(out.begin(), out.end(), [](const Bits& a, const Bits& b) { return a.lex_less(b); });
  return out;
}

inline Rat crossing_weight(const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
                           const std::vector<Rat>& we, const Bits& side) {
  Rat total(0);
  for (std::size_t e = 0; e < edges.size(); ++e)
    if (side.get(edges[e].first) != side.get(edges[e].second)) total += we[e];
  return total;
}

// Gate values by memoized recursion straight off the defining equations;
// the ordinal table maps each input gate to its input-bit position.
inline bool eval_gate(const CircuitInstance& c, const Bits& x, std::uint32_t idx,
                      const std::vector<std::uint32_t>& ordinal, std::vector<int>& memo) {
  int& slot = memo[idx];
  if (slot >= 0) return slot != 0;
  const Gate& g = c.gates[idx];
  bool v = false;
  switch (g.op) {
    case Gate::Op::Input:
      v = x.get(ordinal[idx]);
      break;
    case Gate::Op::Const:
      v = g.value;
      break;
    case Gate::Op::Not:
      v = !eval_gate(c, x, g.args[0], ordinal, memo);
      break;
    case Gate::Op::And:
      v = true;
      for (auto a : g.args) v = v && eval_gate(c, x, a, ordinal, memo);
      break;
    case Gate::Op::Or:
      v = false;
      for (auto a : g.args) v = v || eval_gate(c, x, a, ordinal, memo);
      break;
  }
  slot = v ? 1 : 0;
  return v;
}

inline std::vector<bool> output_bits_recursive(const CircuitInstance& c, const Bits& x) {
  std::vector<std::uint32_t> ordinal(c.gates.size(), 0);
  std::uint32_t next = 0;
  for (std::uint32_t i = 0; i < c.gates.size(); ++i)
    if (c.gates[i].op == Gate::Op::Input) ordinal[i] = next++;
  std::vector<int> memo(c.gates.size(), -1);
  std::vector<bool> out;
  for (auto o : c.outputs) out.push_back(eval_gate(c, x, o, ordinal, memo));
  return out;
}

inline Rat circuit_value_recursive(const CircuitInstance& c, const Bits& x) {
  auto bits = output_bits_recursive(c, x);
  Rat total(0);
  for (std::size_t j = 0; j < bits.size(); ++j)
    if (bits[j]) total += c.wout[j];
  return total;
}

// Input support of every output by recursive cone computation; returns, per
// input, how many outputs that input can reach.
inline void input_support(const CircuitInstance& c, std::uint32_t idx,
                          std::map<std::uint32_t, std::set<std::uint32_t>>& memo) {
  if (memo.count(idx)) return;
  std::set<std::uint32_t> sup;
  const Gate& g = c.gates[idx];
  if (g.op == Gate::Op::Input) {
    sup.insert(idx);
  } else {
    for (auto a : g.args) {
      input_support(c, a, memo);
      sup.insert(memo[a].begin(), memo[a].end());
    }
  }
  memo[idx] = std::move(sup);
}

inline std::uint64_t max_output_fanin_count(const CircuitInstance& c) {
  std::map<std::uint32_t, std::set<std::uint32_t>> memo;
  std::vector<std::uint64_t> per_input(c.gates.size(), 0);  // keyed by input gate id
  for (auto o : c.outputs) {
    input_support(c, o, memo);
    for (auto i : memo[o]) ++per_input[i];
  }
  std::uint64_t best = 0;
  for (auto v : per_input) best = std::max(best, v);
  return best;
}

// Carried-set level weights by the closed prefix-sum formula rather than the
// recurrence: level j carries the first j+2 base weights plus a j+1 margin.
inline std::vector<Rat> prefix_level_weights(const std::vector<Rat>& xw, bool up) {
  std::vector<Rat> out;
  for (std::size_t j = 0; j + 2 <= xw.size(); ++j) {
    Rat t(0);
    for (std::size_t i = 0; i <= j + 1; ++i) t += xw[i];
    t += Rat(up ? 1 : -1) * Rat(BigInt(j + 1));
    out.push_back(t);
  }
  return out;
}

// Integer vectors of 1-norm at most radius, by direct recursion in
// lexicographic order of (coordinate, value).
inline void collect_vectors(std::uint32_t k, std::int64_t radius, std::vector<std::int64_t>& cur,
                            std::vector<std::vector<std::int64_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::int64_t v = -radius; v <= radius; ++v) {
    cur.push_back(v);
    collect_vectors(k, radius - (v < 0 ? -v : v), cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<std::int64_t>> vectors_within(std::uint32_t k,
                                                             std::int64_t radius) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  collect_vectors(k, radius, cur, out);
  return out;
}

// Exact Gram-Schmidt data for checking basis reduction conditions.
struct GramSchmidt {
  std::vector<std::vector<Rat>> star;
  std::vector<std::vector<Rat>> mu;  // lower triangle, mu[i][j] for j < i
};

inline GramSchmidt gram_schmidt(const std::vector<std::vector<BigInt>>& basis) {
  GramSchmidt gs;
  std::size_t k = basis.size();
  auto dot_rr = [](const std::vector<Rat>& a, const std::vector<Rat>& b) {
    Rat t(0);
    for (std::size_t i = 0; i < a.size(); ++i) t += a[i] * b[i];
    return t;
  };
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<Rat> row(basis[i].size());
    for (std::size_t j = 0; j < row.size(); ++j) row[j] = Rat(basis[i][j]);
    std::vector<Rat> mu_row(i, Rat(0));
    for (std::size_t j = 0; j < i; ++j) {
      Rat denom = dot_rr(gs.star[j], gs.star[j]);
      std::vector<Rat> bi(basis[i].size());
      for (std::size_t t = 0; t < bi.size(); ++t) bi[t] = Rat(basis[i][t]);
      mu_row[j] = dot_rr(bi, gs.star[j]) / denom;
      for (std::size_t t = 0; t < row.size(); ++t) row[t] -= mu_row[j] * gs.star[j][t];
    }
    gs.star.push_back(std::move(row));
    gs.mu.push_back(std::move(mu_row));
  }
  return gs;
}

// Size-reduction plus the exchange condition at delta = 3/4.
inline bool reduced_basis_conditions(const std::vector<std::vector<BigInt>>& basis) {
  GramSchmidt gs = gram_schmidt(basis);
  auto norm2 = [](const std::vector<Rat>& v) {
    Rat t(0);
    for (auto& x : v) t += x * x;
    return t;
  };
  Rat half(1, 2), delta(3, 4);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Rat m = gs.mu[i][j];
      if (m < 0) m = -m;
      if (m > half) return false;
    }
  for (std::size_t i = 1; i < basis.size(); ++i) {
    Rat lhs = norm2(gs.star[i]);
    Rat rhs = (delta - gs.mu[i][i - 1] * gs.mu[i][i - 1]) * norm2(gs.star[i - 1]);
    if (lhs < rhs) return false;
  }
  return true;
}

inline BigInt det_by_minors(std::vector<std::vector<BigInt>> m) {
  std::size_t k = m.size();
  if (k == 1) return m[0][0];
  BigInt total(0);
  for (std::size_t c = 0; c < k; ++c) {
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t r = 1; r < k; ++r) {
      std::vector<BigInt> row;
      for (std::size_t cc = 0; cc < k; ++cc)
        if (cc != c) row.push_back(m[r][cc]);
      minor.push_back(std::move(row));
    }
    BigInt term = m[0][c] * det_by_minors(std::move(minor));
    if (c % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

// Longest induced path (counted in edges) starting at vertex 0 of the
// d-cube, by exhaustive DFS: the next vertex may touch the path only at its
// predecessor.
inline void induced_path_dfs(std::uint32_t d, std::vector<std::uint32_t>& path,
                             std::uint32_t& best) {
  best = std::max<std::uint32_t>(best, static_cast<std::uint32_t>(path.size()) - 1);
  std::uint32_t last = path.back();
  for (std::uint32_t b = 0; b < d; ++b) {
    std::uint32_t cand = last ^ (1u << b);
    bool ok = true;
    for (std::size_t i = 0; i + 1 < path.size() && ok; ++i) {
      std::uint32_t x = path[i] ^ cand;
      if (path[i] == cand || (x & (x - 1)) == 0) ok = false;  // equal or adjacent
    }
    if (!ok) continue;
    path.push_back(cand);
    induced_path_dfs(d, path, best);
    path.pop_back();
  }
}

inline std::uint32_t longest_induced_path_edges(std::uint32_t d) {
  std::vector<std::uint32_t> path{0};
  std::uint32_t best = 0;
  induced_path_dfs(d, path, best);
  return best;
}

// Expected objective of the doubled-solution flip circuit at any raw string,
// recomputed from the piecewise value table by quantifier elimination over
// all subsets. The classification tests forms in priority order.
struct RawClassification {
  StructuredForm form = StructuredForm::Unstructured;
  BigInt value = 0;
};

inline RawClassification classify_raw(const SwopInstance& src, const Bits& x) {
  const std::uint32_t n = src.ground_size();
  const Bits a = [&] {
    Bits t(n);
    for (std::uint32_t i = 0; i < n; ++i) t.set(i, x.get(i));
    return t;
  }();
  const Bits b = [&] {
    Bits t(n);
    for (std::uint32_t i = 0; i < n; ++i) t.set(i, x.get(n + i));
    return t;
  }();
  const bool s1 = x.get(2 * n), s2 = x.get(2 * n + 1);

  BigInt denom(1);
  for (auto& w : src.w) denom = lcm_big(denom, rat_den(w));
  std::vector<BigInt> scaled(n);
  for (std::uint32_t i = 0; i < n; ++i) scaled[i] = rat_num(src.w[i] * Rat(denom));
  const BigInt unit = BigInt(2 * n + 4);
  auto height = [&](const Bits& z) {
    BigInt t(0);
    for (std::uint32_t i = 0; i < n; ++i) {
      if (z.get(i) && scaled[i] > 0) t += scaled[i];
      if (!z.get(i) && scaled[i] < 0) t -= scaled[i];
    }
    return unit * t;
  };

  auto diff_positions = [&](const Bits& p, const Bits& q) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 0; i < n; ++i)
      if (p.get(i) != q.get(i)) out.push_back(i);
    return out;
  };
  // Improving swap targets of z: valid, within swap distance, strictly
  // heavier under the original rational weights.
  auto targets = [&](const Bits& z) {
    std::vector<Bits> out;
    Rat base = subset_weight(src.w, z);
    for (auto& t : every_string(n)) {
      std::uint32_t dist = z.diff_count(t);
      if (dist < 1 || dist > src.c) continue;
      if (!certifies(src, t)) continue;
      if (subset_weight(src.w, t) > base) out.push_back(t);
    }
    return out;
  };

  RawClassification out;
  const BigInt big_n(n);
  const std::uint32_t hd = a.diff_count(b);
  if (!s1 && !s2) {
    if (a == b && certifies(src, a)) {
      out.form = StructuredForm::Uu00;
      out.value = height(a) + 3 * big_n + 5;
      return out;
    }
    if (certifies(src, a)) {
      for (auto& w : targets(a)) {
        auto pos = diff_positions(a, w);
        // b must equal a with some nonempty ascending prefix of the swap
        // mask already applied.
        for (std::size_t j = 1; j <= pos.size(); ++j) {
          Bits v = a;
          for (std::size_t i = 0; i < j; ++i) v.flip(pos[i]);
          if (v == b) {
            out.form = StructuredForm::Uv00;
            out.value = height(a) + BigInt(hd) + 3 * big_n + 5;
            return out;
          }
        }
      }
    }
  } else if (s1 && !s2) {
    if (a == b && certifies(src, a)) {
      out.form = StructuredForm::Uu10;
      out.value = height(a) + 3 * big_n + 4;
      return out;
    }
    if (certifies(src, a)) {
      for (auto& w : targets(a)) {
        if (w == b) {
          out.form = StructuredForm::Uw10;
          out.value = height(a) + 4 * big_n + 6;
          return out;
        }
      }
    }
  } else if (s1 && s2) {
    if (certifies(src, b)) {
      Rat bw = subset_weight(src.w, b);
      for (auto& z : every_string(n)) {
        std::uint32_t dist = z.diff_count(b);
        if (dist < 1 || dist > src.c) continue;
        if (!certifies(src, z)) continue;
        if (!(subset_weight(src.w, z) < bw)) continue;
        auto pos = diff_positions(z, b);
        // a must be b with some ascending suffix of the mask still pending.
        for (std::size_t j = 0; j <= pos.size(); ++j) {
          Bits v = b;
          for (std::size_t i = j; i < pos.size(); ++i) v.flip(pos[i]);
          if (v == a) {
            out.form = StructuredForm::Vu11;
            out.value = height(b) + 3 * big_n + 3 - BigInt(hd);
            return out;
          }
        }
      }
    }
  }
  out.form = StructuredForm::Unstructured;
  out.value = BigInt(2 * n + 2) - BigInt(x.count());
  return out;
}

// Rank of each coordinate when sorted ascending by (weight, index), starting
// at 1; the potential of a subset is the sum of its ranks.
inline std::vector<std::uint64_t> weight_ranks(const std::vector<Rat>& w) {
  std::vector<std::uint32_t> idx(w.size());
  for (std::uint32_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (w[a] != w[b]) return w[a] < w[b];
    return a < b;
  });
  std::vector<std::uint64_t> rank(w.size());
  for (std::uint32_t pos = 0; pos < idx.size(); ++pos) rank[idx[pos]] = pos + 1;
  return rank;
}

inline std::uint64_t rank_potential(const std::vector<std::uint64_t>& rank, const Bits& s) {
  std::uint64_t total = 0;
  for (std::uint32_t i = 0; i < s.size(); ++i)
    if (s.get(i)) total += rank[i];
  return total;
}

// True when every maximal improving path from the node visits the landmark.
inline bool all_paths_hit(const TransitionGraph& tg, std::uint32_t node, std::uint32_t landmark,
                          std::vector<int>& memo) {
  if (node == landmark) return true;
  int& slot = memo[node];
  if (slot >= 0) return slot != 0;
  bool ok = !tg.out[node].empty();
  for (auto nxt : tg.out[node]) {
    if (!ok) break;
    ok = all_paths_hit(tg, nxt, landmark, memo);
  }
  slot = ok ? 1 : 0;
  return ok;
}

// Every connected Max Cut source on 2..4 vertices with per-edge weights
// drawn from {2n, 4n}: all labeled connected edge sets crossed with all
// weight assignments.
inline std::vector<MaxCutInstance> connected_sweep_sources() {
  std::vector<MaxCutInstance> out;
  for (std::uint32_t n = 2; n <= 4; ++n) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (std::uint32_t u = 0; u < n; ++u)
      for (std::uint32_t v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    for (std::uint32_t mask = 1; mask < (1u << pairs.size()); ++mask) {
      std::vector<std::pair<std::uint32_t, std::uint32_t>> es;
      for (std::size_t e = 0; e < pairs.size(); ++e)
        if (mask & (1u << e)) es.push_back(pairs[e]);
      std::vector<std::uint32_t> comp(n);
      for (std::uint32_t v = 0; v < n; ++v) comp[v] = v;
      std::function<std::uint32_t(std::uint32_t)> find = [&](std::uint32_t v) {
        return comp[v] == v ? v : comp[v] = find(comp[v]);
      };
      for (auto& [u, v] : es) comp[find(u)] = find(v);
      bool connected = true;
      for (std::uint32_t v = 0; v < n && connected; ++v)
        if (find(v) != find(0)) connected = false;
      if (!connected) continue;
      for (std::uint32_t wmask = 0; wmask < (1u << es.size()); ++wmask) {
        std::vector<Rat> we;
        for (std::size_t e = 0; e < es.size(); ++e)
          we.push_back(Rat((wmask & (1u << e)) ? 4 * n : 2 * n));
        out.emplace_back(n, es, we);
      }
    }
  }
  return out;
}

// Random helpers shared by the property suites.
inline Graph sample_graph(Rng& rng, std::uint32_t n, std::uint32_t percent) {
  Graph g;
  g.n = n;
  for (std::uint32_t u = 0; u < n; ++u)
    for (std::uint32_t v = u + 1; v < n; ++v)
      if (rng.next_below(100) < percent) g.edges.emplace_back(u, v);
  return g;
}

inline CircuitInstance sample_circuit(Rng& rng, std::uint32_t n_in, std::uint32_t extra,
                                      std::uint32_t n_out) {
  std::vector<Gate> gates;
  for (std::uint32_t i = 0; i < n_in; ++i) gates.push_back(Gate::input());
  for (std::uint32_t i = 0; i < extra; ++i) {
    std::uint32_t kind = static_cast<std::uint32_t>(rng.next_below(3));
    auto wire = [&] { return static_cast<std::uint32_t>(rng.next_below(gates.size())); };
    if (kind == 0)
      gates.push_back(Gate::gnot(wire()));
    else if (kind == 1)
      gates.push_back(Gate::gand({wire(), wire()}));
    else
      gates.push_back(Gate::gor({wire(), wire()}));
  }
  std::vector<std::uint32_t> outs;
  for (std::uint32_t j = 0; j < n_out; ++j)
    outs.push_back(static_cast<std::uint32_t>(rng.next_below(gates.size())));
  std::vector<Rat> w;
  for (std::uint32_t j = 0; j < n_out; ++j) {
    std::int64_t v = static_cast<std::int64_t>(rng.next_below(41)) - 20;
    if (v == 0) v = 7;
    w.push_back(Rat(v));
  }
  return CircuitInstance(n_in, gates, outs, w);
}

}  // namespace testing
}  // namespace lslab
