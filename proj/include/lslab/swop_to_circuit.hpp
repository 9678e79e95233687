#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lslab/bundle.hpp"
#include "lslab/circuit_builder.hpp"
#include "lslab/swop.hpp"

namespace lslab {

enum class StructuredForm { Uu00, Uv00, Uu10, Uw10, Vu11, Unstructured };

inline const char* structured_form_name(StructuredForm f) {
  switch (f) {
    case StructuredForm::Uu00: return "uu00";
    case StructuredForm::Uv00: return "uv00";
    case StructuredForm::Uu10: return "uu10";
    case StructuredForm::Uw10: return "uw10";
    case StructuredForm::Vu11: return "vu11";
    case StructuredForm::Unstructured: return "unstructured";
  }
  return "?";
}

// Classification of a doubled-solution string: two length-n blocks plus two
// selector bits, where u always names the block carrying the base solution.
struct StructuredString {
  Bits raw;
  StructuredForm form = StructuredForm::Unstructured;
  std::optional<Bits> u, v, w;
};

inline Bits bits_slice(const Bits& b, std::uint32_t lo, std::uint32_t len) {
  Bits out(len);
  for (std::uint32_t i = 0; i < len; ++i) out.set(i, b.get(lo + i));
  return out;
}

// All flip sets of size 1..c over n coordinates, smallest size first, then
// lexicographic by ascending position list. This order fixes which mask a
// decode reports when several qualify.
inline std::vector<std::vector<std::uint32_t>> swap_mask_positions(std::uint32_t n,
                                                                   std::uint32_t c,
                                                                   std::uint64_t guard) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> pick;
  auto rec = [&](auto&& self, std::uint32_t from, std::uint32_t left) -> void {
    if (left == 0) {
      out.push_back(pick);
      if (out.size() > guard) throw ResourceError("flip-set enumeration too large");
      return;
    }
    for (std::uint32_t i = from; i + left <= n; ++i) {
      pick.push_back(i);
      self(self, i + 1, left - 1);
      pick.pop_back();
    }
  };
  for (std::uint32_t size = 1; size <= c && size <= n; ++size) rec(rec, 0, size);
  return out;
}

// Walking u towards u^M by flipping positions in ascending order passes
// through |M|+1 strings including both ends; the visited prefix determines
// the difference set exactly.
inline bool diff_is_prefix_of(const std::vector<std::uint32_t>& diff,
                              const std::vector<std::uint32_t>& mask) {
  if (diff.size() > mask.size()) return false;
  for (std::size_t i = 0; i < diff.size(); ++i)
    if (diff[i] != mask[i]) return false;
  return true;
}

inline bool diff_is_suffix_of(const std::vector<std::uint32_t>& diff,
                              const std::vector<std::uint32_t>& mask) {
  if (diff.size() > mask.size()) return false;
  std::size_t off = mask.size() - diff.size();
  for (std::size_t i = 0; i < diff.size(); ++i)
    if (diff[i] != mask[off + i]) return false;
  return true;
}

inline StructuredString decode_structured(const SwopInstance& inst, const Bits& raw,
                                          std::uint64_t mask_guard = 5000) {
  std::uint32_t n = inst.ground_size();
  if (raw.size() != 2 * n + 2) throw ArityError("doubled string must have 2n+2 bits");
  StructuredString st;
  st.raw = raw;
  Bits a = bits_slice(raw, 0, n);
  Bits b = bits_slice(raw, n, n);
  bool s1 = raw.get(2 * n), s2 = raw.get(2 * n + 1);
  bool va = inst.valid(a), vb = inst.valid(b);
  auto masks = swap_mask_positions(n, inst.c, mask_guard);
  auto flip_all = [](Bits base, const std::vector<std::uint32_t>& mask) {
    for (auto i : mask) base.flip(i);
    return base;
  };

  if (!s1 && !s2 && va) {
    if (a == b) {
      st.form = StructuredForm::Uu00;
      st.u = a;
      return st;
    }
    auto diff = a.xored(b).indices();
    Rat base = inst.objective(a);
    for (auto& mask : masks) {
      if (!diff_is_prefix_of(diff, mask)) continue;
      Bits w = flip_all(a, mask);
      if (!inst.valid(w) || !inst.better(inst.objective(w), base)) continue;
      st.form = StructuredForm::Uv00;
      st.u = a;
      st.v = b;
      st.w = w;
      return st;
    }
  }
  if (s1 && !s2 && va) {
    if (a == b) {
      st.form = StructuredForm::Uu10;
      st.u = a;
      return st;
    }
    std::uint32_t h = a.diff_count(b);
    if (h <= inst.c && vb && inst.better(inst.objective(b), inst.objective(a))) {
      st.form = StructuredForm::Uw10;
      st.u = a;
      st.w = b;
      return st;
    }
  }
  if (s1 && s2 && vb) {
    auto diff = a.xored(b).indices();
    Rat base = inst.objective(b);
    for (auto& mask : masks) {
      if (!diff_is_suffix_of(diff, mask)) continue;
      Bits w = flip_all(b, mask);
      if (!inst.valid(w) || !inst.better(base, inst.objective(w))) continue;
      st.form = StructuredForm::Vu11;
      st.v = a;
      st.u = b;
      st.w = w;
      return st;
    }
  }
  st.form = StructuredForm::Unstructured;
  return st;
}

namespace detail {

// Validity of the certified-subset predicate as a formula over one wire per
// ground coordinate; mirrors SwopInstance::valid for each certifier kind.
inline std::uint32_t certifier_valid_wires(CircuitBuilder& cb, const SwopInstance& inst,
                                           const std::vector<std::uint32_t>& cw) {
  const Graph& g = inst.g;
  std::vector<std::uint32_t> conds;
  auto no_edge_bits = [&]() {
    for (std::uint32_t e = 0; e < g.edge_count(); ++e) conds.push_back(cb.gnot(cw[g.n + e]));
  };
  switch (inst.cert.kind) {
    case CertifierKind::AllSubsets:
      break;
    case CertifierKind::IndependentSet: {
      no_edge_bits();
      auto adj = g.adjacency_masks();
      for (std::uint32_t v = 0; v < g.n; ++v)
        for (auto u : adj[v].indices())
          if (u > v) conds.push_back(cb.gnot(cb.gand({cw[v], cw[u]})));
      break;
    }
    case CertifierKind::Clique: {
      no_edge_bits();
      auto adj = g.adjacency_masks();
      for (std::uint32_t v = 0; v < g.n; ++v)
        for (std::uint32_t u = v + 1; u < g.n; ++u)
          if (!adj[v].get(u)) conds.push_back(cb.gnot(cb.gand({cw[v], cw[u]})));
      break;
    }
    case CertifierKind::VertexCover: {
      no_edge_bits();
      for (auto& [u, v] : g.edges) conds.push_back(cb.gor({cw[u], cw[v]}));
      break;
    }
    case CertifierKind::GroupedAllOrNone: {
      for (auto& grp : inst.cert.groups) {
        std::vector<std::uint32_t> all, none;
        for (auto i : grp) {
          all.push_back(cw[i]);
          none.push_back(cb.gnot(cw[i]));
        }
        conds.push_back(cb.gor({cb.gand(all), cb.gand(none)}));
      }
      break;
    }
    case CertifierKind::CutWithBoundary: {
      for (auto& grp : inst.cert.groups) {
        std::vector<std::uint32_t> all, none;
        for (auto i : grp) {
          all.push_back(cw[i]);
          none.push_back(cb.gnot(cw[i]));
        }
        conds.push_back(cb.gor({cb.gand(all), cb.gand(none)}));
      }
      for (std::uint32_t e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges[e];
        conds.push_back(cb.xnor(cw[g.n + e], cb.gxor(cw[u], cw[v])));
      }
      break;
    }
  }
  return cb.gand(conds);
}

// Binary word for the nonnegative affine weight total: positive coordinates
// contribute when selected, negative ones when deselected.
inline CircuitBuilder::Word weighted_total_wires(CircuitBuilder& cb,
                                                 const std::vector<BigInt>& scaled,
                                                 const std::vector<std::uint32_t>& cw) {
  std::vector<CircuitBuilder::Word> terms;
  for (std::size_t i = 0; i < scaled.size(); ++i) {
    if (scaled[i] == 0) continue;
    bool pos = scaled[i] > 0;
    BigInt mag = pos ? scaled[i] : BigInt(-scaled[i]);
    terms.push_back(cb.select(pos ? cw[i] : cb.gnot(cw[i]), cb.constant_word(mag)));
  }
  if (terms.empty()) return cb.constant_word(BigInt(0));
  while (terms.size() > 1) {
    std::vector<CircuitBuilder::Word> next;
    for (std::size_t i = 0; i + 1 < terms.size(); i += 2) next.push_back(cb.add(terms[i], terms[i + 1]));
    if (terms.size() % 2) next.push_back(terms.back());
    terms = std::move(next);
  }
  return terms[0];
}

}  // namespace detail

class SwopToCircuit {
 public:
  std::shared_ptr<const SwopInstance> source;
  std::shared_ptr<const CircuitInstance> target;
  std::vector<BigInt> scaled;  // (2n+4) times the integerized coordinate weights
  std::uint32_t n = 0;
  std::uint64_t declared_tightness = 0;

  StructuredString decode(const Bits& raw) const { return decode_structured(*source, raw); }

  Bits psi(const Bits& raw) const {
    auto st = decode(raw);
    if (st.form == StructuredForm::Unstructured) return Bits(n);
    return *st.u;
  }

  Bits embed(const Bits& u) const {
    source->require_valid(u);
    Bits x(2 * n + 2);
    for (std::uint32_t i = 0; i < n; ++i) {
      x.set(i, u.get(i));
      x.set(n + i, u.get(i));
    }
    return x;
  }

  bool r_member(const Bits& raw) const {
    return decode(raw).form != StructuredForm::Unstructured;
  }

  // The canonical improving walk between doubled solutions: rewrite the
  // second block towards the swap target in ascending position order, raise
  // the selectors, rewrite the first block, lower the selectors. 2H+4 moves.
  std::vector<Bits> direct_sequence(const Bits& from, const Bits& to) const {
    source->require_valid(from);
    source->require_valid(to);
    auto diff = from.xored(to).indices();
    if (diff.empty() || diff.size() > source->c)
      throw InputContractError("solutions must differ by one swap");
    if (!source->better(source->objective(to), source->objective(from)))
      throw InputContractError("the swap must improve");
    std::vector<Bits> walk;
    Bits x = embed(from);
    walk.push_back(x);
    for (auto i : diff) {
      x.flip(n + i);
      walk.push_back(x);
    }
    x.flip(2 * n);
    walk.push_back(x);
    x.flip(2 * n + 1);
    walk.push_back(x);
    for (auto i : diff) {
      x.flip(i);
      walk.push_back(x);
    }
    x.flip(2 * n + 1);
    walk.push_back(x);
    x.flip(2 * n);
    walk.push_back(x);
    if (x != embed(to)) throw InternalError("walk does not land on the embedded swap target");
    return walk;
  }

  ReductionBundle to_bundle() const {
    ReductionBundle b;
    b.name = "swop-to-circuit";
    b.source = source;
    b.target = target;
    b.psi = [this](const Bits& x) { return psi(x); };
    b.embed = [this](const Bits& u) { return embed(u); };
    b.r_member = [this](const Bits& x) { return r_member(x); };
    b.declared_tightness = declared_tightness;
    b.direct_sequence = [this](const Bits& p, const Bits& q) { return direct_sequence(p, q); };
    return b;
  }
};

inline SwopToCircuit reduce_swop_to_maxcircuit(const SwopInstance& inst,
                                               std::uint64_t mask_guard = 5000) {
  std::uint32_t n = inst.ground_size();
  Bits empty(n);
  if (!inst.valid(empty))
    throw InputContractError(
        "the empty subset must be certified: unstructured strings map to it");

  SwopToCircuit red;
  red.source = std::make_shared<SwopInstance>(inst);
  red.n = n;
  red.declared_tightness = 4ull * inst.c + 4;

  BigInt denom(1);
  for (auto& w : inst.w) denom = lcm_big(denom, rat_den(w));
  BigInt tmax(0);
  for (auto& w : inst.w) {
    BigInt k = rat_num(w * Rat(denom)) * BigInt(2 * n + 4);
    red.scaled.push_back(k);
    tmax += k > 0 ? k : BigInt(-k);
  }

  auto masks = swap_mask_positions(n, inst.c, mask_guard);
  CircuitBuilder cb(2 * n + 2);
  std::vector<std::uint32_t> aw, bw, dw, ndw;
  for (std::uint32_t i = 0; i < n; ++i) aw.push_back(cb.input(i));
  for (std::uint32_t i = 0; i < n; ++i) bw.push_back(cb.input(n + i));
  std::uint32_t s1 = cb.input(2 * n), s2 = cb.input(2 * n + 1);
  for (std::uint32_t i = 0; i < n; ++i) {
    dw.push_back(cb.gxor(aw[i], bw[i]));
    ndw.push_back(cb.gnot(dw[i]));
  }
  std::uint32_t ab_eq = cb.gand(ndw);
  std::uint32_t va = detail::certifier_valid_wires(cb, inst, aw);
  std::uint32_t vb = detail::certifier_valid_wires(cb, inst, bw);
  auto t_a = detail::weighted_total_wires(cb, red.scaled, aw);
  auto t_b = detail::weighted_total_wires(cb, red.scaled, bw);
  auto h_word = cb.popcount(dw);

  // Difference-pattern matches: the block difference must equal a prefix
  // (second block rewritten first) or suffix (first block catching up) of the
  // flip set, taken in ascending position order.
  auto pattern_match = [&](const std::vector<std::uint32_t>& inside) {
    std::vector<bool> in(n, false);
    for (auto i : inside) in[i] = true;
    std::vector<std::uint32_t> lits;
    for (std::uint32_t i = 0; i < n; ++i) lits.push_back(in[i] ? dw[i] : ndw[i]);
    return cb.gand(lits);
  };

  std::vector<std::uint32_t> uv_terms, ub_terms, vu_terms;
  for (auto& mask : masks) {
    auto flipped = [&](const std::vector<std::uint32_t>& base) {
      std::vector<std::uint32_t> out = base;
      for (auto i : mask) out[i] = cb.gnot(base[i]);
      return out;
    };
    auto am = flipped(aw);
    std::uint32_t a_imp =
        cb.gand({detail::certifier_valid_wires(cb, inst, am),
                 cb.gt(detail::weighted_total_wires(cb, red.scaled, am), t_a)});
    std::vector<std::uint32_t> prefixes;
    for (std::size_t j = 0; j <= mask.size(); ++j)
      prefixes.push_back(
          pattern_match(std::vector<std::uint32_t>(mask.begin(), mask.begin() + j)));
    uv_terms.push_back(cb.gand({a_imp, cb.gor(prefixes)}));
    ub_terms.push_back(cb.gand({a_imp, prefixes.back()}));

    auto bm = flipped(bw);
    std::uint32_t b_src =
        cb.gand({detail::certifier_valid_wires(cb, inst, bm),
                 cb.gt(t_b, detail::weighted_total_wires(cb, red.scaled, bm))});
    std::vector<std::uint32_t> suffixes;
    for (std::size_t j = 0; j <= mask.size(); ++j)
      suffixes.push_back(pattern_match(std::vector<std::uint32_t>(mask.begin() + j, mask.end())));
    vu_terms.push_back(cb.gand({b_src, cb.gor(suffixes)}));
  }
  std::uint32_t uv_pred = cb.gor(uv_terms);
  std::uint32_t ub_pred = cb.gor(ub_terms);
  std::uint32_t vu_pred = cb.gor(vu_terms);

  std::uint32_t sel00 = cb.gand({cb.gnot(s1), cb.gnot(s2)});
  std::uint32_t sel10 = cb.gand({s1, cb.gnot(s2)});
  std::uint32_t sel11 = cb.gand({s1, s2});
  std::uint32_t p_uu00 = cb.gand({sel00, va, ab_eq});
  std::uint32_t p_uv00 = cb.gand({sel00, va, uv_pred});
  std::uint32_t p_uu10 = cb.gand({sel10, va, ab_eq});
  std::uint32_t p_uw10 = cb.gand({sel10, va, ub_pred});
  std::uint32_t p_vu11 = cb.gand({sel11, vb, vu_pred});

  // Values are shifted so the least structured value is 2n+3 and unstructured
  // strings land in [0, 2n+2]; strict comparisons are preserved.
  auto v_uu00 = cb.add(t_a, cb.constant_word(BigInt(3 * n + 5)));
  auto v_uv00 = cb.add(cb.add(t_a, h_word), cb.constant_word(BigInt(3 * n + 5)));
  auto v_uu10 = cb.add(t_a, cb.constant_word(BigInt(3 * n + 4)));
  auto v_uw10 = cb.add(t_a, cb.constant_word(BigInt(4 * n + 6)));
  auto v_vu11 = cb.add(t_b, cb.sub(cb.constant_word(BigInt(3 * n + 3)), h_word));
  std::vector<std::uint32_t> all_inputs;
  for (std::uint32_t i = 0; i < 2 * n + 2; ++i) all_inputs.push_back(cb.input(i));
  auto v_unstr = cb.sub(cb.constant_word(BigInt(2 * n + 2)), cb.popcount(all_inputs));

  auto value = cb.mux_word(
      p_uu00, v_uu00,
      cb.mux_word(p_uv00, v_uv00,
                  cb.mux_word(p_uu10, v_uu10,
                              cb.mux_word(p_uw10, v_uw10, cb.mux_word(p_vu11, v_vu11, v_unstr)))));

  BigInt maxval = tmax + BigInt(4 * n + 6);
  std::uint32_t width = 0;
  for (BigInt v = maxval; v > 0; v >>= 1) ++width;
  if (width == 0) width = 1;
  if (value.size() < width) cb.pad(value, width);
  value.resize(width);  // higher wires are arithmetically zero

  red.target = std::make_shared<CircuitInstance>(
      cb.build(value, max_circuit_weights(width, false)));
  return red;
}

}  // namespace lslab
