#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lslab/lll.hpp"

namespace lslab {

using WeightVector = std::vector<Rat>;

struct ReducedWeights {
  std::vector<BigInt> entries;
  std::uint64_t certified_n = 0;  // signs agree for all integer b with |b|_1 <= certified_n - 1
};

struct SignCheck {
  bool ok = true;
  std::optional<std::vector<BigInt>> counterexample;
};

namespace detail {

inline BigInt pow_big(BigInt base, std::uint64_t e) {
  BigInt r(1);
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline Rat pow_rat(const Rat& base, std::uint64_t e) {
  Rat r(1);
  for (std::uint64_t i = 0; i < e; ++i) r *= base;
  return r;
}

// One simultaneous-approximation round: find integer q >= 1 and integer p
// with |q * v_i - p_i| <= eps for all i, q small. The lattice has one row per
// coordinate plus a final row carrying v and a tiny last coordinate; the
// first reduced vector encodes (qv - p, q * tail) and is short.
inline void dioph_round(const std::vector<Rat>& v, const Rat& eps, BigInt& q,
                        std::vector<BigInt>& p) {
  std::size_t k = v.size();
  std::uint64_t shift = (static_cast<std::uint64_t>(k) * (k + 1) + 3) / 4;  // ceil(k(k+1)/4)
  Rat tail = pow_rat(eps, static_cast<std::uint64_t>(k) + 1) / Rat(pow_big(BigInt(2), shift));

  BigInt d = rat_den(tail);
  for (auto& x : v) d = lcm_big(d, rat_den(x));
  std::vector<std::vector<BigInt>> rows(k + 1, std::vector<BigInt>(k + 1, BigInt(0)));
  for (std::size_t i = 0; i < k; ++i) rows[i][i] = d;
  for (std::size_t i = 0; i < k; ++i) rows[k][i] = rat_num(v[i] * Rat(d));
  rows[k][k] = rat_num(tail * Rat(d));

  auto red = lll_reduce(rows);
  std::size_t pick = red.transform.size();
  for (std::size_t i = 0; i < red.transform.size(); ++i)
    if (red.transform[i][k] != 0) {
      pick = i;
      break;
    }
  if (pick == red.transform.size()) throw InternalError("no reduced vector uses the value row");
  q = red.transform[pick][k];
  p.assign(k, BigInt(0));
  for (std::size_t i = 0; i < k; ++i) p[i] = -red.transform[pick][i];
  if (q < 0) {
    q = -q;
    for (auto& x : p) x = -x;
  }
  for (std::size_t i = 0; i < k; ++i)
    if (abs(Rat(q) * v[i] - Rat(p[i])) > eps)
      throw InternalError("reduced vector misses the approximation target");
}

inline std::size_t zero_count(const std::vector<Rat>& v) {
  std::size_t z = 0;
  for (auto& x : v)
    if (x == 0) ++z;
  return z;
}

// Recursive rounding: normalize so the largest coordinate is +-1 (that
// coordinate rounds exactly, so each round strictly grows the zero set),
// approximate, and recurse on the residue. The scale factor dominates every
// pairing of the residue part with a vector of 1-norm at most N-1.
inline std::vector<BigInt> ft_vector(const std::vector<Rat>& w, std::uint64_t n_param) {
  std::size_t k = w.size();
  Rat big(0);
  for (auto& x : w) {
    Rat a = abs(x);
    if (a > big) big = a;
  }
  if (big == 0) return std::vector<BigInt>(k, BigInt(0));

  std::vector<Rat> v(k);
  for (std::size_t i = 0; i < k; ++i) v[i] = w[i] / big;
  Rat eps = Rat(1) / (Rat(2) * Rat(static_cast<std::uint64_t>(k)) * Rat(n_param));

  BigInt q;
  std::vector<BigInt> p;
  dioph_round(v, eps, q, p);

  std::vector<Rat> r(k);
  for (std::size_t i = 0; i < k; ++i) r[i] = Rat(q) * v[i] - Rat(p[i]);
  if (zero_count(r) <= zero_count(v))
    throw InternalError("rounding did not zero an extra coordinate");

  std::vector<BigInt> rest = ft_vector(r, n_param);
  BigInt rest_norm(0);
  for (auto& x : rest) {
    BigInt a = x < 0 ? BigInt(-x) : x;
    if (a > rest_norm) rest_norm = a;
  }
  BigInt scale = BigInt(2) * BigInt(n_param - 1) * rest_norm + 1;
  std::vector<BigInt> out(k);
  for (std::size_t i = 0; i < k; ++i) out[i] = scale * p[i] + rest[i];
  return out;
}

}  // namespace detail

inline ReducedWeights frank_tardos_reduce(const WeightVector& w, std::uint64_t n_param) {
  if (w.empty()) throw ArityError("weight vector must be nonempty");
  if (n_param < 2) throw InputContractError("the sign radius parameter must be at least 2");
  std::uint64_t k = w.size();
  ReducedWeights out;
  out.entries = detail::ft_vector(w, n_param);
  out.certified_n = n_param;
  BigInt bound = detail::pow_big(BigInt(2), 4 * k * k * k) *
                 detail::pow_big(BigInt(n_param), k * (k + 2));
  for (auto& x : out.entries) {
    BigInt a = x < 0 ? BigInt(-x) : x;
    if (a > bound) throw InternalError("reduced weights exceed the advertised norm bound");
  }
  return out;
}

// Exhaustive check over all integer b with |b|_1 <= n_param - 1, coordinates
// explored in the order 0, 1, -1, 2, -2, ... so the reported counterexample
// is deterministic.
inline SignCheck verify_sign_preservation(const WeightVector& w,
                                          const std::vector<BigInt>& wbar,
                                          std::uint64_t n_param,
                                          std::uint64_t budget = 20000000) {
  if (w.size() != wbar.size()) throw ArityError("vectors must share a dimension");
  if (n_param < 1) throw InputContractError("the sign radius parameter must be positive");
  std::size_t k = w.size();
  std::uint64_t radius = n_param - 1;

  // Count lattice points in the 1-norm ball first; refuse oversized sweeps.
  std::vector<BigInt> cnt(radius + 1, BigInt(1));
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<BigInt> nxt(radius + 1, BigInt(0));
    for (std::uint64_t r = 0; r <= radius; ++r) {
      nxt[r] = cnt[r];  // this coordinate zero
      for (std::uint64_t a = 1; a <= r; ++a) nxt[r] += BigInt(2) * cnt[r - a];
    }
    cnt = std::move(nxt);
  }
  if (cnt[radius] > BigInt(budget)) throw ResourceError("sign check enumeration too large");

  std::vector<BigInt> b(k, BigInt(0));
  SignCheck res;
  Rat dot_w(0);
  BigInt dot_bar(0);
  auto rec = [&](auto&& self, std::size_t i, std::uint64_t left) -> bool {
    if (i == k) {
      int sw = sign_of(dot_w);
      int sb = dot_bar == 0 ? 0 : (dot_bar > 0 ? 1 : -1);
      if (sw != sb) {
        res.ok = false;
        res.counterexample = b;
        return true;
      }
      return false;
    }
    for (std::uint64_t a = 0; a <= left; ++a) {
      for (int s : {1, -1}) {
        if (a == 0 && s < 0) continue;
        BigInt val = s > 0 ? BigInt(a) : BigInt(-static_cast<std::int64_t>(a));
        b[i] = val;
        dot_w += w[i] * Rat(val);
        dot_bar += wbar[i] * val;
        bool stop = self(self, i + 1, left - a);
        dot_w -= w[i] * Rat(val);
        dot_bar -= wbar[i] * val;
        b[i] = 0;
        if (stop) return true;
      }
    }
    return false;
  };
  rec(rec, 0, radius);
  return res;
}

// Cross-check oracle: smallest max-norm integer vector with the same sign
// pattern, by deepening on the norm. Not the production path.
inline std::vector<BigInt> frank_tardos_exact_search(const WeightVector& w,
                                                     std::uint64_t n_param,
                                                     std::uint64_t norm_cap = 16) {
  if (w.empty()) throw ArityError("weight vector must be nonempty");
  std::size_t k = w.size();
  for (std::uint64_t bound = 0; bound <= norm_cap; ++bound) {
    std::vector<BigInt> x(k, BigInt(0));
    std::optional<std::vector<BigInt>> found;
    auto rec = [&](auto&& self, std::size_t i) -> bool {
      if (i == k) {
        if (verify_sign_preservation(w, x, n_param).ok) {
          found = x;
          return true;
        }
        return false;
      }
      for (std::uint64_t a = 0; a <= bound; ++a) {
        for (int s : {1, -1}) {
          if (a == 0 && s < 0) continue;
          x[i] = s > 0 ? BigInt(a) : BigInt(-static_cast<std::int64_t>(a));
          if (self(self, i + 1)) return true;
        }
      }
      x[i] = 0;
      return false;
    };
    if (rec(rec, 0)) return *found;
  }
  throw ResourceError("no sign-matching vector within the norm cap");
}

}  // namespace lslab
