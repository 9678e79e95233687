#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lslab/errors.hpp"
#include "lslab/rational.hpp"

namespace lslab {

// Lattice basis reduction in exact rational arithmetic with delta = 3/4.
// transform * input = basis and det(transform) = +-1, so both matrices span
// the same lattice; both facts are re-checked before returning.
struct LllResult {
  std::vector<std::vector<BigInt>> basis;
  std::vector<std::vector<BigInt>> transform;
};

namespace detail {

// Exact determinant by fraction-free elimination; row swaps flip the sign.
inline BigInt integer_determinant(std::vector<std::vector<BigInt>> m) {
  std::size_t n = m.size();
  BigInt sign(1), denom(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return BigInt(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      sign = -sign;
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      for (std::size_t c = col + 1; c < n; ++c)
        m[r][c] = (m[r][c] * m[col][col] - m[r][col] * m[col][c]) / denom;
      m[r][col] = 0;
    }
    denom = m[col][col];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace detail

inline LllResult lll_reduce(std::vector<std::vector<BigInt>> rows) {
  if (rows.empty()) throw ArityError("at least one basis vector required");
  std::size_t nr = rows.size(), nc = rows[0].size();
  if (nc == 0) throw ArityError("basis vectors must be nonempty");
  for (auto& r : rows)
    if (r.size() != nc) throw ArityError("basis vectors must share one dimension");
  if (nr > nc) throw InputContractError("more vectors than coordinates cannot be independent");

  const std::vector<std::vector<BigInt>> original = rows;
  std::vector<std::vector<BigInt>> u(nr, std::vector<BigInt>(nr, BigInt(0)));
  for (std::size_t i = 0; i < nr; ++i) u[i][i] = 1;

  std::vector<std::vector<Rat>> mu(nr, std::vector<Rat>(nr, Rat(0)));
  std::vector<Rat> bnorm(nr, Rat(0));  // squared lengths of the orthogonalized rows

  auto recompute = [&]() {
    std::vector<std::vector<Rat>> star(nr, std::vector<Rat>(nc, Rat(0)));
    for (std::size_t i = 0; i < nr; ++i) {
      for (std::size_t c = 0; c < nc; ++c) star[i][c] = Rat(rows[i][c]);
      for (std::size_t j = 0; j < i; ++j) {
        Rat dot(0);
        for (std::size_t c = 0; c < nc; ++c) dot += Rat(rows[i][c]) * star[j][c];
        mu[i][j] = dot / bnorm[j];
        for (std::size_t c = 0; c < nc; ++c) star[i][c] -= mu[i][j] * star[j][c];
      }
      Rat nn(0);
      for (std::size_t c = 0; c < nc; ++c) nn += star[i][c] * star[i][c];
      if (nn == 0) throw InputContractError("basis vectors must be linearly independent");
      bnorm[i] = nn;
    }
  };
  recompute();

  auto size_reduce = [&](std::size_t i, std::size_t j) {
    Rat m = mu[i][j];
    if (m * 2 > 1 || m * 2 < -1) {
      BigInt r = rat_round(m);
      for (std::size_t c = 0; c < nc; ++c) rows[i][c] -= r * rows[j][c];
      for (std::size_t c = 0; c < nr; ++c) u[i][c] -= r * u[j][c];
      for (std::size_t t = 0; t < j; ++t) mu[i][t] -= Rat(r) * mu[j][t];
      mu[i][j] -= Rat(r);
    }
  };

  const Rat delta(3, 4);
  std::size_t k = 1;
  while (k < nr) {
    size_reduce(k, k - 1);
    if (bnorm[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * bnorm[k - 1]) {
      for (std::size_t j = k - 1; j-- > 0;) size_reduce(k, j);
      ++k;
    } else {
      std::swap(rows[k], rows[k - 1]);
      std::swap(u[k], u[k - 1]);
      recompute();  // small dimensions: a full refresh keeps the state simple
      k = k > 1 ? k - 1 : 1;
    }
  }

  BigInt det = detail::integer_determinant(u);
  if (det != 1 && det != -1) throw InternalError("accumulated transform is not unimodular");
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t c = 0; c < nc; ++c) {
      BigInt acc(0);
      for (std::size_t j = 0; j < nr; ++j) acc += u[i][j] * original[j][c];
      if (acc != rows[i][c]) throw InternalError("transform does not reproduce the reduced basis");
    }
  return LllResult{std::move(rows), std::move(u)};
}

}  // namespace lslab
