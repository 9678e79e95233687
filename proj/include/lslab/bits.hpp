#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "lslab/errors.hpp"

namespace lslab {

// Fixed-width bit-vector used as the solution payload everywhere.
//
// Coordinate order convention: coordinate 0 is the MOST significant position
// for lexicographic comparison, and 0 sorts before 1. Hence the all-zero
// vector is lex-smallest, and enumerating subsets in increasing counter order
// via from_counter walks them in ascending lex order.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::uint32_t n) : n_(n), w_((n + 63) / 64, 0) {}

  static Bits from_string(const std::string& s) {
    Bits b(static_cast<std::uint32_t>(s.size()));
    for (std::uint32_t i = 0; i < s.size(); ++i) {
      if (s[i] == '1')
        b.set(i, true);
      else if (s[i] != '0')
        throw InputContractError("bit string must be over {0,1}: " + s);
    }
    return b;
  }

  static Bits from_indices(std::uint32_t n, std::initializer_list<std::uint32_t> idx) {
    Bits b(n);
    for (auto i : idx) b.set(i, true);
    return b;
  }

  static Bits from_indices(std::uint32_t n, const std::vector<std::uint32_t>& idx) {
    Bits b(n);
    for (auto i : idx) b.set(i, true);
    return b;
  }

  // Coordinate i takes bit (n-1-i) of v, so v = 0,1,2,... is lex ascending.
  static Bits from_counter(std::uint32_t n, std::uint64_t v) {
    if (n > 63) throw ResourceError("counter enumeration limited to 63 coordinates");
    Bits b(n);
    for (std::uint32_t i = 0; i < n; ++i)
      if ((v >> (n - 1 - i)) & 1u) b.set(i, true);
    return b;
  }

  std::uint64_t to_counter() const {
    if (n_ > 63) throw ResourceError("counter form limited to 63 coordinates");
    std::uint64_t v = 0;
    for (std::uint32_t i = 0; i < n_; ++i)
      if (get(i)) v |= std::uint64_t(1) << (n_ - 1 - i);
    return v;
  }

  std::uint32_t size() const { return n_; }

  bool get(std::uint32_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

  void set(std::uint32_t i, bool v) {
    std::uint64_t m = std::uint64_t(1) << (i & 63);
    if (v)
      w_[i >> 6] |= m;
    else
      w_[i >> 6] &= ~m;
  }

  void flip(std::uint32_t i) { w_[i >> 6] ^= std::uint64_t(1) << (i & 63); }

  std::uint32_t count() const {
    std::uint32_t c = 0;
    for (auto w : w_) c += static_cast<std::uint32_t>(std::popcount(w));
    return c;
  }

  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }

  std::uint32_t diff_count(const Bits& o) const {
    std::uint32_t c = 0;
    for (std::size_t k = 0; k < w_.size(); ++k)
      c += static_cast<std::uint32_t>(std::popcount(w_[k] ^ o.w_[k]));
    return c;
  }

  bool intersects(const Bits& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k] & o.w_[k]) return true;
    return false;
  }

  bool operator==(const Bits& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const Bits& o) const { return !(*this == o); }

  // Lex order, coordinate 0 most significant. Sizes must agree.
  bool lex_less(const Bits& o) const {
    for (std::size_t k = 0; k < w_.size(); ++k) {
      std::uint64_t d = w_[k] ^ o.w_[k];
      if (d) {
        std::uint32_t i = static_cast<std::uint32_t>(std::countr_zero(d));
        return !((w_[k] >> i) & 1u);  // first differing coordinate: 0 < 1
      }
    }
    return false;
  }

  std::uint64_t hash() const {
    std::uint64_t h = 1469598103934665603ull ^ n_;
    for (auto w : w_) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return h;
  }

  std::string to_string() const {
    std::string s(n_, '0');
    for (std::uint32_t i = 0; i < n_; ++i)
      if (get(i)) s[i] = '1';
    return s;
  }

  std::vector<std::uint32_t> indices() const {
    std::vector<std::uint32_t> v;
    for (std::uint32_t i = 0; i < n_; ++i)
      if (get(i)) v.push_back(i);
    return v;
  }

  Bits xored(const Bits& o) const {
    Bits r = *this;
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] ^= o.w_[k];
    return r;
  }

  Bits anded(const Bits& o) const {
    Bits r = *this;
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] &= o.w_[k];
    return r;
  }

  Bits ored(const Bits& o) const {
    Bits r = *this;
    for (std::size_t k = 0; k < w_.size(); ++k) r.w_[k] |= o.w_[k];
    return r;
  }

  std::vector<std::uint64_t>& words() { return w_; }
  const std::vector<std::uint64_t>& words() const { return w_; }

 private:
  std::uint32_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const { return static_cast<std::size_t>(b.hash()); }
};

}  // namespace lslab
