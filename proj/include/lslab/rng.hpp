#pragma once

#include <cstdint>
#include <random>

namespace lslab {

// Deterministic randomness wrapper. Every randomized choice in the library
// draws through this, so runs replay bit-for-bit across platforms:
// mt19937_64 seeded directly, bounded draws by modulo rejection (redraw while
// the raw 64-bit sample falls in the biased tail).
struct Rng {
  static constexpr const char* kAlgorithm = "mt19937_64/modulo-rejection";

  std::mt19937_64 eng;

  explicit Rng(std::uint64_t seed) : eng(seed) {}

  std::uint64_t next_raw() { return eng(); }

  // Uniform in [0, bound), bound >= 1.
  std::uint64_t next_below(std::uint64_t bound) {
    if (bound == 0) return 0;
    std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % bound);
    std::uint64_t x = eng();
    while (x >= limit) x = eng();
    return x % bound;
  }

  // Uniform in [lo, hi], inclusive.
  std::int64_t next_in(std::int64_t lo, std::int64_t hi) {
    std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next_below(span));
  }

  bool next_bool() { return next_below(2) == 1; }
};

}  // namespace lslab
