#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lslab/bits.hpp"
#include "lslab/errors.hpp"
#include "lslab/rational.hpp"

namespace lslab {

// Role interface of a local-search problem: solution validity, objective, and
// neighborhood over fixed-width bit-vector solutions. Implementations must
// keep neighbor enumeration deterministic and in ascending lex order.
class LocalSearchInstance {
 public:
  virtual ~LocalSearchInstance() = default;

  virtual std::uint32_t ground_size() const = 0;
  virtual bool maximize() const { return true; }
  virtual std::string family_name() const = 0;
  // Name of the validity predicate, used in certification failure messages.
  virtual std::string validity_name() const { return "validity"; }

  virtual bool valid(const Bits& s) const = 0;
  // pre: valid(s).
  virtual Rat objective(const Bits& s) const = 0;

  // All valid neighbors of s, ascending lex order, s itself excluded.
  virtual std::vector<Bits> neighbors(const Bits& s) const = 0;

  // Whether b lies in the neighborhood of a (both assumed valid, a != b).
  virtual bool is_neighbor(const Bits& a, const Bits& b) const = 0;

  // Valid neighbors with strictly better objective, ascending lex order.
  virtual std::vector<Bits> improving_neighbors(const Bits& s) const {
    std::vector<Bits> out;
    Rat base = objective(s);
    for (auto& nb : neighbors(s))
      if (better(objective(nb), base)) out.push_back(nb);
    return out;
  }

  virtual bool has_improving_neighbor(const Bits& s) const {
    Rat base = objective(s);
    for (auto& nb : neighbors(s))
      if (better(objective(nb), base)) return true;
    return false;
  }

  // Every valid solution in ascending lex order. Throws BudgetError once more
  // than `budget` valid solutions exist. The callback argument is transient:
  // copy it if it must outlive the call.
  virtual void enumerate_valid(std::uint64_t budget,
                               const std::function<void(const Bits&)>& cb) const {
    std::uint32_t g = ground_size();
    if (g > 26) throw ResourceError("generic enumeration limited to 26 ground elements");
    std::uint64_t emitted = 0;
    for (std::uint64_t v = 0; v < (std::uint64_t(1) << g); ++v) {
      Bits b = Bits::from_counter(g, v);
      if (!valid(b)) continue;
      if (++emitted > budget) throw BudgetError("valid-solution enumeration over budget", budget);
      cb(b);
    }
  }

  void check_arity(const Bits& s) const {
    if (s.size() != ground_size())
      throw ArityError("solution width " + std::to_string(s.size()) +
                       " does not match ground size " + std::to_string(ground_size()));
  }

  void require_valid(const Bits& s) const {
    check_arity(s);
    if (!valid(s))
      throw CertificationError("solution rejected by " + validity_name() + ": " + s.to_string());
  }

  bool better(const Rat& a, const Rat& b) const { return maximize() ? a > b : a < b; }
};

}  // namespace lslab
