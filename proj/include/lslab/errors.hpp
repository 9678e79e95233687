#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lslab {

// A solution failed its instance's validity predicate.
struct CertificationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structurally malformed arguments: wrong payload width, bad index, too-short
// vertex lists, and the like.
struct ArityError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Input violates a documented contract of an operation (not a size issue).
struct InputContractError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An enumeration or search exceeded its configured budget.
struct BudgetError : std::runtime_error {
  std::uint64_t budget;
  BudgetError(const std::string& what, std::uint64_t b)
      : std::runtime_error(what), budget(b) {}
};

// A representation ceiling was hit (width, mask count, memory guard).
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An invariant the implementation relies on failed. Always a bug.
struct InternalError : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace lslab
