#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lslab/instance.hpp"

namespace lslab {

// A reduction packaged with everything the checkers need: the two instances,
// the solution map psi (target to source), the embedding (source to target),
// membership in the distinguished target subset R, and the declared step
// bound for bounded-walk checks.
struct ReductionBundle {
  std::string name;
  std::shared_ptr<const LocalSearchInstance> source;
  std::shared_ptr<const LocalSearchInstance> target;
  std::function<Bits(const Bits&)> psi;
  std::function<Bits(const Bits&)> embed;
  std::function<bool(const Bits&)> r_member;
  std::uint64_t declared_tightness = 0;
  // Optional witness: an explicit target walk from embed(p) to embed(p').
  std::function<std::vector<Bits>(const Bits&, const Bits&)> direct_sequence;
};

}  // namespace lslab
