#pragma once

#include <string>
#include <vector>

#include "lslab/elevator.hpp"

namespace lslab {

// One flip simulator = up elevator + turn vertex + down elevator, wired into
// an existing builder graph. All ids in the spec refer to vertices that are
// already present. Carried lists start with the two companion vertices of the
// anchor being left (up) / entered (down), followed by the crossing vertices
// that must leave / enter, in ascending id order.
struct SimulatorSpec {
  std::uint32_t anchor_in = 0;   // anchor the walk starts next to; removed at the turn
  std::uint32_t anchor_out = 0;  // anchor entered right after the turn
  std::vector<std::uint32_t> up_carried;
  std::vector<std::uint32_t> down_carried;
  std::vector<std::uint32_t> up_external;
  std::vector<std::uint32_t> down_external;
  std::vector<std::uint32_t> turn_external;  // includes both anchors
};

struct Simulator {
  SimulatorSpec spec;
  Elevator up;
  Elevator down;
  std::uint32_t turn = 0;

  // Own vertices in creation order: up levels bottom-up, down levels
  // bottom-up, then the turn.
  std::vector<std::uint32_t> own_vertices() const {
    std::vector<std::uint32_t> vs(up.levels);
    vs.insert(vs.end(), down.levels.begin(), down.levels.end());
    vs.push_back(turn);
    return vs;
  }
};

// The turn outweighs the whole up side: its weight is the top down level plus
// the departed anchor, minus one so the move onto the down side still gains.
inline Simulator build_simulator(GraphBuilder& b, const SimulatorSpec& spec,
                                 const std::string& tag) {
  Simulator s;
  s.spec = spec;
  s.up = attach_elevator(b, ElevatorDirection::Up, spec.up_carried, spec.up_external, tag + "u");
  s.down =
      attach_elevator(b, ElevatorDirection::Down, spec.down_carried, spec.down_external, tag + "d");
  Rat tw = b.weight(s.down.top()) + b.weight(spec.anchor_in) - 1;
  s.turn = b.add(tag + "t", tw);
  for (auto l : s.up.levels) b.edge(s.turn, l);
  for (auto l : s.down.levels) b.edge(s.turn, l);
  b.connect(s.turn, spec.turn_external);
  return s;
}

// Strict exchange gap: leaving the top up level for the turn must improve,
// which needs the top down level to outweigh the top up level by more than 1.
inline bool simulator_exchange_gap_ok(const GraphBuilder& b, const Simulator& s) {
  return b.weight(s.down.top()) > b.weight(s.up.top()) + 1;
}

}  // namespace lslab
