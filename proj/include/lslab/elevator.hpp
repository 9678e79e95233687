#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lslab/swop.hpp"

namespace lslab {

// Incremental vertex-weighted graph assembly for gadget constructions.
// Edges are deduplicated; self-loops are rejected.
class GraphBuilder {
 public:
  struct Vert {
    std::string label;
    Rat weight;
  };

  std::uint32_t add(std::string label, Rat weight) {
    verts_.push_back({std::move(label), std::move(weight)});
    return static_cast<std::uint32_t>(verts_.size() - 1);
  }

  void edge(std::uint32_t a, std::uint32_t b) {
    if (a >= verts_.size() || b >= verts_.size())
      throw ArityError("edge endpoint not yet added");
    if (a == b) throw InputContractError("self-loops are not supported");
    if (a > b) std::swap(a, b);
    edges_.emplace(a, b);
  }

  void clique(const std::vector<std::uint32_t>& vs) {
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) edge(vs[i], vs[j]);
  }

  void biclique(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    for (auto u : a)
      for (auto v : b) edge(u, v);
  }

  void connect(std::uint32_t v, const std::vector<std::uint32_t>& others) {
    for (auto u : others) edge(v, u);
  }

  bool adjacent(std::uint32_t a, std::uint32_t b) const {
    if (a > b) std::swap(a, b);
    return edges_.count({a, b}) > 0;
  }

  std::uint32_t size() const { return static_cast<std::uint32_t>(verts_.size()); }
  const Rat& weight(std::uint32_t v) const { return verts_.at(v).weight; }
  const std::string& label(std::uint32_t v) const { return verts_.at(v).label; }
  void set_weight(std::uint32_t v, Rat w) { verts_.at(v).weight = std::move(w); }

  Graph graph() const {
    Graph g;
    g.n = size();
    g.edges.assign(edges_.begin(), edges_.end());
    return g;
  }

  // Weighted-independent-set instance over the assembled graph: vertex
  // weights as added, edge coordinates weightless, swap bound c.
  SwopInstance to_wis(std::uint32_t c) const {
    std::vector<Rat> w;
    w.reserve(verts_.size() + edges_.size());
    for (auto& v : verts_) w.push_back(v.weight);
    for (std::size_t i = 0; i < edges_.size(); ++i) w.push_back(Rat(0));
    return SwopInstance(graph(), std::move(w), Certifier{CertifierKind::IndependentSet, {}}, c);
  }

 private:
  std::vector<Vert> verts_;
  std::set<std::pair<std::uint32_t, std::uint32_t>> edges_;
};

enum class ElevatorDirection { Up, Down };

// Level weights over carried vertices x[0..]: the bottom level outweighs
// {x[0], x[1]} by +1 (up) or falls short by 1 (down); each higher level
// absorbs the next carried vertex with the same +-1 offset. At least two
// carried vertices are required, giving |x| - 1 levels.
inline std::vector<Rat> elevator_level_weights(const std::vector<Rat>& x_weights,
                                               ElevatorDirection dir) {
  if (x_weights.size() < 2) throw ArityError("an elevator needs at least two carried vertices");
  Rat off = dir == ElevatorDirection::Up ? Rat(1) : Rat(-1);
  std::vector<Rat> levels;
  levels.reserve(x_weights.size() - 1);
  levels.push_back(x_weights[0] + x_weights[1] + off);
  for (std::size_t j = 2; j < x_weights.size(); ++j)
    levels.push_back(levels.back() + x_weights[j] + off);
  return levels;
}

// An elevator attached into a builder graph: `levels` is a clique, level j is
// adjacent to the first j+2 carried vertices, and every level sees the whole
// external neighborhood.
struct Elevator {
  ElevatorDirection dir = ElevatorDirection::Up;
  std::vector<std::uint32_t> x;       // carried vertices (existing builder ids)
  std::vector<std::uint32_t> levels;  // new level vertices, bottom first

  std::uint32_t top() const { return levels.back(); }
  std::uint32_t bottom() const { return levels.front(); }
};

inline Elevator attach_elevator(GraphBuilder& b, ElevatorDirection dir,
                                const std::vector<std::uint32_t>& x,
                                const std::vector<std::uint32_t>& externals,
                                const std::string& tag) {
  std::vector<Rat> xw;
  xw.reserve(x.size());
  for (auto v : x) xw.push_back(b.weight(v));
  auto lw = elevator_level_weights(xw, dir);
  Elevator e;
  e.dir = dir;
  e.x = x;
  char mark = dir == ElevatorDirection::Up ? '+' : '-';
  for (std::size_t j = 0; j < lw.size(); ++j) {
    auto id = b.add(tag + mark + std::to_string(j), lw[j]);
    e.levels.push_back(id);
    for (std::size_t i = 0; i < j + 2; ++i) b.edge(id, x[i]);
    b.connect(id, externals);
  }
  b.clique(e.levels);
  return e;
}

struct ElevatorStep {
  std::vector<std::uint32_t> add;
  std::vector<std::uint32_t> remove;
};

// Up elevators improve by climbing: swap level j for level j+1 and drop the
// newly absorbed carried vertex, net gain +1.
inline ElevatorStep elevator_climb_step(const Elevator& e, std::size_t j) {
  if (e.dir != ElevatorDirection::Up) throw InputContractError("climb steps need an up elevator");
  if (j + 1 >= e.levels.size()) throw ArityError("no level above the top");
  return {{e.levels[j + 1]}, {e.levels[j], e.x[j + 2]}};
}

// Down elevators improve by descending: swap level j for level j-1 plus the
// released carried vertex, net gain +1; from the bottom level, dissolve into
// the first two carried vertices.
inline ElevatorStep elevator_descend_step(const Elevator& e, std::size_t j) {
  if (e.dir != ElevatorDirection::Down)
    throw InputContractError("descend steps need a down elevator");
  if (j >= e.levels.size()) throw ArityError("no such level");
  if (j == 0) return {{e.x[0], e.x[1]}, {e.levels[0]}};
  return {{e.levels[j - 1], e.x[j + 1]}, {e.levels[j]}};
}

}  // namespace lslab
