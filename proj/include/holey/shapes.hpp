#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "holey/graph.hpp"

namespace holey {

// A_1..A_s with links[i] the vertex shared by A_{i+1} and A_{i+2} (0-based: cycles[i], cycles[i+1]).
// End cycles start at their link vertex.
struct ChainForm {
  std::vector<Cycle> cycles;
  std::vector<Vertex> links;
  std::vector<int> pure;
  std::vector<int> lengths() const;
  int size() const { return static_cast<int>(cycles.size()); }
};

// For s >= 3, links[i] is shared by cycles[i] and cycles[(i+1) % s]. For s = 2 both
// shared vertices are listed.
struct RingForm {
  std::vector<Cycle> cycles;
  std::vector<Vertex> links;
  std::vector<int> pure;
  int size() const { return static_cast<int>(cycles.size()); }
};

enum class ComponentKind { Cycle, Chain, Ring, Other };

struct Component {
  ComponentKind kind = ComponentKind::Other;
  std::vector<Vertex> vertices;
  long long edges = 0;
  int pure = 0;
  Cycle cycle;
  ChainForm chain;
  RingForm ring;
};

enum class ShapeTag { Empty, TwoChain, Chain, Ring, CycleUnion, Other };

struct LeaveShape {
  ShapeTag tag = ShapeTag::Empty;
  ChainForm chain;
  RingForm ring;
  std::vector<Cycle> cycles;
  std::map<int, int> degree_profile;  // degree -> number of vertices
  std::vector<Component> components;
};

std::vector<Component> leave_components(const HoledGraph& g, const EdgeSet& leave);
LeaveShape classify_leave(const ReducedLeave& l, const HoledGraph& g);
LeaveShape classify_leave(const CyclePacking& p);

// Edge-disjoint union of an m1-cycle and an m2-cycle covering the leave exactly.
std::optional<std::pair<Cycle, Cycle>> split_two_cycles(const EdgeSet& leave, int m1, int m2);

EdgeSet edges_of_cycles(int n, const std::vector<Cycle>& cycles);
bool cycle_in_edges(const EdgeSet& e, const Cycle& c);
int shared_vertices(const Cycle& a, const Cycle& b);

}  // namespace holey
