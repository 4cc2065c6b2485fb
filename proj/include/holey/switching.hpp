#pragma once

#include <cstddef>
#include <vector>

#include "holey/graph.hpp"

namespace holey {

enum class SwitchOption { Unchanged, Transposed, HalfTransposedP, HalfTransposedPDagger };

struct TouchedCycle {
  std::size_t index;
  SwitchOption option;
};

struct SwitchOutcome {
  CyclePacking new_packing;
  Vertex origin = -1;
  Vertex terminus = -1;
  std::vector<TouchedCycle> touched;
};

// (Nbd_L(a) xor Nbd_L(b)) minus {a,b}, ascending.
std::vector<Vertex> switch_candidates(const CyclePacking& p, Vertex a, Vertex b);
SwitchOutcome perform_switch(const CyclePacking& p, Vertex a, Vertex b, Vertex origin);
bool is_repacking(const CyclePacking& p, const CyclePacking& q);

// One applied switch, for replay and debugging.
struct SwitchRecord {
  Vertex a = -1, b = -1, origin = -1, terminus = -1;
  const char* step = "";
};
using SwitchTrace = std::vector<SwitchRecord>;

// Host-agnostic core. The caller guarantees that a and b are twins in the host
// whose edges are the union of `leave` and the cycles. For a cycle through both
// a and b, P is the a..b path in the stored direction starting from a.
struct RawSwitch {
  Vertex terminus = -1;
  std::vector<TouchedCycle> touched;
};

std::vector<Vertex> raw_switch_candidates(const EdgeSet& leave, Vertex a, Vertex b);
RawSwitch apply_switch(std::vector<Cycle>& cycles, EdgeSet& leave, Vertex a, Vertex b, Vertex origin);

}  // namespace holey
