#pragma once

#include "holey/shapes.hpp"
#include "holey/surgery.hpp"
#include "holey/switching.hpp"

namespace holey {

struct GoodnessReport {
  bool good = false;
  // Chains: index of the end cycle with a pure edge and outside link (-1 for s = 2).
  // Rings with odd s: index of the cycle with both links outside.
  int witness = -1;
};

GoodnessReport goodness(const ChainForm& chain, const HoledGraph& g);
GoodnessReport goodness(const RingForm& ring, const HoledGraph& g);

enum class Side { Hole, Outside, Either };

// Which part of the isolation argument is being invoked:
// HoleDegree4: |E| <= 2(|U|+1) and a hole vertex of degree >= 4; y is a hole vertex.
// SideExcess: |E| <= 2 min(|U|+2, |V|-|U|) and the requested side has two degree-4
//   vertices or one of degree >= 6; y is on that side.
// AnyExcess: same bound, excess anywhere; returns twins x (degree >= 4) and y.
enum class IsolateRule { HoleDegree4, SideExcess, AnyExcess };

struct IsolatedTwin {
  Vertex x = -1;
  Vertex y = -1;
};

IsolatedTwin find_isolated_twin(const ReducedLeave& l, const HoledGraph& g, Side side, IsolateRule rule);

struct PathSplit {
  CyclePacking packing;
  Path first;   // length m1
  Path second;  // length m2
};

PathSplit rebalance_paths(const CyclePacking& p, int m1, int m2, SwitchTrace* trace = nullptr);
SurgeryResult split_chain_or_ring(const CyclePacking& p, int m1, int m2, SwitchTrace* trace = nullptr);

}  // namespace holey
