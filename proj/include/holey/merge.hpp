#pragma once

#include "holey/shapes.hpp"
#include "holey/surgery.hpp"
#include "holey/switching.hpp"

namespace holey {

// Leave of size m1 + m2 with two pure edges: k - 1 cycles plus one good t-chain.
// Ends with the leave split into an m1-cycle (first) and an m2-cycle (second).
SurgeryResult resolve_to_good_chain(const CyclePacking& p, int m1, int m2, SwitchTrace* trace = nullptr);

// floor((|E| - 6) / 4) + 1 for a leave with one degree-4 vertex, the rest degree 2.
int component_bound(const ReducedLeave& l);

// Switches degree away from high-degree vertices until exactly one vertex of
// the leave has degree 4 and all others degree 2.
CyclePacking pick_apart(const CyclePacking& p, SwitchTrace* trace = nullptr, int* switches = nullptr);

struct JoinResult {
  CyclePacking packing;  // repacking of the input, same cycle order
  Cycle first;           // C'
  Cycle second;          // C''
  CyclePacking decomposition() const;  // packing plus C' and C''
};

// Leave with two pure edges whose cycles split into two groups of total m each.
JoinResult join_to_two_m_cycles(const CyclePacking& p, int m, SwitchTrace* trace = nullptr);

}  // namespace holey
