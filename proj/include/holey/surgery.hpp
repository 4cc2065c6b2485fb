#pragma once

#include "holey/shapes.hpp"
#include "holey/switching.hpp"

namespace holey {

// A 2-chain is read as P = chain.cycles[0] = (c, x_1, ..., x_{p-1}) and
// Q = chain.cycles[1] = (c, y_1, ..., y_{q-1}), both starting at the link c.
struct SurgeryResult {
  CyclePacking packing;
  bool split = false;  // leave is now first + second
  bool grown = false;  // rearrange_local produced the (p+2, q-2)-chain
  ChainForm chain;     // the successor chain when !split
  Cycle first;         // the cycle of the requested length when split
  Cycle second;
};

// Single (x_1, y_{m-p+1})-switch with origin x_2.
SurgeryResult figure_of_eight_1(const CyclePacking& p, const ChainForm& chain, int m, SwitchTrace* trace = nullptr);
// Single (x_2, y_{m-p+2})-switch with origin x_3.
SurgeryResult figure_of_eight_2(const CyclePacking& p, const ChainForm& chain, int m, SwitchTrace* trace = nullptr);
// Alternates the two steps until the leave is an m-cycle plus a (p+q-m)-cycle.
SurgeryResult figure_of_eight_reduce(const CyclePacking& p, const ChainForm& chain, int m, SwitchTrace* trace = nullptr);
// (y_0, y_{q-2})-switch with origin y_{q-3}.
SurgeryResult rearrange_local(const CyclePacking& p, const ChainForm& chain, SwitchTrace* trace = nullptr);
// Leave must be a 2-chain with exactly two pure edges.
SurgeryResult split_two_chain(const CyclePacking& p, int m, SwitchTrace* trace = nullptr);

bool figure_of_eight_hypotheses(const HoledGraph& g, const ChainForm& chain, int m);

}  // namespace holey
