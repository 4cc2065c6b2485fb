#pragma once

#include <vector>

#include "holey/graph.hpp"
#include "holey/oracles.hpp"

namespace holey {

// R_ell: 4^{ell/4} if ell = 0 mod 4, 4^{(ell-6)/4},6 if ell = 2 mod 4, empty for 0.
LengthList r_list(int ell);

// (3^a, 5^{k-a}) decomposition of {y,z} joined to C plus the isolated vertices N.
// Each returned cycle uses exactly one edge of C.
std::vector<Cycle> mixed_cycles(const Cycle& c, const std::vector<Vertex>& n, Vertex y, Vertex z, int a);

struct BaseParams {
  int m = 0, u = 0, v = 0;
  int w = 0, k = 0, t = 0, x = 0, p = 0, q = 0;
  int p1 = 0;   // p'
  int q1 = 0;   // q' (m >= 11, and m = 9 when t = 0)
  int q3 = 0;   // q'_3 (m = 9, t > 0)
  int q5 = 0;   // q'_5 (m = 9, t > 0)
  int q2 = 0;   // q''
  int k1 = 0;   // k' (m = 9)
  int h = 0;    // m >= 11
  int case_no = 0;  // 1 if t > 0, else 2
};

// Parameters and table rows, with every hypothesis checked.
// Throws PreconditionViolation outside the covered parameter range.
BaseParams base_params(int m, int u, int v);

// Cycle-length multiset the base decomposition must have.
LengthList base_lengths(const BaseParams& bp);

// The short-cycle groups M_1..M_k, each summing to m with one odd entry.
std::vector<LengthList> base_groups(const BaseParams& bp);

struct BaseDecomposition {
  CyclePacking packing;  // a full decomposition of K_v - K_u
  BaseParams params;
};

// m >= 11.
BaseDecomposition base_decomposition(int m, int u, int v, const SolverConfig& cfg = {});
// m = 9.
BaseDecomposition base_decomposition_9(int u, int v, const SolverConfig& cfg = {});

}  // namespace holey
