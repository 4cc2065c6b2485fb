#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "holey/graph.hpp"

namespace holey {

struct SolverConfig {
  int max_vertices = 64;
  double time_budget = 60.0;  // seconds per call
  std::uint64_t seed = 1;
};

struct SolverStats {
  long long switches = 0;
  long long ruins = 0;
  long long endgames = 0;
};

// Decomposes the graph g into cycles with exactly the lengths of M. Throws
// ResourceExhausted when the budget runs out; the result is always verified.
std::vector<Cycle> solve_list_decomposition(const EdgeSet& g, const LengthList& M, const SolverConfig& cfg,
                                            SolverStats* stats = nullptr);

// Exhaustive search for a decomposition of `leave` into the given lengths.
std::optional<std::vector<Cycle>> exact_decomposition(const EdgeSet& leave, const std::vector<int>& lengths,
                                                      long long node_budget);

struct OneFactor {
  std::vector<Edge> edges;
};

struct FactorDecomposition {
  std::vector<Cycle> cycles;
  OneFactor factor;
};

// K_n - I on 0..n-1 with I = {01, 23, ...}.
FactorDecomposition decompose_even_complete_minus_factor(int n, const LengthList& M, const SolverConfig& cfg);

// K_{a,b} with parts 0..a-1 and a..a+b-1.
std::vector<Cycle> decompose_bipartite(int a, int b, const LengthList& M, const SolverConfig& cfg);

// Twin classes of an arbitrary graph: class[x] == class[y] iff N(x)-y == N(y)-x.
std::vector<int> twin_classes(const EdgeSet& g);

// Checks that cycles partition the edges of g and have the lengths of M.
bool is_list_decomposition(const EdgeSet& g, const LengthList& M, const std::vector<Cycle>& cycles);

}  // namespace holey
