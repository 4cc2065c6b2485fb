#pragma once

#include <string>
#include <vector>

#include "holey/admissible.hpp"
#include "holey/certificate.hpp"
#include "holey/oracles.hpp"

namespace holey {

enum class Route { AmostEverything, Nesting, Search, Solver };

std::string to_string(Route r);

struct DispatchStep {
  Route route;
  int m = 0, u = 0, v = 0;
  long long switches = 0;
  double seconds = 0;
};

struct DispatchTrace {
  Route route = Route::Search;  // route of the top-level call
  std::uint64_t seed = 0;
  std::vector<DispatchStep> steps;  // every sub-call, innermost first
};

// Verified m-cycle decomposition of K_v - K_u.
// Throws NotAdmissible, OutOfCoveredRange or ResourceExhausted.
Certificate construct(int m, int u, int v, const SolverConfig& cfg = {}, DispatchTrace* trace = nullptr);

// Base decomposition followed by repeated joining into m-cycles.
Certificate amost_everything(int m, int u, int v, const SolverConfig& cfg = {}, DispatchTrace* trace = nullptr);

// Packing search with switching and restarts, for v <= cfg.max_vertices.
Certificate search_small(int m, int u, int v, const SolverConfig& cfg = {});

// Union of a decomposition of K_{u*} - K_u and one of K_v - K_{u*}.
Certificate nest(const Certificate& inner, const Certificate& outer);

// Embeds an m-cycle system of order system.v (hole of size 0 or 1) into one
// of order v. The result has u = 1 and contains every input cycle.
Certificate embed_system(const Certificate& system, int v, const SolverConfig& cfg = {}, DispatchTrace* trace = nullptr);

}  // namespace holey
