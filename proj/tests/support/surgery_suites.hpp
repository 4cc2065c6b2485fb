#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "support/instances.hpp"

namespace holey::testing {

// Outcome of a randomized suite: instances run, failures with a reason, and
// named counters for coverage of the interesting cases.
struct SuiteStats {
  int done = 0;
  int failed = 0;
  int bound_checked = 0;
  int bound_violated = 0;
  std::vector<std::string> failures;  // the first few
  std::map<std::string, int> tally;

  void fail(const std::string& why);
};

// A good chain (or ring) with two pure edges on s cycles, packed in g.
struct DrawnChain {
  CyclePacking packing;
  int total = 0;
};
std::optional<DrawnChain> draw_good(const HoledGraph& g, int s, bool ring, Rng& rng);

// Independent count of connected components.
int components(const EdgeSet& e);

// Each suite stops after `target` eligible instances (v <= 29 throughout).
SuiteStats run_split_two_chain(std::uint64_t seed, int target);
SuiteStats run_split_chain_or_ring(std::uint64_t seed, int target);
SuiteStats run_resolve_to_good_chain(std::uint64_t seed, int target);
SuiteStats run_pick_apart(std::uint64_t seed, int target);
SuiteStats run_join(std::uint64_t seed, int target);

}  // namespace holey::testing
