#pragma once

#include <utility>

#include "work.hpp"

namespace holey::detail {

// Each returns the two cycles of the final leave, the first of length m (m1).
std::pair<Cycle, Cycle> split_two_chain_work(Work& w, int m);
std::pair<Cycle, Cycle> split_chain_or_ring_work(Work& w, int m1, int m2);
std::pair<Cycle, Cycle> resolve_to_good_chain_work(Work& w, int m1, int m2);
int pick_apart_work(Work& w);

}  // namespace holey::detail
