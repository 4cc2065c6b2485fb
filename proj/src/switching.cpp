#include "holey/switching.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>

namespace holey {
namespace {

constexpr int kNone = -2;
constexpr int kLeave = -1;

// Label of a pairing edge inside a cycle.
enum Label : int { kWhole = 0, kP = 1, kPDagger = 2 };

struct SlotLink {
  Vertex to = -1;
  int to_side = -1;  // 0: edge to a, 1: edge to b
  int cycle = -1;
  int label = -1;
};

void reverse_between(Cycle& c, std::size_t from, std::size_t count) {
  // reverse the `count` entries starting at index `from`, cyclically
  const std::size_t k = c.size();
  for (std::size_t i = 0, j = count - 1; i < j; ++i, --j) std::swap(c[(from + i) % k], c[(from + j) % k]);
}

}  // namespace

std::vector<Vertex> raw_switch_candidates(const EdgeSet& leave, Vertex a, Vertex b) {
  std::vector<Vertex> out;
  for (Vertex x = 0; x < leave.order(); ++x) {
    if (x == a || x == b) continue;
    if (leave.has(a, x) != leave.has(b, x)) out.push_back(x);
  }
  return out;
}

RawSwitch apply_switch(std::vector<Cycle>& cycles, EdgeSet& leave, Vertex a, Vertex b, Vertex origin) {
  const int n = leave.order();
  if (a == b || origin == a || origin == b || origin < 0 || origin >= n)
    fail(ErrorKind::OriginNotEligible, "origin must differ from the switched pair");
  if (leave.has(a, origin) == leave.has(b, origin))
    fail(ErrorKind::OriginNotEligible, "origin " + std::to_string(origin) + " is not a switch candidate");

  std::vector<std::array<int, 2>> own(n, {kNone, kNone});
  std::vector<std::array<SlotLink, 2>> link(n);
  for (Vertex x : leave.neighbours(a)) own[x][0] = kLeave;
  for (Vertex x : leave.neighbours(b)) own[x][1] = kLeave;

  std::vector<std::array<std::size_t, 2>> pos(cycles.size());
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    const Cycle& c = cycles[i];
    const std::size_t k = c.size();
    std::size_t ia = k, ib = k;
    for (std::size_t j = 0; j < k; ++j) {
      if (c[j] == a) ia = j;
      if (c[j] == b) ib = j;
    }
    pos[i] = {ia, ib};
    const int ci = static_cast<int>(i);
    auto pair_up = [&](Vertex x, int sx, Vertex y, int sy, int label) {
      own[x][sx] = ci;
      own[y][sy] = ci;
      link[x][sx] = {y, sy, ci, label};
      link[y][sy] = {x, sx, ci, label};
    };
    if (ia < k && ib == k) {
      pair_up(c[(ia + k - 1) % k], 0, c[(ia + 1) % k], 0, kWhole);
    } else if (ib < k && ia == k) {
      pair_up(c[(ib + k - 1) % k], 1, c[(ib + 1) % k], 1, kWhole);
    } else if (ia < k && ib < k) {
      const std::size_t j = (ib + k - ia) % k;  // steps from a forward to b
      if (j >= 2) pair_up(c[(ia + 1) % k], 0, c[(ib + k - 1) % k], 1, kP);
      if (k - j >= 2) pair_up(c[(ia + k - 1) % k], 0, c[(ib + 1) % k], 1, kPDagger);
    }
  }

  // Walk the pairing graph from the origin until the slot on the far side is a leave edge.
  std::map<int, int> traversed;  // cycle -> bitmask of labels
  int side = own[origin][0] == kLeave ? 1 : 0;
  if (own[origin][side] < 0) fail(ErrorKind::OriginNotEligible, "origin edge is not covered by the packing");
  Vertex x = origin;
  Vertex terminus = -1;
  for (int steps = 0; steps <= 2 * n + 2; ++steps) {
    const SlotLink& l = link[x][side];
    if (l.to < 0) fail(ErrorKind::InternalInvariantViolation, "pairing graph is broken (vertices not twins?)");
    traversed[l.cycle] |= 1 << l.label;
    const Vertex y = l.to;
    const int other = 1 - l.to_side;
    if (own[y][other] == kLeave) {
      terminus = y;
      break;
    }
    if (own[y][other] == kNone) fail(ErrorKind::InternalInvariantViolation, "pairing trail hit a non-edge (vertices not twins?)");
    x = y;
    side = other;
  }
  if (terminus < 0) fail(ErrorKind::InternalInvariantViolation, "pairing trail did not terminate");
  if (terminus == origin) fail(ErrorKind::InternalInvariantViolation, "switch terminus equals origin");

  RawSwitch out;
  out.terminus = terminus;
  for (auto [ci, mask] : traversed) {
    Cycle& c = cycles[static_cast<std::size_t>(ci)];
    const std::size_t k = c.size();
    auto [ia, ib] = pos[static_cast<std::size_t>(ci)];
    SwitchOption opt;
    if (mask == (1 << kWhole) || mask == ((1 << kP) | (1 << kPDagger))) {
      for (Vertex& y : c) {
        if (y == a)
          y = b;
        else if (y == b)
          y = a;
      }
      opt = SwitchOption::Transposed;
    } else if (mask == (1 << kP)) {
      const std::size_t j = (ib + k - ia) % k;
      reverse_between(c, (ia + 1) % k, j - 1);
      opt = SwitchOption::HalfTransposedP;
    } else if (mask == (1 << kPDagger)) {
      const std::size_t j = (ia + k - ib) % k;
      reverse_between(c, (ib + 1) % k, j - 1);
      opt = SwitchOption::HalfTransposedPDagger;
    } else {
      fail(ErrorKind::InternalInvariantViolation, "inconsistent pairing labels");
    }
    out.touched.push_back({static_cast<std::size_t>(ci), opt});
  }

  for (Vertex t : {origin, terminus}) {
    if (leave.has(a, t)) {
      leave.remove(a, t);
      leave.add(b, t);
    } else {
      leave.remove(b, t);
      leave.add(a, t);
    }
  }
  return out;
}

std::vector<Vertex> switch_candidates(const CyclePacking& p, Vertex a, Vertex b) {
  if (!p.host.twins(a, b)) fail(ErrorKind::NotTwin, std::to_string(a) + " and " + std::to_string(b) + " are not twins");
  return raw_switch_candidates(leave_of(p), a, b);
}

SwitchOutcome perform_switch(const CyclePacking& p, Vertex a, Vertex b, Vertex origin) {
  if (!p.host.twins(a, b)) fail(ErrorKind::NotTwin, std::to_string(a) + " and " + std::to_string(b) + " are not twins");
  if (!p.host.valid_vertex(origin)) fail(ErrorKind::OriginNotEligible, "origin out of range");
  EdgeSet leave = leave_of(p);
  SwitchOutcome out;
  out.new_packing = p;
  RawSwitch r = apply_switch(out.new_packing.cycles, leave, a, b, origin);
  out.origin = origin;
  out.terminus = r.terminus;
  out.touched = std::move(r.touched);
  return out;
}

bool is_repacking(const CyclePacking& p, const CyclePacking& q) {
  if (!(p.host == q.host) || p.cycles.size() != q.cycles.size()) return false;
  auto signature = [](const CyclePacking& x) {
    std::vector<std::pair<std::size_t, int>> s;
    for (const Cycle& c : x.cycles) s.emplace_back(c.size(), pure_edges_in(x.host, c));
    std::sort(s.begin(), s.end());
    return s;
  };
  return is_valid_packing(q) && signature(p) == signature(q);
}

}  // namespace holey
