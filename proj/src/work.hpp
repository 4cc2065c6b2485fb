#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "holey/shapes.hpp"
#include "holey/switching.hpp"

namespace holey::detail {

[[noreturn]] inline void broken(const std::string& what) { fail(ErrorKind::InternalInvariantViolation, what); }

// Mutable packing state shared by the surgery, chain and merge algorithms.
struct Work {
  HoledGraph g;
  std::vector<Cycle> cycles;
  EdgeSet leave;
  SwitchTrace* trace = nullptr;

  Work(const CyclePacking& p, SwitchTrace* t) : g(p.host), cycles(p.cycles), leave(leave_of(p)), trace(t) {}

  CyclePacking packing() const { return {g, cycles}; }
  bool outside(Vertex x) const { return !g.in_hole(x); }
  bool twin(Vertex a, Vertex b) const { return a != b && g.in_hole(a) == g.in_hole(b); }
  ReducedLeave reduced() const { return reduced_leave_of(g, leave); }
  LeaveShape shape() const { return classify_leave(reduced(), g); }
  int leave_pure() const { return reduced().pure_edges; }

  Vertex sw(Vertex a, Vertex b, Vertex origin, const char* step) {
    if (!twin(a, b)) broken(std::string(step) + ": switch on non-twin vertices");
    RawSwitch r = apply_switch(cycles, leave, a, b, origin);
    if (trace) trace->push_back({a, b, origin, r.terminus, step});
    return r.terminus;
  }
};

inline bool leave_is(const EdgeSet& leave, const std::vector<Cycle>& cs) {
  return edges_of_cycles(leave.order(), cs) == leave;
}

// The edges of e if they form one cycle.
inline std::optional<Cycle> single_cycle(const EdgeSet& e) {
  std::vector<Vertex> sup = e.support();
  if (sup.size() < 3 || static_cast<long long>(sup.size()) != e.size()) return std::nullopt;
  for (Vertex x : sup)
    if (e.degree(x) != 2) return std::nullopt;
  Cycle c;
  Vertex prev = -1, cur = sup[0];
  do {
    c.push_back(cur);
    auto nb = e.neighbours(cur);
    Vertex nx = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = nx;
  } while (cur != sup[0] && c.size() <= sup.size());
  if (c.size() != sup.size()) return std::nullopt;
  return c;
}

// The edges of e if they form one path (at least one edge).
inline std::optional<Path> single_path(const EdgeSet& e) {
  std::vector<Vertex> sup = e.support();
  if (sup.size() < 2 || static_cast<long long>(sup.size()) != e.size() + 1) return std::nullopt;
  Vertex start = -1;
  for (Vertex x : sup) {
    if (e.degree(x) > 2) return std::nullopt;
    if (e.degree(x) == 1 && start < 0) start = x;
  }
  if (start < 0) return std::nullopt;
  Path p{start};
  Vertex prev = -1, cur = start;
  while (p.size() <= sup.size()) {
    Vertex nx = -1;
    for (Vertex y : e.neighbours(cur))
      if (y != prev) nx = y;
    if (nx < 0) break;
    p.push_back(nx);
    prev = cur;
    cur = nx;
  }
  if (p.size() != sup.size()) return std::nullopt;
  return p;
}

inline bool path_in_edges(const EdgeSet& e, const Path& p) {
  std::vector<char> seen(e.order(), 0);
  for (Vertex x : p) {
    if (seen[x]) return false;
    seen[x] = 1;
  }
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!e.has(p[i], p[i + 1])) return false;
  return true;
}

inline EdgeSet minus_path(const EdgeSet& e, const Path& p) {
  EdgeSet r = e;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) r.remove(p[i], p[i + 1]);
  return r;
}

inline std::optional<Cycle> remainder_cycle(const EdgeSet& leave, const Cycle& c) {
  if (!cycle_in_edges(leave, c)) return std::nullopt;
  EdgeSet r = leave;
  for (std::size_t i = 0; i < c.size(); ++i) r.remove(c[i], c[(i + 1) % c.size()]);
  return single_cycle(r);
}

// Rotates a cycle through x so that it starts at x.
inline Cycle rotate_to(const Cycle& c, Vertex x) {
  auto it = std::find(c.begin(), c.end(), x);
  if (it == c.end()) broken("rotate_to: vertex not on cycle");
  Cycle out(it, c.end());
  out.insert(out.end(), c.begin(), it);
  return out;
}

// Same cycle, same start, opposite direction.
inline Cycle reversed_from_start(const Cycle& c) {
  Cycle out{c[0]};
  for (std::size_t i = c.size() - 1; i >= 1; --i) out.push_back(c[i]);
  return out;
}

inline bool contains(const std::vector<Vertex>& c, Vertex x) { return std::find(c.begin(), c.end(), x) != c.end(); }

}  // namespace holey::detail
