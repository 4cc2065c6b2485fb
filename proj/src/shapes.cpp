#include "holey/shapes.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace holey {
namespace {

struct Segment {
  Vertex from, to;
  Path path;  // from .. to inclusive
};

// Concatenate two segments with equal endpoints into a cycle starting at s1.from.
Cycle join_segments(const Segment& s1, const Segment& s2) {
  const Path& p = s2.path;
  const bool same_dir = s2.from == s1.from;
  Cycle out = s1.path;
  if (same_dir) {
    for (std::size_t i = p.size() - 2; i >= 1; --i) out.push_back(p[i]);
  } else {
    for (std::size_t i = 1; i + 1 < p.size(); ++i) out.push_back(p[i]);
  }
  return out;
}

Cycle loop_cycle(const Segment& s) {
  Cycle c = s.path;
  c.pop_back();
  return c;
}

int pure_in(const HoledGraph& g, const Cycle& c) { return pure_edges_in(g, c); }

void analyse(const HoledGraph& g, const EdgeSet& leave, Component& comp) {
  std::vector<Vertex> branch;
  for (Vertex x : comp.vertices) {
    const int d = leave.degree(x);
    if (d > 4) return;
    if (d == 4) branch.push_back(x);
  }
  if (branch.empty()) {
    Cycle c;
    Vertex prev = -1, cur = comp.vertices.front();
    do {
      c.push_back(cur);
      auto nb = leave.neighbours(cur);
      Vertex nx = nb[0] == prev ? nb[1] : nb[0];
      if (prev == -1) nx = nb[0];
      prev = cur;
      cur = nx;
    } while (cur != c.front());
    comp.kind = ComponentKind::Cycle;
    comp.cycle = c;
    return;
  }

  // Segments between branch vertices.
  EdgeSet used(leave.order());
  std::vector<char> is_branch(leave.order(), 0);
  for (Vertex b : branch) is_branch[b] = 1;
  std::vector<Segment> segs;
  for (Vertex b : branch) {
    for (Vertex y : leave.neighbours(b)) {
      if (used.has(b, y)) continue;
      Segment s{b, -1, {b, y}};
      used.add(b, y);
      Vertex prev = b, cur = y;
      while (!is_branch[cur]) {
        Vertex nx = -1;
        for (Vertex z : leave.neighbours(cur))
          if (!used.has(cur, z)) nx = z;
        if (nx < 0) return;
        used.add(cur, nx);
        s.path.push_back(nx);
        prev = cur;
        cur = nx;
      }
      (void)prev;
      s.to = cur;
      segs.push_back(std::move(s));
    }
  }

  std::map<Vertex, std::vector<int>> loops;
  std::map<std::pair<Vertex, Vertex>, std::vector<int>> par;
  for (int i = 0; i < static_cast<int>(segs.size()); ++i) {
    if (segs[i].from == segs[i].to)
      loops[segs[i].from].push_back(i);
    else
      par[make_edge(segs[i].from, segs[i].to)].push_back(i);
  }

  auto fill_pure = [&](std::vector<Cycle>& cs, std::vector<int>& pure) {
    pure.clear();
    for (const Cycle& c : cs) pure.push_back(pure_in(g, c));
  };

  if (branch.size() == 1) {
    auto it = loops.find(branch[0]);
    if (it == loops.end() || it->second.size() != 2) return;
    comp.kind = ComponentKind::Chain;
    comp.chain.cycles = {loop_cycle(segs[it->second[0]]), loop_cycle(segs[it->second[1]])};
    comp.chain.links = {branch[0]};
    fill_pure(comp.chain.cycles, comp.chain.pure);
    return;
  }

  for (auto& [e, ids] : par)
    if (ids.size() != 2 && !(branch.size() == 2 && ids.size() == 4)) return;
  std::map<Vertex, std::vector<Vertex>> adj;
  for (auto& [e, ids] : par) {
    adj[e.first].push_back(e.second);
    adj[e.second].push_back(e.first);
  }

  if (loops.empty()) {
    if (branch.size() == 2) {
      if (par.size() != 1 || par.begin()->second.size() != 4) return;
      const auto& ids = par.begin()->second;
      comp.kind = ComponentKind::Ring;
      comp.ring.cycles = {join_segments(segs[ids[0]], segs[ids[1]]), join_segments(segs[ids[2]], segs[ids[3]])};
      comp.ring.links = {branch[0], branch[1]};
      fill_pure(comp.ring.cycles, comp.ring.pure);
      return;
    }
    for (Vertex b : branch)
      if (adj[b].size() != 2) return;
    std::vector<Vertex> order{branch[0]};
    Vertex prev = -1, cur = branch[0];
    while (true) {
      Vertex nx = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      if (nx == branch[0]) break;
      order.push_back(nx);
      prev = cur;
      cur = nx;
      if (order.size() > branch.size()) return;
    }
    if (order.size() != branch.size()) return;
    const int s = static_cast<int>(order.size());
    comp.kind = ComponentKind::Ring;
    comp.ring.cycles.clear();
    comp.ring.links.clear();
    // cycles[i] lies between links[i-1] and links[i]
    for (int i = 0; i < s; ++i) {
      Vertex x = order[i], y = order[(i + 1) % s];
      const auto& ids = par[make_edge(x, y)];
      Segment a = segs[ids[0]], b = segs[ids[1]];
      if (a.from != x) {
        std::reverse(a.path.begin(), a.path.end());
        std::swap(a.from, a.to);
      }
      comp.ring.cycles.push_back(join_segments(a, b));
      comp.ring.links.push_back(y);
    }
    fill_pure(comp.ring.cycles, comp.ring.pure);
    return;
  }

  // Chain: two branch vertices with one loop each, the rest forming a doubled path.
  std::vector<Vertex> ends;
  for (auto& [b, ids] : loops) {
    if (ids.size() != 1) return;
    ends.push_back(b);
  }
  if (ends.size() != 2) return;
  for (Vertex b : branch) {
    const std::size_t want = (b == ends[0] || b == ends[1]) ? 1 : 2;
    if (adj[b].size() != want) return;
  }
  std::vector<Vertex> order{ends[0]};
  Vertex prev = -1, cur = ends[0];
  while (cur != ends[1]) {
    Vertex nx = -1;
    for (Vertex z : adj[cur])
      if (z != prev) nx = z;
    if (nx < 0) return;
    order.push_back(nx);
    prev = cur;
    cur = nx;
    if (order.size() > branch.size()) return;
  }
  if (order.size() != branch.size()) return;
  comp.kind = ComponentKind::Chain;
  ChainForm& ch = comp.chain;
  ch.cycles.push_back(loop_cycle(segs[loops[order.front()][0]]));
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    const auto& ids = par[make_edge(order[i], order[i + 1])];
    Segment a = segs[ids[0]], b = segs[ids[1]];
    if (a.from != order[i]) {
      std::reverse(a.path.begin(), a.path.end());
      std::swap(a.from, a.to);
    }
    ch.cycles.push_back(join_segments(a, b));
  }
  ch.cycles.push_back(loop_cycle(segs[loops[order.back()][0]]));
  ch.links = order;
  fill_pure(ch.cycles, ch.pure);
}

}  // namespace

std::vector<int> ChainForm::lengths() const {
  std::vector<int> out;
  for (const Cycle& c : cycles) out.push_back(static_cast<int>(c.size()));
  return out;
}

EdgeSet edges_of_cycles(int n, const std::vector<Cycle>& cycles) {
  EdgeSet e(n);
  for (const Cycle& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) e.add(c[i], c[(i + 1) % c.size()]);
  return e;
}

bool cycle_in_edges(const EdgeSet& e, const Cycle& c) {
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!e.has(c[i], c[(i + 1) % c.size()])) return false;
  return true;
}

int shared_vertices(const Cycle& a, const Cycle& b) {
  std::set<Vertex> s(a.begin(), a.end());
  int n = 0;
  for (Vertex x : b) n += static_cast<int>(s.count(x));
  return n;
}

std::vector<Component> leave_components(const HoledGraph& g, const EdgeSet& leave) {
  std::vector<Component> out;
  std::vector<char> seen(leave.order(), 0);
  for (Vertex s = 0; s < leave.order(); ++s) {
    if (seen[s] || leave.degree(s) == 0) continue;
    if (leave.degree(s) % 2) fail(ErrorKind::MalformedLeave, "leave has a vertex of odd degree");
    Component comp;
    std::vector<Vertex> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      comp.vertices.push_back(x);
      for (Vertex y : leave.neighbours(x)) {
        if (leave.degree(y) % 2) fail(ErrorKind::MalformedLeave, "leave has a vertex of odd degree");
        if (!seen[y]) {
          seen[y] = 1;
          stack.push_back(y);
        }
        if (x < y) {
          ++comp.edges;
          if (g.is_pure(x, y)) ++comp.pure;
        }
      }
    }
    std::sort(comp.vertices.begin(), comp.vertices.end());
    analyse(g, leave, comp);
    out.push_back(std::move(comp));
  }
  return out;
}

LeaveShape classify_leave(const ReducedLeave& l, const HoledGraph& g) {
  LeaveShape sh;
  for (Vertex x : l.vertices) ++sh.degree_profile[l.edges.degree(x)];
  sh.components = leave_components(g, l.edges);
  if (sh.components.empty()) return sh;
  bool all_cycles = true;
  for (const Component& c : sh.components) all_cycles = all_cycles && c.kind == ComponentKind::Cycle;
  if (all_cycles) {
    sh.tag = ShapeTag::CycleUnion;
    for (const Component& c : sh.components) sh.cycles.push_back(c.cycle);
    return sh;
  }
  sh.tag = ShapeTag::Other;
  if (sh.components.size() != 1) return sh;
  const Component& c = sh.components[0];
  if (c.kind == ComponentKind::Chain) {
    sh.chain = c.chain;
    sh.tag = c.chain.size() == 2 ? ShapeTag::TwoChain : ShapeTag::Chain;
  } else if (c.kind == ComponentKind::Ring) {
    sh.ring = c.ring;
    sh.tag = ShapeTag::Ring;
  }
  return sh;
}

LeaveShape classify_leave(const CyclePacking& p) { return classify_leave(reduced_leave(p), p.host); }

std::optional<std::pair<Cycle, Cycle>> split_two_cycles(const EdgeSet& leave, int m1, int m2) {
  if (leave.size() != m1 + m2) return std::nullopt;
  std::vector<Vertex> sup = leave.support();
  if (sup.empty()) return std::nullopt;
  Vertex s = *std::min_element(sup.begin(), sup.end(), [&](Vertex a, Vertex b) { return leave.degree(a) < leave.degree(b); });
  long long budget = 4'000'000;

  auto remainder_is_cycle = [&](const Cycle& c, int len) -> std::optional<Cycle> {
    EdgeSet r = leave;
    for (std::size_t i = 0; i < c.size(); ++i) r.remove(c[i], c[(i + 1) % c.size()]);
    if (r.size() != len) return std::nullopt;
    std::vector<Vertex> rs = r.support();
    if (static_cast<int>(rs.size()) != len) return std::nullopt;
    for (Vertex x : rs)
      if (r.degree(x) != 2) return std::nullopt;
    Cycle out;
    Vertex prev = -1, cur = rs[0];
    do {
      out.push_back(cur);
      auto nb = r.neighbours(cur);
      Vertex nx = (nb[0] == prev) ? nb[1] : nb[0];
      prev = cur;
      cur = nx;
    } while (cur != rs[0] && static_cast<int>(out.size()) <= len);
    if (static_cast<int>(out.size()) != len) return std::nullopt;
    return out;
  };

  for (auto [first, second] : {std::pair{m1, m2}, std::pair{m2, m1}}) {
    Cycle path{s};
    std::vector<char> on(leave.order(), 0);
    on[s] = 1;
    std::optional<std::pair<Cycle, Cycle>> found;
    std::function<void()> dfs = [&]() {
      if (found || --budget < 0) return;
      Vertex x = path.back();
      if (static_cast<int>(path.size()) == first) {
        if (leave.has(x, s)) {
          if (auto rest = remainder_is_cycle(path, second)) {
            if (first == m1)
              found = std::pair{path, *rest};
            else
              found = std::pair{*rest, path};
          }
        }
        return;
      }
      for (Vertex y : leave.neighbours(x)) {
        if (on[y]) continue;
        on[y] = 1;
        path.push_back(y);
        dfs();
        path.pop_back();
        on[y] = 0;
        if (found) return;
      }
    };
    dfs();
    if (found) return found;
    if (m1 == m2) break;
  }
  return std::nullopt;
}

}  // namespace holey
