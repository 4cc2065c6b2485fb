#include "instances.hpp"

#include <algorithm>
#include <set>

namespace holey::testing {

std::vector<Cycle> random_cycle_decomposition(const EdgeSet& e, Rng& rng) {
  EdgeSet rest = e;
  std::vector<Cycle> out;
  std::vector<int> at(rest.order(), -1);
  while (!rest.empty()) {
    std::vector<Vertex> sup = rest.support();
    Vertex cur = sup[rng() % sup.size()];
    std::vector<Vertex> walk{cur};
    at[cur] = 0;
    while (!walk.empty()) {
      std::vector<Vertex> nb = rest.neighbours(cur);
      if (nb.empty()) break;
      Vertex nx = nb[rng() % nb.size()];
      rest.remove(cur, nx);
      if (at[nx] >= 0) {
        Cycle c(walk.begin() + at[nx], walk.end());
        for (std::size_t i = 1; i < c.size(); ++i) at[c[i]] = -1;
        walk.resize(at[nx] + 1);
        out.push_back(std::move(c));
      } else {
        at[nx] = static_cast<int>(walk.size());
        walk.push_back(nx);
      }
      cur = nx;
    }
    for (Vertex x : walk) at[x] = -1;
  }
  return out;
}

CyclePacking packing_with_leave(const HoledGraph& g, const EdgeSet& leave, Rng& rng) {
  EdgeSet rest = g.edges();
  for (auto [x, y] : leave.edges()) rest.remove(x, y);
  return {g, random_cycle_decomposition(rest, rng)};
}

namespace {

// Side pattern of a cycle with the given length and pure count; true = hole.
std::optional<std::vector<bool>> side_pattern(int length, int pure, Rng& rng) {
  if (pure < 0 || pure > length || (length - pure) % 2) return std::nullopt;
  const int h = (length - pure) / 2;
  if (h == 0) return std::nullopt;
  std::vector<int> extra(h, 0);
  for (int i = 0; i < pure; ++i) ++extra[rng() % h];
  std::vector<bool> s;
  for (int b = 0; b < h; ++b) {
    s.push_back(true);
    s.push_back(false);
    for (int j = 0; j < extra[b]; ++j) s.push_back(false);
  }
  std::rotate(s.begin(), s.begin() + rng() % s.size(), s.end());
  return s;
}

}  // namespace

std::optional<std::vector<Cycle>> draw_cycles(const HoledGraph& g, const std::vector<CycleDraw>& draws,
                                              std::vector<Vertex> fresh_hole, std::vector<Vertex> fresh_out, Rng& rng) {
  std::vector<Cycle> out;
  for (const CycleDraw& d : draws) {
    std::optional<Cycle> got;
    for (int attempt = 0; attempt < 200 && !got; ++attempt) {
      auto pat = side_pattern(d.length, d.pure, rng);
      if (!pat) return std::nullopt;
      const int L = d.length;
      Cycle c(L, -1);
      bool ok = true;
      for (Vertex l : d.links) {
        std::vector<int> pos;
        for (int i = 0; i < L; ++i)
          if (c[i] < 0 && (*pat)[i] == g.in_hole(l)) pos.push_back(i);
        if (pos.empty()) {
          ok = false;
          break;
        }
        c[pos[rng() % pos.size()]] = l;
      }
      if (!ok) continue;
      std::size_t nh = 0, no = 0;
      for (int i = 0; i < L; ++i)
        if (c[i] < 0) ((*pat)[i] ? nh : no)++;
      if (nh > fresh_hole.size() || no > fresh_out.size()) return std::nullopt;
      for (int i = 0; i < L; ++i) {
        if (c[i] >= 0) continue;
        auto& pool = (*pat)[i] ? fresh_hole : fresh_out;
        c[i] = pool.back();
        pool.pop_back();
      }
      got = c;
    }
    if (!got) return std::nullopt;
    out.push_back(*got);
  }
  std::set<Edge> seen;
  for (const Cycle& c : out)
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Edge e = make_edge(c[i], c[(i + 1) % c.size()]);
      if (!g.has_edge(e.first, e.second) || !seen.insert(e).second) return std::nullopt;
    }
  return out;
}

std::optional<std::vector<Cycle>> draw_leave(const HoledGraph& g, const LeaveRequest& req, Rng& rng) {
  std::vector<Vertex> hole, outs;
  for (Vertex x = 0; x < g.v(); ++x) (g.in_hole(x) ? hole : outs).push_back(x);
  std::shuffle(hole.begin(), hole.end(), rng);
  std::shuffle(outs.begin(), outs.end(), rng);
  std::vector<Vertex> links;
  for (bool o : req.shared_outside) {
    auto& pool = o ? outs : hole;
    if (pool.empty()) return std::nullopt;
    links.push_back(pool.back());
    pool.pop_back();
  }
  std::vector<CycleDraw> draws(req.lengths.size());
  for (std::size_t i = 0; i < draws.size(); ++i) {
    draws[i].length = req.lengths[i];
    draws[i].pure = req.pure[i];
    if (i < req.shared.size())
      for (int id : req.shared[i]) draws[i].links.push_back(links[id]);
  }
  return draw_cycles(g, draws, hole, outs, rng);
}

EdgeSet edges_of(int n, const std::vector<Cycle>& cycles) {
  EdgeSet e(n);
  for (const Cycle& c : cycles)
    for (std::size_t i = 0; i < c.size(); ++i) e.add(c[i], c[(i + 1) % c.size()]);
  return e;
}

std::optional<std::vector<Cycle>> draw_chain(const HoledGraph& g, const ChainRequest& req, Rng& rng) {
  const int s = static_cast<int>(req.lengths.size());
  LeaveRequest lr;
  lr.lengths = req.lengths;
  lr.pure = req.pure;
  lr.shared_outside = req.link_outside;
  lr.shared.resize(s);
  for (int i = 0; i < s; ++i) {
    if (req.ring) {
      lr.shared[i] = {(i + s - 1) % s, i};
    } else {
      if (i >= 1) lr.shared[i].push_back(i - 1);
      if (i <= s - 2) lr.shared[i].push_back(i);
    }
  }
  return draw_leave(g, lr, rng);
}

bool leave_is_two_cycles(const EdgeSet& leave, const Cycle& a, const Cycle& b, int m1, int m2) {
  if (static_cast<int>(a.size()) != m1 || static_cast<int>(b.size()) != m2) return false;
  EdgeSet u(leave.order());
  for (const Cycle* c : {&a, &b}) {
    std::set<Vertex> vs(c->begin(), c->end());
    if (vs.size() != c->size()) return false;
    for (std::size_t i = 0; i < c->size(); ++i) {
      const Vertex x = (*c)[i], y = (*c)[(i + 1) % c->size()];
      if (u.has(x, y)) return false;
      u.add(x, y);
    }
  }
  return u == leave;
}

}  // namespace holey::testing
