#include "switch_contract.hpp"

#include <algorithm>
#include <set>

namespace holey::testing {

namespace {

using EdgeBag = std::set<std::pair<Vertex, Vertex>>;

std::pair<Vertex, Vertex> key(Vertex x, Vertex y) { return x < y ? std::pair{x, y} : std::pair{y, x}; }

EdgeBag path_edges(const std::vector<Vertex>& walk, bool closed) {
  EdgeBag e;
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) e.insert(key(walk[i], walk[i + 1]));
  if (closed && walk.size() > 2) e.insert(key(walk.back(), walk.front()));
  return e;
}

EdgeBag transpose(const EdgeBag& e, Vertex a, Vertex b) {
  EdgeBag out;
  for (auto [x, y] : e) {
    auto s = [&](Vertex z) { return z == a ? b : z == b ? a : z; };
    out.insert(key(s(x), s(y)));
  }
  return out;
}

EdgeBag join(EdgeBag x, const EdgeBag& y) {
  x.insert(y.begin(), y.end());
  return x;
}

EdgeBag leave_bag(const CyclePacking& p) {
  EdgeBag used;
  for (const Cycle& c : p.cycles) {
    const EdgeBag e = path_edges(c, true);
    used.insert(e.begin(), e.end());
  }
  EdgeBag l;
  const int u = p.host.u(), v = p.host.v();
  for (Vertex x = 0; x < v; ++x)
    for (Vertex y = std::max(x + 1, u); y < v; ++y)
      if (!used.count({x, y})) l.insert({x, y});
  return l;
}

int pure_count(int u, const Cycle& c) {
  int n = 0;
  for (std::size_t i = 0; i < c.size(); ++i) n += c[i] >= u && c[(i + 1) % c.size()] >= u;
  return n;
}

// The a..b path of c in stored order starting from a, and the other one.
std::pair<std::vector<Vertex>, std::vector<Vertex>> split_at(const Cycle& c, Vertex a, Vertex b) {
  const std::size_t k = c.size();
  const std::size_t ia = std::find(c.begin(), c.end(), a) - c.begin();
  std::vector<Vertex> fwd, back;
  for (std::size_t i = ia;; i = (i + 1) % k) {
    fwd.push_back(c[i]);
    if (c[i] == b) break;
  }
  for (std::size_t i = ia;; i = (i + k - 1) % k) {
    back.push_back(c[i]);
    if (c[i] == b) break;
  }
  return {fwd, back};
}

bool contains(const Cycle& c, Vertex x) { return std::find(c.begin(), c.end(), x) != c.end(); }

}  // namespace

CyclePacking random_packing(const HoledGraph& g, Rng& rng, int attempts) {
  const int v = g.v();
  EdgeSet free = g.edges();
  CyclePacking p{g, {}};
  std::vector<int> at(v, -1);
  for (int t = 0; t < attempts && !free.empty(); ++t) {
    std::vector<Vertex> sup = free.support();
    Vertex cur = sup[rng() % sup.size()];
    std::vector<Vertex> walk{cur};
    at[cur] = 0;
    while (true) {
      std::vector<Vertex> nb;
      for (Vertex y : free.neighbours(cur))
        if (walk.size() < 2 || y != walk[walk.size() - 2]) nb.push_back(y);
      if (nb.empty()) break;
      const Vertex nx = nb[rng() % nb.size()];
      if (at[nx] >= 0) {
        Cycle c(walk.begin() + at[nx], walk.end());
        for (std::size_t i = 0; i < c.size(); ++i) free.remove(c[i], c[(i + 1) % c.size()]);
        p.cycles.push_back(std::move(c));
        break;
      }
      at[nx] = static_cast<int>(walk.size());
      walk.push_back(nx);
      cur = nx;
    }
    for (Vertex x : walk) at[x] = -1;
  }
  return p;
}

SwitchInstance random_switch_instance(Rng& rng, int max_v) {
  while (true) {
    const int v = 4 + static_cast<int>(rng() % (max_v - 3));
    const int u = static_cast<int>(rng() % (v - 1));
    const HoledGraph g(u, v);
    CyclePacking p;
    if (u % 2 == 1 && v % 2 == 1 && rng() % 2) {
      // a full decomposition thinned out, so the leave is even
      p.host = g;
      for (Cycle& c : random_cycle_decomposition(g.edges(), rng))
        if (rng() % 4) p.cycles.push_back(std::move(c));
    } else {
      p = random_packing(g, rng, 1 + static_cast<int>(rng() % (2 * v)));
    }
    const EdgeBag l = leave_bag(p);
    for (int tries = 0; tries < 20; ++tries) {
      const Vertex a = static_cast<Vertex>(rng() % v), b = static_cast<Vertex>(rng() % v);
      if (a == b || (a < u) != (b < u)) continue;
      std::vector<Vertex> cand;
      for (Vertex x = 0; x < v; ++x)
        if (x != a && x != b && (l.count(key(a, x)) > 0) != (l.count(key(b, x)) > 0)) cand.push_back(x);
      if (cand.empty()) continue;
      return {p, a, b, cand[rng() % cand.size()]};
    }
  }
}

std::optional<std::string> switch_contract_violation(const CyclePacking& p, Vertex a, Vertex b, Vertex x,
                                                     const SwitchOutcome& out) {
  const CyclePacking& q = out.new_packing;
  const Vertex y = out.terminus;
  if (out.origin != x) return "origin not reported";
  if (y == x || y == a || y == b || y < 0 || y >= p.host.v()) return "bad terminus " + std::to_string(y);
  if (q.cycles.size() != p.cycles.size()) return "cycle count changed";

  const EdgeBag l0 = leave_bag(p), l1 = leave_bag(q);
  EdgeBag diff;
  std::set_symmetric_difference(l0.begin(), l0.end(), l1.begin(), l1.end(), std::inserter(diff, diff.end()));
  if (diff != EdgeBag{key(a, x), key(a, y), key(b, x), key(b, y)}) return "leave did not toggle exactly four edges";
  if ((l0.count(key(a, x)) > 0) == (l0.count(key(b, x)) > 0)) return "origin was not a candidate";

  std::set<std::size_t> reported;
  for (const TouchedCycle& t : out.touched) reported.insert(t.index);
  const int u = p.host.u();
  for (std::size_t i = 0; i < p.cycles.size(); ++i) {
    const Cycle& c = p.cycles[i];
    const Cycle& d = q.cycles[i];
    const std::string at = "slot " + std::to_string(i);
    if (d.size() != c.size()) return at + ": length changed";
    if (pure_count(u, d) != pure_count(u, c)) return at + ": pure count changed";
    std::set<Vertex> distinct(d.begin(), d.end());
    if (distinct.size() != d.size()) return at + ": not a cycle";
    const bool has_a = contains(c, a), has_b = contains(c, b);
    if (!has_a && !has_b) {
      if (d != c) return at + ": avoids a and b but changed";
      continue;
    }
    const EdgeBag ec = path_edges(c, true), ed = path_edges(d, true);
    std::vector<EdgeBag> options{ec, transpose(ec, a, b)};
    EdgeBag half_p, half_pd;
    if (has_a && has_b) {
      auto [pp, pd] = split_at(c, a, b);
      const EdgeBag ep = path_edges(pp, false), epd = path_edges(pd, false);
      half_p = join(transpose(ep, a, b), epd);
      half_pd = join(ep, transpose(epd, a, b));
      options.push_back(half_p);
      options.push_back(half_pd);
    }
    if (std::find(options.begin(), options.end(), ed) == options.end()) return at + ": matches no allowed option";
    if (ed != ec && !reported.count(i)) return at + ": changed but not reported";
    for (const TouchedCycle& t : out.touched) {
      if (t.index != i) continue;
      const EdgeBag& want = t.option == SwitchOption::Unchanged      ? ec
                            : t.option == SwitchOption::Transposed   ? options[1]
                            : t.option == SwitchOption::HalfTransposedP ? half_p
                                                                       : half_pd;
      if (want != ed) return at + ": reported option does not match";
    }
  }
  if (!is_repacking(p, q)) return "not a repacking";
  return std::nullopt;
}

}  // namespace holey::testing
