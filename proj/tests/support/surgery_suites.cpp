#include "surgery_suites.hpp"

#include <algorithm>

#include "holey/chains.hpp"
#include "holey/merge.hpp"
#include "holey/surgery.hpp"

namespace holey::testing {

void SuiteStats::fail(const std::string& why) {
  ++failed;
  if (failures.size() < 5) failures.push_back(why);
}

namespace {

const HoledGraph kHosts[] = {HoledGraph(9, 25), HoledGraph(7, 17),  HoledGraph(11, 23),
                             HoledGraph(13, 27), HoledGraph(11, 29), HoledGraph(9, 21)};

int length_for(int pure, Rng& rng, int lo = 3, int spread = 6) {
  int len = lo + static_cast<int>(rng() % spread);
  if ((len - pure) % 2) ++len;
  return len;
}

std::vector<int> degrees(const EdgeSet& e) {
  std::vector<int> d;
  for (Vertex x = 0; x < e.order(); ++x)
    if (e.degree(x)) d.push_back(e.degree(x));
  return d;
}

// Checks the component bound whenever the leave has the profile it is stated for.
void check_bound(SuiteStats& st, const ReducedLeave& l) {
  int four = 0, two = 0;
  for (Vertex x : l.vertices) {
    four += l.degree[x] == 4;
    two += l.degree[x] == 2;
  }
  if (four != 1 || four + two != static_cast<int>(l.vertices.size()) || l.pure_edges > 2) return;
  ++st.bound_checked;
  if (components(l.edges) > component_bound(l)) {
    ++st.bound_violated;
    st.fail("component bound violated");
  }
}

std::string where(const char* what, int round) { return std::string(what) + " (round " + std::to_string(round) + ")"; }

// Parts of m: one odd part carrying the group's pure edge, the rest even and >= 4.
std::vector<int> random_group(int m, Rng& rng) {
  for (;;) {
    std::vector<int> parts;
    int left = m;
    while (left > 0) {
      if (left >= 3 && left % 2 == 1 && (rng() % 3 == 0 || left < 7)) {
        parts.push_back(left);
        left = 0;
        break;
      }
      const int e = 4 + 2 * static_cast<int>(rng() % 3);
      if (left - e < 3) break;
      parts.push_back(e);
      left -= e;
    }
    if (left == 0) {
      std::shuffle(parts.begin(), parts.end(), rng);
      return parts;
    }
  }
}

}  // namespace

int components(const EdgeSet& e) {
  std::vector<int> seen(e.order(), 0);
  int n = 0;
  for (Vertex s : e.support()) {
    if (seen[s]) continue;
    ++n;
    std::vector<Vertex> st{s};
    seen[s] = 1;
    while (!st.empty()) {
      Vertex x = st.back();
      st.pop_back();
      for (Vertex y : e.neighbours(x))
        if (!seen[y]) {
          seen[y] = 1;
          st.push_back(y);
        }
    }
  }
  return n;
}

std::optional<DrawnChain> draw_good(const HoledGraph& g, int s, bool ring, Rng& rng) {
  for (int attempt = 0; attempt < 400; ++attempt) {
    ChainRequest req;
    req.ring = ring;
    const int links = ring ? s : s - 1;
    for (int i = 0; i < links; ++i) req.link_outside.push_back(rng() % 2);
    req.pure.assign(s, 0);
    for (int k = 0; k < 2; ++k) ++req.pure[rng() % s];
    for (int i = 0; i < s; ++i) {
      int len = 3 + static_cast<int>(rng() % 6);
      if ((len - req.pure[i]) % 2) ++len;
      req.lengths.push_back(len);
    }
    auto cycles = draw_chain(g, req, rng);
    if (!cycles) continue;
    const EdgeSet leave = edges_of(g.v(), *cycles);
    int total = 0;
    for (const Cycle& c : *cycles) total += static_cast<int>(c.size());
    LeaveShape sh = classify_leave(reduced_leave_of(g, leave), g);
    bool good = false;
    if (!ring && (sh.tag == ShapeTag::Chain || sh.tag == ShapeTag::TwoChain)) good = goodness(sh.chain, g).good;
    if (ring && sh.tag == ShapeTag::Ring) good = goodness(sh.ring, g).good;
    if (!good) continue;
    return DrawnChain{packing_with_leave(g, leave, rng), total};
  }
  return std::nullopt;
}

SuiteStats run_split_two_chain(std::uint64_t seed, int target) {
  Rng rng(seed);
  SuiteStats st;
  const HoledGraph hosts[] = {HoledGraph(13, 29), HoledGraph(9, 25), HoledGraph(7, 21), HoledGraph(5, 27)};
  for (int round = 0; round < 8 * target && st.done < target; ++round) {
    const HoledGraph& g = hosts[round % 4];
    ChainRequest req;
    req.link_outside = {rng() % 3 != 0};
    req.pure = rng() % 2 ? std::vector<int>{1, 1} : std::vector<int>{0, 2};
    if (rng() % 2) std::swap(req.pure[0], req.pure[1]);
    for (int i = 0; i < 2; ++i) {
      int len = 3 + static_cast<int>(rng() % 12);
      if ((len - req.pure[i]) % 2) ++len;
      req.lengths.push_back(len);
    }
    auto cycles = draw_chain(g, req, rng);
    if (!cycles) continue;
    const int total = req.lengths[0] + req.lengths[1];
    std::vector<int> options;
    for (int m = 3; total - m >= 3; m += 2) {
      if ((m == 3 || total - m == 3) && !req.link_outside[0]) continue;
      options.push_back(m);
    }
    if (options.empty()) continue;
    const int m = options[rng() % options.size()];
    const CyclePacking p = packing_with_leave(g, edges_of(g.v(), *cycles), rng);
    check_bound(st, reduced_leave(p));
    try {
      const SurgeryResult r = split_two_chain(p, m);
      if (!is_valid_packing(r.packing) || !(lengths_of(r.packing.cycles) == lengths_of(p.cycles)))
        st.fail(where("not a repacking", round));
      else if (!leave_is_two_cycles(leave_of(r.packing), r.first, r.second, m, total - m))
        st.fail(where("leave is not the two requested cycles", round));
    } catch (const std::exception& e) {
      st.fail(where(e.what(), round));
    }
    ++st.done;
    ++st.tally[req.pure[0] == 1 ? "one pure edge per cycle" : "both pure edges in one cycle"];
  }
  return st;
}

SuiteStats run_split_chain_or_ring(std::uint64_t seed, int target) {
  Rng rng(seed);
  SuiteStats st;
  const HoledGraph hosts[] = {HoledGraph(13, 29), HoledGraph(9, 25), HoledGraph(7, 17), HoledGraph(11, 23)};
  for (int round = 0; round < 8 * target && st.done < target; ++round) {
    const HoledGraph& g = hosts[round % 4];
    const bool ring = (round / 4) % 2;
    const int s = 2 + static_cast<int>(rng() % 4);
    auto d = draw_good(g, s, ring, rng);
    if (!d) continue;
    if (d->total % 2 || d->total > 2 * std::min(g.u() + 2, g.v() - g.u())) continue;
    std::vector<std::pair<int, int>> splits;
    for (int m1 = std::max(3, s | 1); m1 <= d->total - 3; m1 += 2) {
      const int m2 = d->total - m1;
      if (m2 < s || m2 < 3) continue;
      if (m1 == 3 || m2 == 3) {
        if (d->total > 2 * (g.u() + 1)) continue;
        LeaveShape sh = classify_leave(d->packing);
        if (sh.tag == ShapeTag::TwoChain && g.in_hole(sh.chain.links[0])) continue;
      }
      splits.push_back({m1, m2});
    }
    if (splits.empty()) continue;
    auto [m1, m2] = splits[rng() % splits.size()];
    check_bound(st, reduced_leave(d->packing));
    try {
      const SurgeryResult r = split_chain_or_ring(d->packing, m1, m2);
      if (!is_valid_packing(r.packing) || !(lengths_of(r.packing.cycles) == lengths_of(d->packing.cycles)))
        st.fail(where("not a repacking", round));
      else if (!leave_is_two_cycles(leave_of(r.packing), r.first, r.second, m1, m2))
        st.fail(where("leave is not the two requested cycles", round));
    } catch (const std::exception& e) {
      st.fail(where(e.what(), round));
    }
    ++st.done;
    if (s >= 3) ++st.tally[ring ? "rings with s >= 3" : "chains with s >= 3"];
  }
  return st;
}

SuiteStats run_resolve_to_good_chain(std::uint64_t seed, int target) {
  Rng rng(seed);
  SuiteStats st;
  for (int round = 0; round < 8 * target && st.done < target; ++round) {
    const HoledGraph& g = kHosts[round % 6];
    const int t = 2 + static_cast<int>(rng() % 3);
    const int extra = 1 + static_cast<int>(rng() % 2);
    LeaveRequest req;
    req.pure.assign(t + extra, 0);
    for (int k = 0; k < 2; ++k) ++req.pure[rng() % (t + extra)];
    for (int i = 0; i < t + extra; ++i) req.lengths.push_back(length_for(req.pure[i], rng));
    for (int i = 0; i < t - 1; ++i) req.shared_outside.push_back(rng() % 2);
    req.shared.resize(t);
    for (int i = 0; i < t; ++i) {
      if (i >= 1) req.shared[i].push_back(i - 1);
      if (i <= t - 2) req.shared[i].push_back(i);
    }
    auto cycles = draw_leave(g, req, rng);
    if (!cycles) continue;
    const EdgeSet leave = edges_of(g.v(), *cycles);
    int total = 0;
    for (int len : req.lengths) total += len;
    if (total % 2 || total > 2 * std::min(g.u() + 2, g.v() - g.u())) continue;
    const LeaveShape sh = classify_leave(reduced_leave_of(g, leave), g);
    const Component* chain = nullptr;
    for (const Component& c : sh.components)
      if (c.kind == ComponentKind::Chain) chain = &c;
    if (!chain || !goodness(chain->chain, g).good) continue;
    const int k = static_cast<int>(sh.components.size());
    const int lo = std::max(3, k + t - 1);
    std::vector<int> options;
    for (int m1 = lo | 1; total - m1 >= lo; m1 += 2) {
      const int m2 = total - m1;
      if (m1 == 3 || m2 == 3) {
        if (total > 2 * (g.u() + 1)) continue;
        if (t == 2 && g.in_hole(chain->chain.links[0])) continue;
      }
      options.push_back(m1);
    }
    if (options.empty()) continue;
    const int m1 = options[rng() % options.size()], m2 = total - m1;
    const CyclePacking p = packing_with_leave(g, leave, rng);
    check_bound(st, reduced_leave(p));
    try {
      const SurgeryResult r = resolve_to_good_chain(p, m1, m2);
      if (!is_valid_packing(r.packing) || !(lengths_of(r.packing.cycles) == lengths_of(p.cycles)))
        st.fail(where("not a repacking", round));
      else if (!leave_is_two_cycles(leave_of(r.packing), r.first, r.second, m1, m2))
        st.fail(where("leave is not the two requested cycles", round));
    } catch (const std::exception& e) {
      st.fail(where(e.what(), round));
    }
    ++st.done;
    if (k >= 3) ++st.tally["k >= 3"];
    if (t == 2 && chain->pure == 2 && g.in_hole(chain->chain.links[0])) ++st.tally["two-chain, hole link, two pure"];
  }
  return st;
}

SuiteStats run_pick_apart(std::uint64_t seed, int target) {
  Rng rng(seed);
  SuiteStats st;
  for (int round = 0; round < 8 * target && st.done < target; ++round) {
    const HoledGraph& g = kHosts[round % 6];
    const int n = 2 + static_cast<int>(rng() % 3);
    const int shared = 1 + static_cast<int>(rng() % 3);
    LeaveRequest req;
    req.pure.assign(n, 0);
    for (int k = 0; k < 2; ++k) ++req.pure[rng() % n];
    for (int i = 0; i < n; ++i) req.lengths.push_back(length_for(req.pure[i], rng, 3, 5));
    for (int j = 0; j < shared; ++j) req.shared_outside.push_back(rng() % 2);
    req.shared.resize(n);
    for (int j = 0; j < shared; ++j)
      for (int i = 0; i < n; ++i)
        if (rng() % 2) req.shared[i].push_back(j);
    auto cycles = draw_leave(g, req, rng);
    if (!cycles) continue;
    const EdgeSet leave = edges_of(g.v(), *cycles);
    if (leave.size() > 2 * std::min(g.u() + 2, g.v() - g.u())) continue;
    const std::vector<int> deg = degrees(leave);
    const int top = *std::max_element(deg.begin(), deg.end());
    if (top < 4) continue;
    int d = 0;
    for (int x : deg) d += x - 2;
    d /= 2;
    const CyclePacking p = packing_with_leave(g, leave, rng);
    try {
      int switches = -1;
      const CyclePacking q = pick_apart(p, nullptr, &switches);
      const std::vector<int> after = degrees(leave_of(q));
      if (!is_valid_packing(q) || !(lengths_of(q.cycles) == lengths_of(p.cycles)))
        st.fail(where("not a repacking", round));
      else if (std::count(after.begin(), after.end(), 4) != 1 ||
               std::count(after.begin(), after.end(), 2) != static_cast<long>(after.size()) - 1)
        st.fail(where("degree profile is not one 4 and the rest 2", round));
      else if (switches != d - 1)
        st.fail(where("switch count differs from d - 1", round));
      check_bound(st, reduced_leave(q));
    } catch (const std::exception& e) {
      st.fail(where(e.what(), round));
    }
    ++st.done;
    if (top >= 6) ++st.tally["degree >= 6"];
  }
  return st;
}

SuiteStats run_join(std::uint64_t seed, int target) {
  Rng rng(seed);
  SuiteStats st;
  struct HostM {
    HoledGraph g;
    int m;
  };
  const HostM cases[] = {{HoledGraph(7, 17), 7},   {HoledGraph(9, 25), 9},   {HoledGraph(9, 25), 11},
                         {HoledGraph(11, 27), 11}, {HoledGraph(13, 29), 13}, {HoledGraph(7, 19), 9}};
  for (int round = 0; round < 8 * target && st.done < target; ++round) {
    const auto& [g, m] = cases[round % 6];
    LeaveRequest req;
    const std::vector<int> a = random_group(m, rng), b = random_group(m, rng);
    for (const auto* grp : {&a, &b})
      for (int len : *grp) {
        req.lengths.push_back(len);
        req.pure.push_back(len % 2);
      }
    const int n = static_cast<int>(req.lengths.size());
    req.shared.resize(n);
    if (rng() % 2) {
      const int shared = 1 + static_cast<int>(rng() % 2);
      for (int j = 0; j < shared; ++j) {
        req.shared_outside.push_back(rng() % 2);
        for (int i = 0; i < n; ++i)
          if (rng() % 3 == 0) req.shared[i].push_back(j);
      }
    }
    auto cycles = draw_leave(g, req, rng);
    if (!cycles) continue;
    const EdgeSet leave = edges_of(g.v(), *cycles);
    const std::vector<int> deg = degrees(leave);
    const bool flat = *std::max_element(deg.begin(), deg.end()) == 2;
    const CyclePacking p = packing_with_leave(g, leave, rng);
    try {
      if (!flat) check_bound(st, reduced_leave(pick_apart(p)));
      const JoinResult r = join_to_two_m_cycles(p, m);
      const CyclePacking d = r.decomposition();
      if (r.first.size() != static_cast<std::size_t>(m) || r.second.size() != static_cast<std::size_t>(m))
        st.fail(where("joined cycles have the wrong length", round));
      else if (!is_repacking(p, r.packing))
        st.fail(where("not a repacking", round));
      else if (!is_valid_packing(d) || !leave_of(d).empty())
        st.fail(where("packing plus the two cycles is not a decomposition", round));
    } catch (const std::exception& e) {
      st.fail(where(e.what(), round));
    }
    ++st.done;
    if (flat) ++st.tally["all degree 2"];
    if (flat && n >= 3) ++st.tally["needing a merge switch"];
  }
  return st;
}

}  // namespace holey::testing
