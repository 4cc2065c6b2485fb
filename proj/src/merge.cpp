#include "holey/merge.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "algorithms.hpp"
#include "holey/chains.hpp"

namespace holey {
namespace detail {
namespace {

struct ChainView {
  int k = 0;        // number of components
  int h = -1;       // index of the chain component
  int pure_in_h = 0;
  std::vector<Component> comps;
};

ChainView chain_view(const Work& w) {
  ChainView v;
  v.comps = leave_components(w.g, w.leave);
  v.k = static_cast<int>(v.comps.size());
  for (int i = 0; i < v.k; ++i) {
    if (v.comps[i].kind == ComponentKind::Cycle) continue;
    if (v.comps[i].kind != ComponentKind::Chain || v.h >= 0) {
      v.h = -2;
      return v;
    }
    v.h = i;
    v.pure_in_h = v.comps[i].pure;
  }
  return v;
}

Vertex first_on_side(const HoledGraph& g, const Cycle& c, bool hole, Vertex avoid = -1) {
  Cycle sorted = c;
  std::sort(sorted.begin(), sorted.end());
  for (Vertex x : sorted)
    if (g.in_hole(x) == hole && x != avoid) return x;
  return -1;
}

Vertex cycle_neighbour(const Cycle& c, Vertex x) {
  const auto it = std::find(c.begin(), c.end(), x);
  if (it == c.end()) broken("vertex not on the expected cycle");
  const std::size_t i = static_cast<std::size_t>(it - c.begin());
  return std::min(c[(i + 1) % c.size()], c[(i + c.size() - 1) % c.size()]);
}

// Link vertex of an end cycle of a chain.
Vertex end_link(const ChainForm& ch, int end) { return end == 0 ? ch.links.front() : ch.links.back(); }

void check_resolve_hypotheses(const Work& w, int m1, int m2) {
  const ReducedLeave l = w.reduced();
  if (m1 % 2 == 0 || m2 % 2 == 0 || m1 < 3 || m2 < 3) fail(ErrorKind::HypothesisViolation, "m1 and m2 must be odd and >= 3");
  if (l.edges.size() != m1 + m2) fail(ErrorKind::HypothesisViolation, "leave size must be m1 + m2");
  if (l.pure_edges != 2) fail(ErrorKind::HypothesisViolation, "leave must contain exactly two pure edges");
  const int U = w.g.u(), V = w.g.v();
  if (m1 + m2 > 2 * std::min(U + 2, V - U)) fail(ErrorKind::HypothesisViolation, "m1 + m2 exceeds 2 min(|U|+2, |V|-|U|)");
  const bool has3 = m1 == 3 || m2 == 3;
  if (has3 && m1 + m2 > 2 * (U + 1)) fail(ErrorKind::HypothesisViolation, "m1 + m2 exceeds 2(|U|+1) with a 3-cycle requested");
  const ChainView v = chain_view(w);
  if (v.h < 0) fail(ErrorKind::HypothesisViolation, "leave must be cycles plus exactly one chain");
  const ChainForm& ch = v.comps[v.h].chain;
  if (!goodness(ch, w.g).good) fail(ErrorKind::HypothesisViolation, "chain component is not good");
  const int t = ch.size();
  if (m1 < v.k + t - 1 || m2 < v.k + t - 1) fail(ErrorKind::HypothesisViolation, "m1 and m2 must be at least k + t - 1");
  if (has3 && t == 2 && w.g.in_hole(ch.links[0]))
    fail(ErrorKind::HypothesisViolation, "2-chain with link in the hole cannot yield a 3-cycle");
}

}  // namespace

std::pair<Cycle, Cycle> resolve_to_good_chain_work(Work& w, int m1, int m2) {
  check_resolve_hypotheses(w, m1, m2);
  const bool has3 = m1 == 3 || m2 == 3;
  for (int guard = 0; guard < 16 * (m1 + m2); ++guard) {
    const ChainView v = chain_view(w);
    if (v.h < 0) broken("merge: leave is no longer cycles plus one chain");
    const ChainForm& H = v.comps[v.h].chain;
    const int t = H.size();
    if (!goodness(H, w.g).good) broken("merge: chain component lost goodness");
    if (v.k == 1) {
      if (has3 && t == 2 && w.g.in_hole(H.links[0])) broken("merge: 2-chain link fell into the hole");
      return split_chain_or_ring_work(w, m1, m2);
    }

    int ci = -1;
    for (int i = 0; i < v.k && ci < 0; ++i)
      if (i != v.h && (v.pure_in_h >= 2 || v.comps[i].pure >= 1)) ci = i;
    if (ci < 0) broken("merge: no cycle component with a pure edge");
    const Cycle& C = v.comps[ci].cycle;

    int e1 = 0;
    if (t >= 3)
      e1 = goodness(H, w.g).witness;
    else if (H.pure[0] == 0 && H.pure[1] >= 1)
      e1 = 1;
    const int et = e1 == 0 ? t - 1 : 0;
    const Cycle& H1 = H.cycles[e1];
    const Cycle& Ht = H.cycles[et];
    const bool link_out = w.outside(end_link(H, e1));

    if (t >= 3 || (H.pure[e1] >= 1 && link_out)) {
      const bool hole = t % 2 == 0;
      const Vertex x = first_on_side(w.g, Ht, hole, end_link(H, et));
      const Vertex y = first_on_side(w.g, C, hole);
      if (x < 0 || y < 0) broken("merge case 1: no twin pair on the required side");
      w.sw(x, y, cycle_neighbour(Ht, x), "merge case 1");
      if (static_cast<int>(leave_components(w.g, w.leave).size()) != v.k - 1) broken("merge case 1: component count did not drop");
      continue;
    }

    if (v.pure_in_h <= 1) {
      const Vertex wv = first_on_side(w.g, C, false);
      const Vertex x = first_on_side(w.g, H1, false, end_link(H, e1));
      if (wv < 0 || x < 0) broken("merge case 2: no outside pair");
      const Vertex term = w.sw(wv, x, cycle_neighbour(H1, x), "merge case 2");
      if (contains(C, term)) continue;
      const ChainView v2 = chain_view(w);
      if (v2.h < 0 || v2.k != v.k - 1) broken("merge case 2: unexpected leave after the switch");
      const ChainForm& H2 = v2.comps[v2.h].chain;
      if (H2.size() != 3) broken("merge case 2: expected a 3-chain");
      if (goodness(H2, w.g).good) continue;
      if (!w.outside(H2.links[0]) || !w.outside(H2.links[1])) broken("merge case 2: bad 3-chain should have both links outside");
      const int f1 = H2.pure[0] >= 1 ? 0 : 2;
      const int f3 = 2 - f1;
      const Vertex y = end_link(H2, f3);
      const IsolatedTwin it = find_isolated_twin(w.reduced(), w.g, Side::Outside, IsolateRule::SideExcess);
      w.sw(y, it.y, cycle_neighbour(H2.cycles[f3], y), "merge case 2 repair");
      continue;
    }

    // t = 2, both pure edges in H, link in the hole.
    const Vertex x = H.links[0];
    const Vertex y = first_on_side(w.g, C, true);
    if (y < 0) broken("merge case 3: cycle has no hole vertex");
    const Cycle& H2c = H.cycles[1 - e1];
    w.sw(x, y, cycle_neighbour(H2c, x), "merge case 3");
  }
  broken("merge did not terminate");
}

int pick_apart_work(Work& w) {
  const ReducedLeave l0 = w.reduced();
  const int U = w.g.u(), V = w.g.v();
  if (l0.edges.size() > 2LL * std::min(U + 2, V - U)) fail(ErrorKind::HypothesisViolation, "leave exceeds 2 min(|U|+2, |V|-|U|)");
  if (l0.pure_edges != 2) fail(ErrorKind::HypothesisViolation, "leave must contain exactly two pure edges");
  int d = 0, top = 0;
  for (Vertex x : l0.vertices) {
    if (l0.degree[x] % 2) fail(ErrorKind::HypothesisViolation, "leave degrees must be even");
    d += l0.degree[x] - 2;
    top = std::max(top, l0.degree[x]);
  }
  if (top < 4) fail(ErrorKind::HypothesisViolation, "leave has no vertex of degree at least 4");
  d /= 2;
  for (int i = 0; i + 1 < d; ++i) {
    const IsolatedTwin it = find_isolated_twin(w.reduced(), w.g, Side::Either, IsolateRule::AnyExcess);
    w.sw(it.x, it.y, w.leave.neighbours(it.x).front(), "pick apart");
  }
  const ReducedLeave l = w.reduced();
  int fours = 0;
  for (Vertex x : l.vertices) {
    if (l.degree[x] == 4)
      ++fours;
    else if (l.degree[x] != 2)
      broken("pick apart left a vertex of degree " + std::to_string(l.degree[x]));
  }
  if (fours != 1) broken("pick apart should leave exactly one degree-4 vertex");
  return d - 1;
}

}  // namespace detail

int component_bound(const ReducedLeave& l) {
  int fours = 0;
  for (Vertex x : l.vertices) {
    if (l.degree[x] == 4)
      ++fours;
    else if (l.degree[x] != 2)
      fail(ErrorKind::HypothesisViolation, "component bound needs degrees 2 and one 4");
  }
  if (fours != 1) fail(ErrorKind::HypothesisViolation, "component bound needs exactly one degree-4 vertex");
  if (l.pure_edges > 2) fail(ErrorKind::HypothesisViolation, "component bound needs at most two pure edges");
  const long long e = l.edges.size();
  const long long q = e >= 6 ? (e - 6) / 4 : -((6 - e + 3) / 4);
  return static_cast<int>(q) + 1;
}

SurgeryResult resolve_to_good_chain(const CyclePacking& p, int m1, int m2, SwitchTrace* trace) {
  detail::Work w(p, trace);
  auto [a, b] = detail::resolve_to_good_chain_work(w, m1, m2);
  SurgeryResult out;
  out.packing = w.packing();
  out.split = true;
  out.first = std::move(a);
  out.second = std::move(b);
  return out;
}

CyclePacking pick_apart(const CyclePacking& p, SwitchTrace* trace, int* switches) {
  detail::Work w(p, trace);
  const int n = detail::pick_apart_work(w);
  if (switches) *switches = n;
  return w.packing();
}

CyclePacking JoinResult::decomposition() const {
  CyclePacking d = packing;
  d.cycles.push_back(first);
  d.cycles.push_back(second);
  return d;
}

namespace {

// Indices of a subset of `lengths` summing to m, or empty.
std::vector<int> subset_with_sum(const std::vector<int>& lengths, int m) {
  const int n = static_cast<int>(lengths.size());
  std::vector<std::vector<char>> can(n + 1, std::vector<char>(m + 1, 0));
  can[0][0] = 1;
  for (int i = 0; i < n; ++i)
    for (int s = 0; s <= m; ++s)
      if (can[i][s]) {
        can[i + 1][s] = 1;
        if (s + lengths[i] <= m) can[i + 1][s + lengths[i]] = 1;
      }
  if (!can[n][m]) return {};
  std::vector<int> pick;
  for (int i = n, s = m; i > 0; --i)
    if (!can[i - 1][s]) {
      pick.push_back(i - 1);
      s -= lengths[i - 1];
    }
  return pick;
}

}  // namespace

JoinResult join_to_two_m_cycles(const CyclePacking& p, int m, SwitchTrace* trace) {
  const HoledGraph& g = p.host;
  if (m % 2 == 0 || m < 7 || m > std::min(g.u() + 2, g.v() - g.u() - 1))
    fail(ErrorKind::HypothesisViolation, "need odd m with 7 <= m <= min(|U|+2, |V|-|U|-1)");
  detail::Work w(p, trace);
  {
    const ReducedLeave l = w.reduced();
    if (l.edges.size() != 2LL * m) fail(ErrorKind::HypothesisViolation, "leave size must be 2m");
    if (l.pure_edges != 2) fail(ErrorKind::HypothesisViolation, "leave must contain exactly two pure edges");
    for (Vertex x : l.vertices)
      if (l.degree[x] % 2) fail(ErrorKind::HypothesisViolation, "leave degrees must be even");
  }
  bool first_round = true;
  for (int guard = 0; guard < 4 * m; ++guard) {
    const ReducedLeave l = w.reduced();
    const bool flat = std::all_of(l.vertices.begin(), l.vertices.end(), [&](Vertex x) { return l.degree[x] == 2; });
    if (!flat) {
      detail::pick_apart_work(w);
      const ReducedLeave picked = w.reduced();
      const int k = static_cast<int>(leave_components(g, w.leave).size());
      if (k > component_bound(picked)) detail::broken("component bound violated after pick apart");
      auto [a, b] = detail::resolve_to_good_chain_work(w, m, m);
      return {w.packing(), std::move(a), std::move(b)};
    }
    std::vector<Cycle> cycles;
    for (const Component& c : leave_components(g, w.leave)) cycles.push_back(c.cycle);
    std::vector<int> lengths;
    for (const Cycle& c : cycles) lengths.push_back(static_cast<int>(c.size()));
    if (cycles.size() == 2 && lengths[0] == m && lengths[1] == m) return {w.packing(), cycles[0], cycles[1]};
    std::vector<int> ga = subset_with_sum(lengths, m);
    if (ga.empty()) {
      if (first_round) fail(ErrorKind::HypothesisViolation, "leave cycles do not split into two groups of total m");
      detail::broken("merging lost the two-group split");
    }
    std::vector<int> gb;
    for (int i = 0; i < static_cast<int>(cycles.size()); ++i)
      if (std::find(ga.begin(), ga.end(), i) == ga.end()) gb.push_back(i);
    if (gb.size() > ga.size()) std::swap(ga, gb);
    std::sort(ga.begin(), ga.end(), [&](int i, int j) { return lengths[i] != lengths[j] ? lengths[i] > lengths[j] : i < j; });
    const Vertex x = detail::first_on_side(g, cycles[ga[0]], false);
    const Vertex y = detail::first_on_side(g, cycles[ga[1]], false);
    const auto cand = raw_switch_candidates(w.leave, x, y);
    w.sw(x, y, cand.front(), "join merge");
    first_round = false;
  }
  detail::broken("join did not terminate");
}

}  // namespace holey
