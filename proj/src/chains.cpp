#include "holey/chains.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "algorithms.hpp"

namespace holey {

GoodnessReport goodness(const ChainForm& ch, const HoledGraph& g) {
  GoodnessReport r;
  const int s = ch.size();
  if (s == 2) {
    r.good = true;
    return r;
  }
  if (s < 2 || static_cast<int>(ch.links.size()) != s - 1) return r;
  auto out = [&](Vertex x) { return !g.in_hole(x); };
  for (int i = 1; i + 1 < s; ++i)
    if (out(ch.links[i - 1]) == out(ch.links[i])) return r;
  if (pure_edges_in(g, ch.cycles[0]) >= 1 && out(ch.links[0]))
    r.witness = 0;
  else if (pure_edges_in(g, ch.cycles[s - 1]) >= 1 && out(ch.links[s - 2]))
    r.witness = s - 1;
  r.good = r.witness >= 0;
  return r;
}

GoodnessReport goodness(const RingForm& ring, const HoledGraph& g) {
  GoodnessReport r;
  const int s = ring.size();
  auto out = [&](Vertex x) { return !g.in_hole(x); };
  if (s == 2) {
    if (ring.links.size() != 2) return r;
    r.good = out(ring.links[0]) != out(ring.links[1]);
    return r;
  }
  if (s < 3 || static_cast<int>(ring.links.size()) != s) return r;
  int both_out = 0;
  for (int i = 0; i < s; ++i) {
    const Vertex a = ring.links[(i + s - 1) % s], b = ring.links[i];
    if (out(a) && out(b)) {
      ++both_out;
      if (s % 2 && pure_edges_in(g, ring.cycles[i]) >= 1) r.witness = i;
    } else if (!out(a) && !out(b)) {
      return r;
    }
  }
  if (s % 2 == 0)
    r.good = both_out == 0;
  else
    r.good = both_out == 1 && r.witness >= 0;
  if (!r.good) r.witness = -1;
  return r;
}

IsolatedTwin find_isolated_twin(const ReducedLeave& l, const HoledGraph& g, Side side, IsolateRule rule) {
  if (l.pure_edges != 2) fail(ErrorKind::HypothesisViolation, "leave must contain exactly two pure edges");
  for (Vertex x : l.vertices)
    if (l.degree[x] % 2) fail(ErrorKind::HypothesisViolation, "leave degrees must be even");
  const long long size = l.edges.size();
  const int U = g.u(), V = g.v();
  auto deg = [&](Vertex x) { return l.degree[x]; };
  auto side_ok = [&](Vertex x, Side s) {
    return s == Side::Either || (s == Side::Hole) == g.in_hole(x);
  };
  auto isolated_on = [&](bool hole) -> Vertex {
    for (Vertex y = 0; y < V; ++y)
      if (g.in_hole(y) == hole && deg(y) == 0) return y;
    return -1;
  };
  auto excess = [&](Side s) {
    int d4 = 0, d6 = 0;
    for (Vertex x : l.vertices) {
      if (!side_ok(x, s)) continue;
      if (deg(x) == 4) ++d4;
      if (deg(x) >= 6) ++d6;
    }
    return d4 >= 2 || d6 >= 1;
  };
  const long long bound = 2LL * std::min(U + 2, V - U);

  IsolatedTwin out;
  switch (rule) {
    case IsolateRule::HoleDegree4: {
      if (size > 2LL * (U + 1)) fail(ErrorKind::HypothesisViolation, "leave too large for a hole isolate");
      for (Vertex x : l.vertices)
        if (g.in_hole(x) && deg(x) >= 4) {
          out.x = x;
          break;
        }
      if (out.x < 0) fail(ErrorKind::HypothesisViolation, "no hole vertex of degree at least 4");
      out.y = isolated_on(true);
      break;
    }
    case IsolateRule::SideExcess: {
      if (size > bound) fail(ErrorKind::HypothesisViolation, "leave too large for an isolate");
      Side s = side;
      if (s == Side::Either) s = excess(Side::Hole) ? Side::Hole : Side::Outside;
      if (!excess(s)) fail(ErrorKind::HypothesisViolation, "side lacks two degree-4 vertices or a degree-6 vertex");
      for (Vertex x : l.vertices)
        if (side_ok(x, s) && deg(x) >= 4) {
          out.x = x;
          break;
        }
      out.y = isolated_on(s == Side::Hole);
      break;
    }
    case IsolateRule::AnyExcess: {
      if (size > bound) fail(ErrorKind::HypothesisViolation, "leave too large for an isolate");
      if (!excess(Side::Either)) fail(ErrorKind::HypothesisViolation, "leave lacks two degree-4 vertices or a degree-6 vertex");
      for (Vertex x : l.vertices) {
        if (deg(x) < 4 || !side_ok(x, side)) continue;
        const Vertex y = isolated_on(g.in_hole(x));
        if (y >= 0) {
          out.x = x;
          out.y = y;
          break;
        }
      }
      break;
    }
  }
  if (out.y < 0) fail(ErrorKind::InternalInvariantViolation, "no isolated twin although the counting bound holds");
  return out;
}

namespace detail {
namespace {

Path arc(const Cycle& c, Vertex a, Vertex b, bool forward) {
  Cycle r = rotate_to(c, a);
  if (!forward) r = reversed_from_start(r);
  Path out;
  for (Vertex x : r) {
    out.push_back(x);
    if (x == b) return out;
  }
  broken("arc endpoint not on cycle");
}

struct Split {
  Path P, R;
};

int path_len(const Path& p) { return static_cast<int>(p.size()) - 1; }

// Every decomposition of the chain into two paths with common end vertices.
void for_each_path_split(const ChainForm& ch, const std::function<bool(const Split&)>& cb) {
  const int s = ch.size();
  const Cycle& A1 = ch.cycles[0];
  const Cycle& As = ch.cycles[s - 1];
  const Vertex l1 = ch.links[0], ls = ch.links[s - 2];
  for (Vertex a : A1) {
    if (a == l1) continue;
    for (Vertex b : As) {
      if (b == ls) continue;
      for (int mask = 0; mask < (1 << s); ++mask) {
        Split sp;
        auto append = [](Path& to, const Path& piece) { to.insert(to.end(), piece.begin() + (to.empty() ? 0 : 1), piece.end()); };
        for (int i = 0; i < s; ++i) {
          const Vertex from = i == 0 ? a : ch.links[i - 1];
          const Vertex to = i == s - 1 ? b : ch.links[i];
          const bool bit = (mask >> i) & 1;
          append(sp.P, arc(ch.cycles[i], from, to, bit));
          append(sp.R, arc(ch.cycles[i], from, to, !bit));
        }
        if (cb(sp)) return;
      }
    }
  }
}

Edge pure_edge_of(const HoledGraph& g, const Path& p) {
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (g.is_pure(p[i], p[i + 1])) return make_edge(p[i], p[i + 1]);
  return {-1, -1};
}

bool edge_on_cycle(const Cycle& c, Edge e) {
  for (std::size_t i = 0; i < c.size(); ++i)
    if (make_edge(c[i], c[(i + 1) % c.size()]) == e) return true;
  return false;
}

void check_split(const Work& w, const Split& sp, const char* step, bool ends_outside = true) {
  if (!path_in_edges(w.leave, sp.P) || !path_in_edges(w.leave, sp.R)) broken(std::string(step) + ": not a path of the leave");
  EdgeSet rest = minus_path(minus_path(w.leave, sp.P), sp.R);
  if (!rest.empty()) broken(std::string(step) + ": paths do not cover the leave");
  if (make_edge(sp.P.front(), sp.P.back()) != make_edge(sp.R.front(), sp.R.back()))
    broken(std::string(step) + ": paths have different end vertices");
  if (ends_outside && (!w.outside(sp.P.front()) || !w.outside(sp.P.back()))) broken(std::string(step) + ": path end in the hole");
  if (pure_edges_in_path(w.g, sp.P) != 1 || pure_edges_in_path(w.g, sp.R) != 1)
    broken(std::string(step) + ": each path must carry one pure edge");
}

Split with_rest(const Work& w, Path P, const char* step, bool ends_outside = true) {
  auto R = single_path(minus_path(w.leave, P));
  if (!R) broken(std::string(step) + ": complement is not a path");
  Split sp{std::move(P), std::move(*R)};
  if (sp.R.front() != sp.P.front()) std::reverse(sp.R.begin(), sp.R.end());
  check_split(w, sp, step, ends_outside);
  return sp;
}

// Shortest prefix [x_0..x_r] with no pure edge and deg(x_{r-1}) = deg(x_r) = 2.
int shortest_prefix(const Work& w, const Path& P) {
  const int p = path_len(P);
  for (int r = 1; r <= p - 1; ++r) {
    if (w.g.is_pure(P[r - 1], P[r])) return -1;
    if (r >= 2 && w.leave.degree(P[r - 1]) == 2 && w.leave.degree(P[r]) == 2) return r;
  }
  return -1;
}

// One path-shortening step; returns P' of length p - 2.
Path reduce_path_length(Work& w, Path P) {
  int r = shortest_prefix(w, P);
  {
    Path rev(P.rbegin(), P.rend());
    const int rr = shortest_prefix(w, rev);
    if (rr >= 0 && (r < 0 || rr < r)) {
      P = std::move(rev);
      r = rr;
    }
  }
  if (r < 0) broken("no reducible prefix on the long path");
  for (int guard = 0; guard <= path_len(P); ++guard) {
    if (r == 2) return Path(P.begin() + 2, P.end());
    if (w.leave.degree(P[r - 2]) != 4) broken("reduce-path: x_{r-2} should have degree 4");
    const Vertex t = w.sw(P[r], P[r - 2], P[r - 3], "reduce-path-length");
    if (t != P[r + 1]) {
      Path out(P.begin(), P.begin() + (r - 2));
      out.insert(out.end(), P.begin() + r, P.end());
      return out;
    }
    Path next(P.begin(), P.begin() + (r - 2));
    next.push_back(P[r]);
    next.push_back(P[r - 1]);
    next.push_back(P[r - 2]);
    next.insert(next.end(), P.begin() + (r + 1), P.end());
    P = std::move(next);
    const int nr = shortest_prefix(w, P);
    if (nr < 0 || nr > r - 1) broken("reduce-path: induction prefix missing");
    r = nr;
  }
  broken("reduce-path did not terminate");
}

void check_two_cycles_hypotheses(const Work& w, int m1, int m2) {
  const LeaveShape sh = w.shape();
  const ReducedLeave l = w.reduced();
  if (m1 % 2 == 0 || m2 % 2 == 0 || m1 < 3 || m2 < 3) fail(ErrorKind::HypothesisViolation, "m1 and m2 must be odd and >= 3");
  if (l.edges.size() != m1 + m2) fail(ErrorKind::HypothesisViolation, "leave size must be m1 + m2");
  if (l.pure_edges != 2) fail(ErrorKind::HypothesisViolation, "leave must contain exactly two pure edges");
  const int U = w.g.u(), V = w.g.v();
  if (m1 + m2 > 2 * std::min(U + 2, V - U)) fail(ErrorKind::HypothesisViolation, "m1 + m2 exceeds 2 min(|U|+2, |V|-|U|)");
  const bool has3 = m1 == 3 || m2 == 3;
  if (has3 && m1 + m2 > 2 * (U + 1)) fail(ErrorKind::HypothesisViolation, "m1 + m2 exceeds 2(|U|+1) with a 3-cycle requested");
  int s = 0;
  if (sh.tag == ShapeTag::TwoChain || sh.tag == ShapeTag::Chain) {
    s = sh.chain.size();
    if (!goodness(sh.chain, w.g).good) fail(ErrorKind::HypothesisViolation, "chain is not good");
    if (has3 && s == 2 && w.g.in_hole(sh.chain.links[0]))
      fail(ErrorKind::HypothesisViolation, "2-chain with link in the hole cannot yield a 3-cycle");
  } else if (sh.tag == ShapeTag::Ring) {
    s = sh.ring.size();
    if (!goodness(sh.ring, w.g).good) fail(ErrorKind::HypothesisViolation, "ring is not good");
  } else {
    fail(ErrorKind::HypothesisViolation, "leave is neither a chain nor a ring");
  }
  if (m1 < s || m2 < s) fail(ErrorKind::HypothesisViolation, "m1 and m2 must be at least s");
}

std::pair<Path, Path> two_paths_work(Work& w, int m1, int m2) {
  const LeaveShape sh0 = w.shape();
  if (sh0.tag != ShapeTag::Chain) fail(ErrorKind::HypothesisViolation, "leave must be an s-chain with s >= 3");
  const ChainForm& ch0 = sh0.chain;
  const int s = ch0.size();
  const GoodnessReport gr = goodness(ch0, w.g);
  if (!gr.good) fail(ErrorKind::HypothesisViolation, "chain is not good");
  if (w.leave.size() != m1 + m2 || w.leave_pure() != 2) fail(ErrorKind::HypothesisViolation, "need size m1 + m2 and two pure edges");
  if (m1 % 2 == 0 || m2 % 2 == 0 || m1 < s || m2 < s) fail(ErrorKind::HypothesisViolation, "m1, m2 must be odd and >= s");
  const int lo = std::min(m1, m2), hi = std::max(m1, m2);

  auto in_good_end = [&](const ChainForm& ch, const Path& P) {
    const Edge e = pure_edge_of(w.g, P);
    const int last = ch.size() - 1;
    return (edge_on_cycle(ch.cycles[0], e) && w.outside(ch.links[0])) ||
           (edge_on_cycle(ch.cycles[last], e) && w.outside(ch.links[last - 1]));
  };

  std::optional<Split> start;
  for_each_path_split(ch0, [&](const Split& sp) {
    if (!w.outside(sp.P.front()) || !w.outside(sp.P.back())) return false;
    if (pure_edges_in_path(w.g, sp.P) != 1 || pure_edges_in_path(w.g, sp.R) != 1) return false;
    if (lo >= s + 1 && path_len(sp.P) < path_len(sp.R)) return false;
    if (lo == s && !in_good_end(ch0, sp.P)) return false;
    start = sp;
    return true;
  });
  if (!start) broken("good chain admits no two-path decomposition");
  Split sp = *start;
  check_split(w, sp, "two-paths");

  for (int guard = 0; guard <= m1 + m2; ++guard) {
    const int p = path_len(sp.P), q = path_len(sp.R);
    if ((p == lo && q == hi) || (p == hi && q == lo)) {
      if (p == m1) return {sp.P, sp.R};
      return {sp.R, sp.P};
    }
    if (p < lo) broken("two-paths: long path shrank below m1");
    const LeaveShape sh = w.shape();
    if (sh.tag != ShapeTag::Chain || !goodness(sh.chain, w.g).good) broken("two-paths: chain lost goodness");
    bool case1 = true;
    for (const Cycle& c : sh.chain.cycles) {
      int k = 0;
      for (std::size_t i = 0; i + 1 < sp.P.size(); ++i) k += edge_on_cycle(c, make_edge(sp.P[i], sp.P[i + 1]));
      if (k > 2) case1 = false;
    }
    if (case1) {
      if (p != lo + 2) broken("two-paths case 1 with unexpected length");
      sp = with_rest(w, Path(sp.P.begin() + 1, sp.P.end() - 1), "two-paths trim", false);
      continue;
    }
    sp = with_rest(w, reduce_path_length(w, sp.P), "reduce-path-length");
  }
  broken("two-paths did not terminate");
}

}  // namespace

std::pair<Cycle, Cycle> split_chain_or_ring_work(Work& w, int m1, int m2) {
  check_two_cycles_hypotheses(w, m1, m2);
  const bool has3 = m1 == 3 || m2 == 3;
  for (int guard = 0; guard < 8 * (m1 + m2); ++guard) {
    const LeaveShape sh = w.shape();
    if (sh.tag == ShapeTag::TwoChain) return split_two_chain_work(w, m1);
    if (sh.tag == ShapeTag::Ring && sh.ring.size() == 2) {
      const IsolatedTwin it = find_isolated_twin(w.reduced(), w.g, has3 ? Side::Hole : Side::Either,
                                                 has3 ? IsolateRule::HoleDegree4 : IsolateRule::AnyExcess);
      const auto cand = raw_switch_candidates(w.leave, it.x, it.y);
      if (cand.empty()) broken("two-cycles 2-ring: no switch origin");
      w.sw(it.x, it.y, cand.front(), "two-cycles 2-ring");
      continue;
    }
    if (sh.tag == ShapeTag::Chain) {
      auto [P, R] = two_paths_work(w, m1, m2);
      const Vertex t = w.sw(P.front(), P.back(), P[1], "two-cycles chain");
      if (t != P[P.size() - 2]) {
        auto two = split_two_cycles(w.leave, m1, m2);
        if (!two) broken("two-cycles: leave is not an m1-cycle plus an m2-cycle");
        return *two;
      }
      continue;
    }
    if (sh.tag == ShapeTag::Ring) {
      const RingForm& ring = sh.ring;
      const int s = ring.size();
      const GoodnessReport gr = goodness(ring, w.g);
      if (!gr.good) broken("two-cycles: ring lost goodness");
      int ai = gr.witness;
      if (s % 2 == 0)
        for (int i = 0; i < s && ai < 0; ++i)
          if (pure_edges_in(w.g, ring.cycles[i]) >= 1) ai = i;
      if (ai < 0) broken("two-cycles: no ring cycle with a pure edge");
      const Vertex la = ring.links[(ai + s - 1) % s], lb = ring.links[ai];
      Vertex x = -1;
      if (s % 2)
        x = la;
      else
        x = w.g.in_hole(la) ? la : lb;
      const Side side = w.g.in_hole(x) ? Side::Hole : Side::Outside;
      const IsolatedTwin it = find_isolated_twin(w.reduced(), w.g, side, IsolateRule::SideExcess);
      const Cycle& A = ring.cycles[ai];
      const Cycle rot = rotate_to(A, x);
      w.sw(x, it.y, rot[1], "two-cycles ring");
      continue;
    }
    broken("two-cycles: leave left the chain/ring family");
  }
  broken("two-cycles did not terminate");
}

}  // namespace detail

PathSplit rebalance_paths(const CyclePacking& p, int m1, int m2, SwitchTrace* trace) {
  detail::Work w(p, trace);
  auto [a, b] = detail::two_paths_work(w, m1, m2);
  return {w.packing(), std::move(a), std::move(b)};
}

SurgeryResult split_chain_or_ring(const CyclePacking& p, int m1, int m2, SwitchTrace* trace) {
  detail::Work w(p, trace);
  auto [a, b] = detail::split_chain_or_ring_work(w, m1, m2);
  SurgeryResult out;
  out.packing = w.packing();
  out.split = true;
  out.first = std::move(a);
  out.second = std::move(b);
  return out;
}

}  // namespace holey
