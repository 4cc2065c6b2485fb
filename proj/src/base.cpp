#include "holey/base.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "holey/admissible.hpp"
#include "holey/shapes.hpp"

namespace holey {

namespace {

[[noreturn]] void broken(const std::string& what) { fail(ErrorKind::InternalInvariantViolation, what); }

void check(bool cond, const char* what) {
  if (!cond) broken(what);
}

LengthList repeat(const LengthList& l, int times) {
  LengthList out;
  for (auto [len, c] : l.counts()) out.add(len, c * times);
  return out;
}

// Removes `times` copies of len; the list must hold them.
LengthList without(const LengthList& l, int len, int times) {
  check(l.count(len) >= times, "length list lacks the entries to remove");
  LengthList out;
  for (auto [L, c] : l.counts()) out.add(L, L == len ? c - times : c);
  return out;
}

// Everything the generic assembler needs beyond BaseParams.
struct Plan {
  LengthList d1;          // lengths for K_W - I
  int h_len = 0;          // length of each H_i
  int cp_len = 0;         // |C'|
  int cpp_len = 0;        // |C''|, 0 if absent
  bool cpp_path = false;  // Case 1: C'' carries the path z_1..z_{q''+1}
  int path_len = 0;       // q'' in Case 1
  int gap = 0;            // t/2 - 1 labels C'' must avoid
  int a3 = 0;             // triangles in the MixedCycles of C'
  int q_size = 0;         // |Q|
  bool h_triangles = true;  // m >= 11: H_i gives only triangles
  LengthList d2;          // bipartite list before the strip is removed
  int dagger = 0;         // |C_dagger|, 0 if absent
  int strip = 0;          // 4-cycles in the strip
};

Plan plan_for(const BaseParams& bp) {
  Plan pl;
  const int m = bp.m, w = bp.w, t = bp.t;
  if (m >= 11) {
    pl.h_len = w;
    pl.cp_len = bp.q1;
    pl.a3 = bp.q1;
    pl.strip = (w - bp.q1) / 2;
    if (bp.case_no == 1) {
      pl.d1.add(w, bp.p1);
      pl.d1.add(m, bp.x - 1);
      pl.d1.add(bp.q1);
      pl.cpp_len = m + bp.q2 - t;
      pl.d1.add(pl.cpp_len);
      pl.cpp_path = true;
      pl.path_len = bp.q2;
      pl.gap = t / 2 - 1;
      pl.dagger = 2 * bp.q2 + t;
      pl.d2.add(pl.dagger);
      pl.d2.add(bp.h);
      pl.d2 += repeat(r_list(m - 3), bp.k - 1);
      pl.d2 += r_list(m - bp.h - 3);
    } else {
      pl.d1.add(m, bp.x);
      pl.d1.add(w, bp.p1);
      pl.d1.add(bp.q1);
      pl.cpp_len = bp.q2;
      pl.d1.add(bp.q2);
      pl.dagger = 2 * bp.q2;
      pl.d2.add(pl.dagger);
      pl.d2 += repeat(r_list(m - 3), bp.k);
    }
  } else {
    pl.h_len = w / 2;
    pl.h_triangles = false;
    if (bp.case_no == 1) {
      pl.cp_len = bp.q3 + bp.q5;
      pl.a3 = bp.q3;
      pl.q_size = bp.q5;
      pl.strip = (w - bp.q3 - 2 * bp.q5) / 2;
      pl.d1.add(9, bp.x - 1);
      pl.d1.add(w / 2, bp.p1);
      pl.d1.add(pl.cp_len);
      pl.cpp_len = 9 + bp.q2 - t;
      pl.d1.add(pl.cpp_len);
      pl.cpp_path = true;
      pl.path_len = bp.q2;
      pl.gap = t / 2 - 1;
      pl.dagger = t + 2 * bp.q2;
      pl.d2.add(4, bp.p1 * w / 2 + bp.q5);
      pl.d2.add(6, w / 2 + bp.q3 + bp.q2);
      pl.d2.add(pl.dagger);
    } else {
      pl.cp_len = bp.q1;
      pl.a3 = 0;
      pl.q_size = bp.q1;
      pl.strip = w / 2 - bp.q1;
      pl.d1.add(9, bp.x);
      pl.d1.add(w / 2, bp.p1);
      pl.d1.add(bp.q1);
      pl.cpp_len = bp.q2;
      pl.d1.add(bp.q2);
      pl.dagger = 2 * bp.q2;
      pl.d2.add(4, bp.p1 * w / 2 + bp.q1);
      pl.d2.add(6, w / 2 + bp.q2);
      pl.d2.add(pl.dagger);
    }
  }
  return pl;
}

// Lengths from {4, 6, 8} with a >= 4 and b >= 6 even always decompose K_{a,b}.
bool small_even_list(const LengthList& l, int a, int b) {
  for (auto [len, c] : l.counts())
    if (len != 4 && len != 6 && len != 8) return false;
  return std::min(a, b) >= 4 && std::max(a, b) >= 6 && a % 2 == 0 && b % 2 == 0;
}

// Bipartite list conditions on K_{a,b}: largest at most three times the
// second largest, and the two largest bounded by the smaller side.
void check_bipartite_list(const LengthList& l, int a, int b) {
  check(l.sum() == static_cast<long long>(a) * b, "bipartite list does not sum to ab");
  if (small_even_list(l, a, b)) return;
  std::vector<int> s = l.sorted();
  if (s.size() < 2) return;
  const int top = s.back(), next = s[s.size() - 2];
  const int lo = std::min(a, b);
  check(top <= 3 * next, "bipartite list: largest exceeds three times the second");
  check(top + next <= (a == b ? 2 * lo : 2 * lo + 2), "bipartite list: two largest too long for the sides");
}

// Index of one cycle of the given length, skipping those already taken.
std::size_t take(const std::vector<Cycle>& cs, std::vector<char>& used, int len) {
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (!used[i] && static_cast<int>(cs[i].size()) == len) {
      used[i] = 1;
      return i;
    }
  broken("oracle output lacks a cycle of a requested length");
}

// Completes a partial map old -> new on 0..n-1 into a permutation.
std::vector<int> complete_permutation(std::vector<int> to) {
  const int n = static_cast<int>(to.size());
  std::vector<char> hit(n, 0);
  for (int x : to)
    if (x >= 0) {
      check(!hit[x], "relabelling is not injective");
      hit[x] = 1;
    }
  int next = 0;
  for (int& x : to) {
    if (x >= 0) continue;
    while (hit[next]) ++next;
    x = next;
    hit[next] = 1;
  }
  return to;
}

Cycle mapped(const Cycle& c, const std::vector<int>& f) {
  Cycle out;
  out.reserve(c.size());
  for (Vertex x : c) out.push_back(f[x]);
  return out;
}

BaseDecomposition assemble(const BaseParams& bp, const SolverConfig& cfg) {
  const int u = bp.u, w = bp.w, m = bp.m;
  const Plan pl = plan_for(bp);
  auto y = [&](int i) { return i - 1; };
  auto z = [&](int j) { return u + j - 1; };

  // D1 on W, relabelled so that C'' sits where D5 expects it.
  FactorDecomposition d1 = decompose_even_complete_minus_factor(w, pl.d1, cfg);
  std::vector<char> used(d1.cycles.size(), 0);
  std::vector<std::size_t> hs;
  for (int i = 0; i < bp.p1; ++i) hs.push_back(take(d1.cycles, used, pl.h_len));
  const std::size_t cp = take(d1.cycles, used, pl.cp_len);
  std::vector<int> perm(w, -1);
  std::size_t cpp = d1.cycles.size();
  if (pl.cpp_len > 0) {
    cpp = take(d1.cycles, used, pl.cpp_len);
    const Cycle& c = d1.cycles[cpp];
    const int L = static_cast<int>(c.size());
    if (pl.cpp_path) {
      check(L + pl.gap <= w, "no room to place C'' away from the reserved labels");
      for (int i = 0; i < L; ++i) perm[c[i]] = i <= pl.path_len ? i : i + pl.gap;
    } else {
      for (int i = 0; i < L; ++i) perm[c[i]] = i;
    }
  }
  perm = complete_permutation(perm);
  std::vector<int> to_w(w);
  for (int j = 0; j < w; ++j) to_w[j] = z(perm[j] + 1);

  std::vector<Cycle> out;
  std::vector<Cycle> hcycles;
  for (std::size_t i = 0; i < d1.cycles.size(); ++i) {
    Cycle c = mapped(d1.cycles[i], to_w);
    if (std::find(hs.begin(), hs.end(), i) != hs.end())
      hcycles.push_back(c);
    else if (i != cp && i != cpp)
      out.push_back(c);
  }
  const Cycle cprime = mapped(d1.cycles[cp], to_w);
  Cycle cdprime;
  if (cpp < d1.cycles.size()) cdprime = mapped(d1.cycles[cpp], to_w);
  std::vector<Edge> factor;
  for (auto [a, b] : d1.factor.edges) factor.push_back(make_edge(to_w[a], to_w[b]));

  if (pl.cpp_path) {
    for (int i = 0; i <= pl.path_len; ++i) check(cdprime[i] == z(i + 1), "C'' does not start with the path");
    for (int j = pl.path_len + 2; j <= pl.path_len + pl.gap + 1; ++j)
      check(std::find(cdprime.begin(), cdprime.end(), z(j)) == cdprime.end(), "C'' meets a reserved label");
  } else if (!cdprime.empty()) {
    for (int i = 0; i < pl.cpp_len; ++i) check(cdprime[i] == z(i + 1), "C'' is not (z_1,...,z_q'')");
  }

  const Vertex ya = y(u - 2 * bp.p1 - 2), yb = y(u - 2 * bp.p1 - 1);
  std::set<Vertex> in_cp(cprime.begin(), cprime.end());
  std::vector<Vertex> rest;
  for (int j = 1; j <= w; ++j)
    if (!in_cp.count(z(j))) rest.push_back(z(j));
  check(static_cast<int>(rest.size()) >= pl.q_size, "not enough vertices outside C' for Q");
  const std::vector<Vertex> qset(rest.begin(), rest.begin() + pl.q_size);
  const std::vector<Vertex> strip_set(rest.begin() + pl.q_size, rest.end());
  check(static_cast<int>(strip_set.size()) == 2 * pl.strip, "strip size disagrees with the table");

  // D2: the strip, then K_{A,W} for A = {y_1..y_{u-2p'-3}}.
  for (std::size_t i = 0; i + 1 < strip_set.size(); i += 2) out.push_back({ya, strip_set[i], yb, strip_set[i + 1]});
  const int asz = u - 2 * bp.p1 - 3;
  const LengthList d2 = without(pl.d2, 4, pl.strip);
  check_bipartite_list(d2, asz, w);
  check(pl.dagger / 2 <= asz && pl.dagger / 2 <= w, "C_dagger does not fit");
  std::vector<Cycle> bip = decompose_bipartite(asz, w, d2, cfg);
  std::vector<int> to_a(asz, -1), to_b(w, -1);
  std::size_t dag = bip.size();
  if (pl.dagger > 0) {
    std::vector<char> bused(bip.size(), 0);
    dag = take(bip, bused, pl.dagger);
    Cycle c = bip[dag];
    if (c[0] >= asz) std::rotate(c.begin(), c.begin() + 1, c.end());
    for (std::size_t i = 0; i < c.size(); i += 2) {
      to_a[c[i]] = static_cast<int>(i / 2);
      to_b[c[i + 1] - asz] = static_cast<int>(i / 2);
    }
  }
  to_a = complete_permutation(to_a);
  to_b = complete_permutation(to_b);
  std::vector<int> bmap(asz + w);
  for (int i = 0; i < asz; ++i) bmap[i] = y(to_a[i] + 1);
  for (int j = 0; j < w; ++j) bmap[asz + j] = z(to_b[j] + 1);
  for (std::size_t i = 0; i < bip.size(); ++i) {
    Cycle c = mapped(bip[i], bmap);
    if (i == dag) {
      Cycle want;
      for (int j = 1; j <= pl.dagger / 2; ++j) {
        want.push_back(y(j));
        want.push_back(z(j));
      }
      check(same_cycle(c, want), "C_dagger is not (y_1,z_1,...)");
    } else {
      out.push_back(c);
    }
  }

  // D3 and D4.
  for (Cycle& c : mixed_cycles(cprime, qset, ya, yb, pl.a3)) out.push_back(std::move(c));
  for (int i = 1; i <= bp.p1; ++i) {
    const Cycle& hc = hcycles[i - 1];
    std::vector<Vertex> nset;
    if (!pl.h_triangles) {
      std::set<Vertex> on(hc.begin(), hc.end());
      for (int j = 1; j <= w; ++j)
        if (!on.count(z(j))) nset.push_back(z(j));
    }
    const int a = pl.h_triangles ? static_cast<int>(hc.size()) : 0;
    for (Cycle& c : mixed_cycles(hc, nset, y(u - 2 * bp.p1 - 1 + i), y(u - bp.p1 - 1 + i), a))
      out.push_back(std::move(c));
  }
  for (auto [a, b] : factor) out.push_back({y(u), a, b});

  // D5.
  const int q2 = bp.q2;
  if (pl.cpp_path) {
    const int half = pl.dagger / 2;  // q'' + t/2
    for (int i = 1; i <= q2; ++i) out.push_back({z(i), y(i + 1), z(i + 1)});
    Cycle c;
    for (std::size_t i = q2; i < cdprime.size(); ++i) c.push_back(cdprime[i]);  // z_{q''+1} .. back
    c.push_back(z(1));
    // closes z_1 -> y_1 -> z_half -> y_half -> ... -> y_{q''+2} -> z_{q''+1}
    c.push_back(y(1));
    for (int j = half; j >= q2 + 2; --j) {
      c.push_back(z(j));
      c.push_back(y(j));
    }
    check(static_cast<int>(c.size()) == m, "D5 long cycle has the wrong length");
    out.push_back(c);
  } else if (q2 > 0) {
    for (int i = 1; i < q2; ++i) out.push_back({z(i), y(i + 1), z(i + 1)});
    out.push_back({z(q2), y(1), z(1)});
  }

  BaseDecomposition res{{HoledGraph(u, bp.v), std::move(out)}, bp};
  const CyclePacking& pk = res.packing;
  if (!is_valid_packing(pk) || !leave_of(pk).empty()) broken("base decomposition does not decompose K_v - K_u");
  if (lengths_of(pk.cycles) != base_lengths(bp)) broken("base decomposition has the wrong length multiset");

  // Pure edges of the short cycles: H_i, I, C', and the q''-path or C''.
  EdgeSet want(bp.v), got(bp.v);
  for (const Cycle& c : hcycles)
    for (auto [a, b] : cycle_edges(c)) want.add(a, b);
  for (auto [a, b] : factor) want.add(a, b);
  for (auto [a, b] : cycle_edges(cprime)) want.add(a, b);
  if (pl.cpp_path) {
    for (int i = 1; i <= q2; ++i) want.add(z(i), z(i + 1));
  } else if (!cdprime.empty()) {
    for (auto [a, b] : cycle_edges(cdprime)) want.add(a, b);
  }
  for (const Cycle& c : pk.cycles) {
    if (static_cast<int>(c.size()) >= m) continue;
    if (pure_edges_in(pk.host, c) > 1) broken("a short cycle carries two pure edges");
    for (auto [a, b] : cycle_edges(c))
      if (pk.host.is_pure(a, b)) got.add(a, b);
  }
  if (!(want == got)) broken("pure edges of the short cycles do not have the stated structure");
  return res;
}

int smallest_h(int m, int q2, int t) {
  std::vector<int> hs;
  for (int h = 4; h <= m - 7; h += 2) hs.push_back(h);
  hs.push_back(m - 3);
  for (int h : hs)
    if (3 * h >= 2 * q2 + t) return h;
  broken("no admissible h");
}

void check_range(int m, int u, int v) {
  const AdmissibilityReport r = admissible(m, u, v);
  if (!r.admissible()) fail(ErrorKind::PreconditionViolation, "(u, v) is not admissible");
  if (m == 9) {
    if (v - u < 10 || u < 9) fail(ErrorKind::PreconditionViolation, "m = 9 base needs v - u >= 10 and u >= 9");
    return;
  }
  if (m < 11 || m % 2 == 0) fail(ErrorKind::PreconditionViolation, "base decomposition needs odd m >= 11 or m = 9");
  if (v - u < m + 1) fail(ErrorKind::PreconditionViolation, "base decomposition needs v - u >= m + 1");
  if (m <= 15 && u < m) fail(ErrorKind::PreconditionViolation, "base decomposition needs u >= m for m <= 15");
  if (m >= 17 && u < m - 2) fail(ErrorKind::PreconditionViolation, "base decomposition needs u >= m - 2");
}

}  // namespace

LengthList r_list(int ell) {
  if (ell < 0 || ell % 2) fail(ErrorKind::PreconditionViolation, "R_ell needs even ell >= 0");
  LengthList out;
  if (ell == 0) return out;
  if (ell == 2) fail(ErrorKind::PreconditionViolation, "R_2 is undefined");
  if (ell % 4 == 0) {
    out.add(4, ell / 4);
  } else {
    out.add(4, (ell - 6) / 4);
    out.add(6);
  }
  return out;
}

std::vector<Cycle> mixed_cycles(const Cycle& c, const std::vector<Vertex>& n, Vertex y, Vertex z, int a) {
  const int k = static_cast<int>(c.size());
  if (k < 3 || a < 0 || a > k || a % 2) fail(ErrorKind::PreconditionViolation, "mixed cycles need k >= 3 and even a <= k");
  if (static_cast<int>(n.size()) != k - a) fail(ErrorKind::PreconditionViolation, "mixed cycles need |N| = k - a");
  std::set<Vertex> all(c.begin(), c.end());
  all.insert(n.begin(), n.end());
  all.insert(y);
  all.insert(z);
  if (static_cast<int>(all.size()) != 2 * k - a + 2)
    fail(ErrorKind::PreconditionViolation, "mixed cycles need y, z, V(C), N pairwise disjoint");
  // c_j is c[j-1] for j = 1..k and c_0 = c_k.
  auto at = [&](int j) { return c[(j + k - 1) % k]; };
  std::vector<Cycle> out;
  for (int j = 0; j < a; ++j) out.push_back({j % 2 ? z : y, at(j), at(j + 1)});
  for (int j = a; j < k; ++j) out.push_back({y, at(j), at(j + 1), z, n[j - a]});
  return out;
}

BaseParams base_params(int m, int u, int v) {
  check_range(m, u, v);
  BaseParams bp;
  bp.m = m;
  bp.u = u;
  bp.v = v;
  bp.w = v - u;
  const long long uw = static_cast<long long>(u) * bp.w;
  bp.k = static_cast<int>(uw / (m - 1));
  bp.t = static_cast<int>(uw % (m - 1));
  const long long edges = holed_edge_count(u, v);
  bp.x = static_cast<int>(edges / m) - bp.k;
  check(static_cast<long long>(m) * (bp.k + bp.x) == edges, "m(k + x) != C(v,2) - C(u,2)");
  check(bp.t % 2 == 0, "t is odd");
  bp.case_no = bp.t > 0 ? 1 : 2;
  const int w = bp.w, t = bp.t;

  if (m >= 11) {
    // k = w(p + 1/2) + q with 0 <= q < w.
    const int base = bp.k - w / 2;
    check(base >= 0, "k < w/2");
    bp.p = base / w;
    bp.q = base % w;
    check(2 * uw == (2LL * w * bp.p + w + 2 * bp.q) * (m - 1) + 2 * t, "uw = (w(p+1/2)+q)(m-1)+t fails");
    check(6LL * (u - 2 * bp.p) >= 4LL * m + (bp.p == 0 ? 22 : 34), "2(u-2p) bound fails");
    const int q = bp.q;
    if (bp.case_no == 1) {
      check(q > 0, "t > 0 forces q > 0");
      if (q <= 4) {
        bp.p1 = bp.p - 1, bp.q1 = w, bp.q2 = q;
      } else if (q % 2) {
        bp.p1 = bp.p, bp.q1 = q - 1, bp.q2 = 1;
      } else {
        bp.p1 = bp.p, bp.q1 = q - 2, bp.q2 = 2;
      }
      bp.h = smallest_h(m, bp.q2, t);
      const bool tight = 3 * bp.h <= 2 * bp.q2 + t + 5;
      check(tight || (2 * bp.q2 + t <= 6 && bp.h == 4) || (m == 11 && bp.q2 >= 3 && bp.h == 8),
            "h outside its expected window");
      const long long lhs = 3LL * (2 * bp.q2 + t + bp.h);
      check(lhs <= (bp.p1 == bp.p - 1 ? 4LL * m + 28 : 4LL * m + 9), "2q''+t+h bound fails");
    } else {
      check(q != 1, "t = 0 forces q != 1");
      if (q == 0 || q == 3 || q == 5) {
        bp.p1 = bp.p - 1, bp.q1 = w, bp.q2 = q;
      } else if (q == 2) {
        bp.p1 = bp.p - 1, bp.q1 = w - 2, bp.q2 = 4;
      } else if (q % 2 == 0) {
        bp.p1 = bp.p, bp.q1 = q, bp.q2 = 0;
      } else {
        bp.p1 = bp.p, bp.q1 = q - 3, bp.q2 = 3;
      }
      bp.h = 4;
    }
    check(bp.p1 >= 0, "p' < 0");
    check(2LL * w * bp.p1 + w + 2 * bp.q1 + 2 * bp.q2 == 2LL * bp.k, "w(p'+1/2)+q'+q'' != k");
  } else {
    // k = (p+1) w/2 + q with 0 <= q < w/2.
    const int half = w / 2;
    bp.p = bp.k / half - 1;
    bp.q = bp.k % half;
    check(bp.p >= 1, "p < 1");
    check(uw == 8LL * ((bp.p + 1) * half + bp.q) + t, "uw = 8((p+1)w/2+q)+t fails");
    check(u - 2 * bp.p - 3 >= 2 * bp.p + 2 && 2 * bp.p + 2 >= 4, "u-2p-3 >= 2p+2 >= 4 fails");
    const int q = bp.q;
    if (bp.case_no == 1) {
      check(q > 0, "t > 0 forces q > 0");
      if (q <= 3) {
        bp.p1 = bp.p - 1, bp.q3 = 2 * q - 2, bp.q5 = half + 1 - q, bp.q2 = 1;
      } else {
        bp.p1 = bp.p, bp.q3 = 0, bp.q5 = q - 1, bp.q2 = 1;
      }
      check((bp.p1 + 1) * half + bp.q3 + bp.q5 + bp.q2 == bp.k, "(p'+1)w/2+q'_3+q'_5+q'' != k");
      bp.k1 = bp.p1 * half + bp.q5;
    } else {
      if (q == 0) {
        bp.p1 = bp.p - 1, bp.q1 = half, bp.q2 = 0;
      } else if (q <= 2) {
        bp.p1 = bp.p - 1, bp.q1 = half - 3 + q, bp.q2 = 3;
      } else {
        bp.p1 = bp.p, bp.q1 = q, bp.q2 = 0;
      }
      check((bp.p1 + 1) * half + bp.q1 + bp.q2 == bp.k, "(p'+1)w/2+q'+q'' != k");
      bp.k1 = bp.p1 * half + bp.q1;
    }
    check(bp.p1 >= 0, "p' < 0");
  }
  return bp;
}

std::vector<LengthList> base_groups(const BaseParams& bp) {
  std::vector<LengthList> out;
  if (bp.m == 9) {
    for (int i = 0; i < bp.k - bp.k1; ++i) out.push_back({3, 6});
    for (int i = 0; i < bp.k1; ++i) out.push_back({4, 5});
    return out;
  }
  const LengthList plain = LengthList{3} + r_list(bp.m - 3);
  const int full = bp.case_no == 1 ? bp.k - 1 : bp.k;
  for (int i = 0; i < full; ++i) out.push_back(plain);
  if (bp.case_no == 1) out.push_back(LengthList{3, bp.h} + r_list(bp.m - bp.h - 3));
  return out;
}

LengthList base_lengths(const BaseParams& bp) {
  LengthList out;
  out.add(bp.m, bp.x);
  for (const LengthList& g : base_groups(bp)) out += g;
  return out;
}

BaseDecomposition base_decomposition(int m, int u, int v, const SolverConfig& cfg) {
  if (m == 9 || m < 11) fail(ErrorKind::PreconditionViolation, "base_decomposition needs m >= 11");
  return assemble(base_params(m, u, v), cfg);
}

BaseDecomposition base_decomposition_9(int u, int v, const SolverConfig& cfg) {
  return assemble(base_params(9, u, v), cfg);
}

}  // namespace holey
