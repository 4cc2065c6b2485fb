#include "holey/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include "holey/base.hpp"
#include "holey/merge.hpp"
#include "holey/switching.hpp"

namespace holey {

namespace {

using Clock = std::chrono::steady_clock;

[[noreturn]] void broken(const std::string& what) { fail(ErrorKind::InternalInvariantViolation, what); }

std::string triple(int m, int u, int v) {
  return "(m, u, v) = (" + std::to_string(m) + ", " + std::to_string(u) + ", " + std::to_string(v) + ")";
}

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

void record(DispatchTrace* trace, Route r, int m, int u, int v, long long switches, Clock::time_point t0) {
  if (trace) trace->steps.push_back({r, m, u, v, switches, since(t0)});
}

bool amost_range(int m, int u, int v) {
  if (m < 9 || v - u < m + 1) return false;
  return m >= 17 ? u >= m - 2 : u >= m;
}

void check_verified(const Certificate& c, const char* who) {
  const VerificationReport r = verify(c);
  if (!r.ok()) broken(std::string(who) + " produced a certificate that fails verification: " + to_string(r.issues[0].kind));
}

// Smallest u* >= max(m, u+1) with (u, u*) admissible and v - u* >= m + 1.
int nesting_point(int m, int u, int v) {
  for (int s = std::max(m, u + 1); s + m + 1 <= v; ++s)
    if (admissible(m, u, s).admissible()) return s;
  return 0;
}

// Governing clause for an admissible triple outside what this build constructs.
std::string uncovered_clause(int m, int u, int v, int max_vertices) {
  const std::string base = triple(m, u, v) + ": ";
  if (m <= 7)
    return base + "m <= 7 is served only by the bounded solver, which is limited to " + std::to_string(max_vertices) +
           " vertices (unimplemented, not open)";
  const long long top = 1LL * (m - 1) * (m - 2) / 2;
  if (u >= m - 2 && u <= top && v <= u + m - 1)
    return base + "inside the open window nu_m(u) <= v <= u + m - 1 for u <= (m-1)(m-2)/2; "
                  "existence there is not settled in general";
  if (u > 3 && u < m - 2 && v <= nu(m, u) + m - 1)
    return base + "the seed case nu_m(u) <= v <= nu_m(u) + m - 1 that nesting needs is beyond the search range";
  return base + "no construction route applies within " + std::to_string(max_vertices) + " vertices (unimplemented)";
}

Certificate dispatch(int m, int u, int v, const SolverConfig& cfg, DispatchTrace* trace, int depth);

Certificate by_search(int m, int u, int v, const SolverConfig& cfg, DispatchTrace* trace, Route r) {
  const auto t0 = Clock::now();
  Certificate c = search_small(m, u, v, cfg);
  record(trace, r, m, u, v, 0, t0);
  return c;
}

Certificate dispatch(int m, int u, int v, const SolverConfig& cfg, DispatchTrace* trace, int depth) {
  if (depth > 8) broken("dispatch recursion too deep");
  if (amost_range(m, u, v)) {
    if (trace && depth == 0) trace->route = Route::AmostEverything;
    return amost_everything(m, u, v, cfg, trace);
  }
  if (m <= 7) {
    if (v > cfg.max_vertices) fail(ErrorKind::OutOfCoveredRange, uncovered_clause(m, u, v, cfg.max_vertices));
    if (trace && depth == 0) trace->route = Route::Solver;
    return by_search(m, u, v, cfg, trace, Route::Solver);
  }
  if (const int s = nesting_point(m, u, v); s > 0 && s <= cfg.max_vertices) {
    if (trace && depth == 0) trace->route = Route::Nesting;
    const auto t0 = Clock::now();
    if (!admissible(m, s, v).admissible()) broken("nesting produced an inadmissible outer pair");
    Certificate inner = dispatch(m, u, s, cfg, trace, depth + 1);
    Certificate outer = dispatch(m, s, v, cfg, trace, depth + 1);
    Certificate c = nest(inner, outer);
    record(trace, Route::Nesting, m, u, v, 0, t0);
    return c;
  }
  if (v > cfg.max_vertices) fail(ErrorKind::OutOfCoveredRange, uncovered_clause(m, u, v, cfg.max_vertices));
  if (trace && depth == 0) trace->route = Route::Search;
  try {
    return by_search(m, u, v, cfg, trace, Route::Search);
  } catch (const Error& e) {
    // Only m >= 17 has unsettled windows; for m <= 15 every admissible pair exists.
    if (e.kind() == ErrorKind::ResourceExhausted && m >= 17 && u <= 1LL * (m - 1) * (m - 2) / 2 && v <= u + m - 1)
      fail(ErrorKind::OutOfCoveredRange, uncovered_clause(m, u, v, cfg.max_vertices));
    throw;
  }
}

}  // namespace

std::string to_string(Route r) {
  switch (r) {
    case Route::AmostEverything: return "amost-everything";
    case Route::Nesting: return "nesting";
    case Route::Search: return "search";
    case Route::Solver: return "solver";
  }
  return "unknown";
}

Certificate construct(int m, int u, int v, const SolverConfig& cfg, DispatchTrace* trace) {
  const AdmissibilityReport rep = admissible(m, u, v);
  if (!rep.admissible()) {
    std::string why;
    if (!rep.n1) why += " N1 (u, v odd)";
    if (!rep.n2) why += " N2 (edge count divisible by m)";
    if (!rep.n3) why += " N3 (v >= u(m+1)/(m-1) + 1)";
    if (!rep.n4) why += " N4 ((v-m)(v-1) >= u(u-1))";
    fail(ErrorKind::NotAdmissible, triple(m, u, v) + " fails" + why);
  }
  if (trace) trace->seed = cfg.seed;
  Certificate c = dispatch(m, u, v, cfg, trace, 0);
  check_verified(c, "construct");
  if (static_cast<long long>(c.cycles.size()) * m != holed_edge_count(u, v)) broken("construct: wrong cycle count");
  return c;
}

Certificate amost_everything(int m, int u, int v, const SolverConfig& cfg, DispatchTrace* trace) {
  if (!amost_range(m, u, v)) fail(ErrorKind::PreconditionViolation, triple(m, u, v) + " is outside the base-and-join range");
  if (!admissible(m, u, v).admissible()) fail(ErrorKind::PreconditionViolation, triple(m, u, v) + " is not admissible");
  // Joining needs 7 <= m <= min(u+2, v-u-1); the range conditions give it.
  if (m < 7 || m > std::min(u + 2, v - u - 1)) broken("joining precondition fails inside its range");
  const auto t0 = Clock::now();

  const BaseDecomposition base = m == 9 ? base_decomposition_9(u, v, cfg) : base_decomposition(m, u, v, cfg);
  const HoledGraph& g = base.packing.host;
  const std::vector<LengthList> groups = base_groups(base.params);
  const int k = static_cast<int>(groups.size());
  if (k < 2) broken("fewer than two short-cycle groups");

  // Tags: -1 designated m-cycle of the base, -2 produced by joining, j >= 0 group j.
  std::vector<Cycle> cycles = base.packing.cycles;
  std::vector<int> tag(cycles.size(), -1);
  std::map<int, std::vector<std::size_t>> by_len;
  for (std::size_t i = 0; i < cycles.size(); ++i)
    if (static_cast<int>(cycles[i].size()) < m) by_len[static_cast<int>(cycles[i].size())].push_back(i);
  for (int j = 0; j < k; ++j)
    for (auto [len, cnt] : groups[j].counts())
      for (int c = 0; c < cnt; ++c) {
        auto& pool = by_len[len];
        if (pool.empty()) broken("base lacks a cycle for its groups");
        tag[pool.back()] = j;
        pool.pop_back();
      }
  for (auto& [len, pool] : by_len)
    if (!pool.empty()) broken("base has short cycles outside every group");

  SwitchTrace sw;
  auto join_without = [&](auto&& drop) {
    CyclePacking p{g, {}};
    std::vector<int> kept;
    for (std::size_t i = 0; i < cycles.size(); ++i)
      if (!drop(i)) {
        p.cycles.push_back(cycles[i]);
        kept.push_back(tag[i]);
      }
    JoinResult jr = join_to_two_m_cycles(p, m, &sw);
    cycles = std::move(jr.packing.cycles);
    tag = std::move(kept);
    for (Cycle* c : {&jr.first, &jr.second}) {
      if (static_cast<int>(c->size()) != m || pure_edges_in(g, *c) != 1) broken("joined cycle is not an m-cycle with one pure edge");
      cycles.push_back(std::move(*c));
      tag.push_back(-2);
    }
  };
  auto check_state = [&](int groups_left, int joined) {
    int seen_joined = 0;
    std::vector<int> per(k, 0);
    for (std::size_t i = 0; i < cycles.size(); ++i) {
      if (tag[i] == -1) continue;
      if (pure_edges_in(g, cycles[i]) > 1) broken("a non-designated cycle carries two pure edges");
      if (tag[i] == -2) {
        ++seen_joined;
      } else {
        if (tag[i] >= groups_left) broken("a consumed group reappeared");
        ++per[tag[i]];
      }
    }
    if (seen_joined != joined) broken("wrong number of joined m-cycles");
    for (int j = 0; j < groups_left; ++j)
      if (per[j] != groups[j].size()) broken("a group lost cycles");
  };

  join_without([&](std::size_t i) { return tag[i] == k - 2 || tag[i] == k - 1; });
  check_state(k - 2, 2);
  for (int i = 1; i <= k - 2; ++i) {
    std::size_t recent = cycles.size();
    for (std::size_t j = cycles.size(); j-- > 0;)
      if (tag[j] == -2) {
        recent = j;
        break;
      }
    if (recent == cycles.size()) broken("no joined m-cycle to recycle");
    const int group = k - i - 2;
    join_without([&](std::size_t j) { return j == recent || tag[j] == group; });
    check_state(group, i + 2);
  }

  Certificate c = make_certificate(m, u, v, std::move(cycles));
  check_verified(c, "amost_everything");
  record(trace, Route::AmostEverything, m, u, v, static_cast<long long>(sw.size()), t0);
  return c;
}

Certificate search_small(int m, int u, int v, const SolverConfig& cfg) {
  if (m % 2 == 0) fail(ErrorKind::Unsupported, "only odd cycle lengths are supported");
  if (!admissible(m, u, v).admissible()) fail(ErrorKind::PreconditionViolation, triple(m, u, v) + " is not admissible");
  if (v > cfg.max_vertices) fail(ErrorKind::PreconditionViolation, "search is limited to cfg.max_vertices vertices");
  const HoledGraph g(u, v);
  const EdgeSet e = g.edges();
  LengthList M;
  M.add(m, static_cast<int>(holed_edge_count(u, v) / m));
  const auto t0 = Clock::now();
  // Seeded restarts, each with a slice of the budget.
  const double slice = std::max(2.0, cfg.time_budget / 4);
  for (std::uint64_t attempt = 0;; ++attempt) {
    const double left = cfg.time_budget - since(t0);
    if (left <= 0) break;
    SolverConfig sc = cfg;
    sc.seed = cfg.seed + 0x9e3779b97f4a7c15ULL * attempt;
    sc.time_budget = std::min(left, slice);
    try {
      Certificate c = make_certificate(m, u, v, solve_list_decomposition(e, M, sc));
      check_verified(c, "search_small");
      return c;
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::ResourceExhausted) throw;
    }
  }
  fail(ErrorKind::ResourceExhausted, "search for " + triple(m, u, v) + " ran out of budget; raise the budget or change the seed");
}

Certificate nest(const Certificate& inner, const Certificate& outer) {
  if (inner.m != outer.m || inner.v != outer.u) fail(ErrorKind::InvalidParameters, "certificates do not nest");
  std::vector<Cycle> all = inner.cycles;
  all.insert(all.end(), outer.cycles.begin(), outer.cycles.end());
  Certificate c = make_certificate(inner.m, inner.u, outer.v, std::move(all));
  check_verified(c, "nest");
  return c;
}

Certificate embed_system(const Certificate& system, int v, const SolverConfig& cfg, DispatchTrace* trace) {
  if (system.u > 1) fail(ErrorKind::InvalidInputSystem, "input must be a system on K_n (hole of size 0 or 1)");
  if (!verify(system).ok()) fail(ErrorKind::InvalidInputSystem, "input does not verify as an m-cycle system");
  const int m = system.m, n = system.v;
  if (v <= n) fail(ErrorKind::InvalidParameters, "target order must exceed the system order");
  if (n == 1) return construct(m, 1, v, cfg, trace);
  Certificate outer = construct(m, n, v, cfg, trace);
  std::vector<Cycle> all = system.cycles;
  all.insert(all.end(), outer.cycles.begin(), outer.cycles.end());
  Certificate c = make_certificate(m, 1, v, std::move(all));
  check_verified(c, "embed_system");
  return c;
}

}  // namespace holey
