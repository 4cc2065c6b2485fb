#include "holey/oracles.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <random>
#include <string>

#include "holey/switching.hpp"

namespace holey {
namespace {

using Clock = std::chrono::steady_clock;

void remove_cycle(EdgeSet& e, const Cycle& c) {
  for (std::size_t i = 0; i < c.size(); ++i) e.remove(c[i], c[(i + 1) % c.size()]);
}

void add_cycle(EdgeSet& e, const Cycle& c) {
  for (std::size_t i = 0; i < c.size(); ++i) e.add(c[i], c[(i + 1) % c.size()]);
}

std::vector<int> bfs_distances(const EdgeSet& e, Vertex s) {
  std::vector<int> dist(e.order(), 1 << 20);
  std::vector<Vertex> queue{s};
  dist[s] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    Vertex x = queue[h];
    for (Vertex y : e.neighbours(x))
      if (dist[y] > dist[x] + 1) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
  }
  return dist;
}

// Depth-first enumeration of cycles of length L in e that start with the given prefix.
// The callback returns true to stop.
class CycleEnumerator {
 public:
  CycleEnumerator(const EdgeSet& e, int L, long long& nodes, long long budget)
      : e_(e), L_(L), nodes_(nodes), budget_(budget), on_(e.order(), 0) {}

  bool run(Path prefix, const std::function<bool(const Cycle&)>& cb) {
    path_ = std::move(prefix);
    for (Vertex x : path_) on_[x] = 1;
    dist_ = bfs_distances(e_, path_.front());
    cb_ = &cb;
    return step();
  }

  bool exhausted() const { return nodes_ > budget_; }

 private:
  bool step() {
    if (++nodes_ > budget_) return true;
    const Vertex cur = path_.back();
    const int len = static_cast<int>(path_.size());
    if (len == L_) return e_.has(cur, path_.front()) && (*cb_)(path_);
    for (Vertex y : e_.neighbours(cur)) {
      if (on_[y] || dist_[y] > L_ - len) continue;
      on_[y] = 1;
      path_.push_back(y);
      const bool stop = step();
      path_.pop_back();
      on_[y] = 0;
      if (stop) return true;
    }
    return false;
  }

  const EdgeSet& e_;
  int L_;
  long long& nodes_;
  long long budget_;
  std::vector<char> on_;
  std::vector<int> dist_;
  Path path_;
  const std::function<bool(const Cycle&)>* cb_ = nullptr;
};

class Exact {
 public:
  Exact(const EdgeSet& e, const std::vector<int>& lengths, long long budget) : e_(e), budget_(budget) {
    for (int L : lengths) {
      if (L >= static_cast<int>(cnt_.size())) cnt_.resize(L + 1, 0);
      ++cnt_[L];
    }
  }

  std::optional<std::vector<Cycle>> solve() {
    long long total = 0;
    for (std::size_t L = 0; L < cnt_.size(); ++L) total += static_cast<long long>(L) * cnt_[L];
    if (total != e_.size()) return std::nullopt;
    for (Vertex x = 0; x < e_.order(); ++x)
      if (e_.degree(x) % 2) return std::nullopt;
    if (rec()) return out_;
    return std::nullopt;
  }

 private:
  bool rec() {
    if (e_.empty()) return true;
    if (nodes_ > budget_) return false;
    Vertex v = -1;
    for (Vertex x = 0; x < e_.order(); ++x)
      if (e_.degree(x) > 0 && (v < 0 || e_.degree(x) < e_.degree(v))) v = x;
    const Vertex w = e_.neighbours(v).front();
    for (int L = static_cast<int>(cnt_.size()) - 1; L >= 3; --L) {
      if (cnt_[L] == 0) continue;
      long long& nodes = nodes_;
      CycleEnumerator en(e_, L, nodes, budget_);
      bool solved = false;
      std::function<bool(const Cycle&)> cb = [&](const Cycle& c) {
        Cycle copy = c;
        remove_cycle(e_, copy);
        --cnt_[L];
        out_.push_back(copy);
        if (rec()) {
          solved = true;
          return true;
        }
        out_.pop_back();
        ++cnt_[L];
        add_cycle(e_, copy);
        return nodes_ > budget_;
      };
      en.run({v, w}, cb);
      if (solved) return true;
      if (nodes_ > budget_) return false;
    }
    return false;
  }

  EdgeSet e_;
  std::vector<int> cnt_;
  long long nodes_ = 0;
  long long budget_;
  std::vector<Cycle> out_;
};

class Solver {
 public:
  Solver(const EdgeSet& g, const LengthList& M, const SolverConfig& cfg, SolverStats* stats)
      : g_(g), n_(g.order()), leave_(g), rng_(cfg.seed), stats_(stats) {
    pool_.assign(M.max() + 1, 0);
    for (auto [len, c] : M.counts()) pool_[len] = c;
    pool_sum_ = M.sum();
    deadline_ = Clock::now() + std::chrono::duration_cast<Clock::duration>(std::chrono::duration<double>(cfg.time_budget));
    std::vector<int> cls = twin_classes(g);
    twins_.resize(n_);
    for (Vertex x = 0; x < n_; ++x)
      for (Vertex y = 0; y < n_; ++y)
        if (x != y && cls[x] == cls[y]) twins_[x].push_back(y);
    for (Vertex x = 0; x < n_; ++x) have_twins_ = have_twins_ || !twins_[x].empty();
  }

  std::optional<std::vector<Cycle>> run() {
    place_greedy(400);
    long long iter = 0;
    long long last_endgame_sum = -1;
    while (pool_sum_ > 0) {
      if ((++iter & 15) == 0 && Clock::now() > deadline_) return std::nullopt;
      const int pool_cycles = std::accumulate(pool_.begin(), pool_.end(), 0);
      if (pool_cycles <= 12 && pool_sum_ <= 90 && (iter % 8 == 1 || pool_sum_ != last_endgame_sum)) {
        last_endgame_sum = pool_sum_;
        if (stats_) ++stats_->endgames;
        if (auto sol = exact_decomposition(leave_, pool_lengths(), 3000)) {
          for (const Cycle& c : *sol) place(c);
          break;
        }
      }
      std::uniform_real_distribution<double> coin(0.0, 1.0);
      if (have_twins_ && coin(rng_) < 0.75) {
        const int k = 1 + static_cast<int>(rng_() % 3);
        for (int i = 0; i < k; ++i) random_switch();
        place_greedy(4);
      } else {
        auto saved_cycles = cycles_;
        auto saved_leave = leave_;
        auto saved_pool = pool_;
        const long long before = pool_sum_;
        ruin();
        place_greedy(12);
        if (pool_sum_ > before && coin(rng_) < 0.8) {
          cycles_ = std::move(saved_cycles);
          leave_ = std::move(saved_leave);
          pool_ = std::move(saved_pool);
          pool_sum_ = before;
        }
      }
    }
    return cycles_;
  }

 private:
  std::vector<int> pool_lengths() const {
    std::vector<int> out;
    for (int L = 0; L < static_cast<int>(pool_.size()); ++L) out.insert(out.end(), pool_[L], L);
    return out;
  }

  void place(const Cycle& c) {
    remove_cycle(leave_, c);
    cycles_.push_back(c);
    --pool_[c.size()];
    pool_sum_ -= static_cast<long long>(c.size());
  }

  void unplace(std::size_t i) {
    add_cycle(leave_, cycles_[i]);
    ++pool_[cycles_[i].size()];
    pool_sum_ += static_cast<long long>(cycles_[i].size());
    std::swap(cycles_[i], cycles_.back());
    cycles_.pop_back();
  }

  std::optional<Cycle> find_cycle(int L, long long limit) {
    std::vector<Vertex> sup = leave_.support();
    if (static_cast<int>(sup.size()) < L) return std::nullopt;
    Vertex start;
    if (rng_() & 1) {
      start = sup[rng_() % sup.size()];
    } else {
      int best = 1 << 30;
      std::vector<Vertex> ties;
      for (Vertex x : sup) {
        const int d = leave_.degree(x);
        if (d < best) {
          best = d;
          ties.clear();
        }
        if (d == best) ties.push_back(x);
      }
      start = ties[rng_() % ties.size()];
    }
    std::vector<int> dist = bfs_distances(leave_, start);
    std::vector<char> on(n_, 0);
    Path path{start};
    on[start] = 1;
    long long nodes = 0;
    const bool prefer_low = rng_() % 3 != 0;
    std::function<bool()> dfs = [&]() -> bool {
      if (++nodes > limit) return false;
      const Vertex cur = path.back();
      const int len = static_cast<int>(path.size());
      if (len == L) return leave_.has(cur, start);
      std::vector<Vertex> nb;
      for (Vertex y : leave_.neighbours(cur))
        if (!on[y] && dist[y] <= L - len) nb.push_back(y);
      std::shuffle(nb.begin(), nb.end(), rng_);
      if (prefer_low)
        std::stable_sort(nb.begin(), nb.end(), [&](Vertex a, Vertex b) { return leave_.degree(a) < leave_.degree(b); });
      for (Vertex y : nb) {
        on[y] = 1;
        path.push_back(y);
        if (dfs()) return true;
        path.pop_back();
        on[y] = 0;
        if (nodes > limit) return false;
      }
      return false;
    };
    if (dfs()) return path;
    return std::nullopt;
  }

  void place_greedy(int attempts) {
    bool progress = true;
    while (progress && pool_sum_ > 0) {
      progress = false;
      for (int L = static_cast<int>(pool_.size()) - 1; L >= 3; --L) {
        for (int a = 0; a < attempts && pool_[L] > 0; ++a) {
          if (auto c = find_cycle(L, 200 + 40 * L)) {
            place(*c);
            progress = true;
            a = -1;
          }
        }
      }
    }
  }

  void random_switch() {
    std::vector<Vertex> sup = leave_.support();
    if (sup.empty()) return;
    const Vertex a = sup[rng_() % sup.size()];
    if (twins_[a].empty()) return;
    const Vertex b = twins_[a][rng_() % twins_[a].size()];
    std::vector<Vertex> cand = raw_switch_candidates(leave_, a, b);
    if (cand.empty()) return;
    const Vertex origin = cand[rng_() % cand.size()];
    apply_switch(cycles_, leave_, a, b, origin);
    if (stats_) ++stats_->switches;
  }

  void ruin() {
    if (stats_) ++stats_->ruins;
    if (cycles_.empty()) return;
    std::vector<Vertex> sup = leave_.support();
    const int k = 1 + static_cast<int>(rng_() % 3);
    for (int i = 0; i < k && !cycles_.empty(); ++i) {
      std::vector<std::size_t> near;
      if (!sup.empty() && (rng_() % 4) != 0) {
        const Vertex x = sup[rng_() % sup.size()];
        for (std::size_t j = 0; j < cycles_.size(); ++j)
          if (std::find(cycles_[j].begin(), cycles_[j].end(), x) != cycles_[j].end()) near.push_back(j);
      }
      if (near.empty()) {
        unplace(rng_() % cycles_.size());
      } else {
        unplace(near[rng_() % near.size()]);
      }
    }
  }

  const EdgeSet& g_;
  int n_;
  EdgeSet leave_;
  std::mt19937_64 rng_;
  SolverStats* stats_;
  std::vector<int> pool_;
  long long pool_sum_ = 0;
  std::vector<Cycle> cycles_;
  std::vector<std::vector<Vertex>> twins_;
  bool have_twins_ = false;
  Clock::time_point deadline_;
};

}  // namespace

std::vector<int> twin_classes(const EdgeSet& g) {
  const int n = g.order();
  std::vector<int> cls(n, -1);
  int next = 0;
  auto same = [&](Vertex x, Vertex y) {
    const std::uint64_t* rx = g.row(x);
    const std::uint64_t* ry = g.row(y);
    for (int w = 0; w < g.words(); ++w) {
      std::uint64_t mx = rx[w], my = ry[w];
      if ((y >> 6) == w) mx &= ~(std::uint64_t{1} << (y & 63));
      if ((x >> 6) == w) my &= ~(std::uint64_t{1} << (x & 63));
      if (mx != my) return false;
    }
    return true;
  };
  for (Vertex x = 0; x < n; ++x) {
    if (cls[x] >= 0) continue;
    cls[x] = next;
    for (Vertex y = x + 1; y < n; ++y)
      if (cls[y] < 0 && same(x, y)) cls[y] = next;
    ++next;
  }
  return cls;
}

bool is_list_decomposition(const EdgeSet& g, const LengthList& M, const std::vector<Cycle>& cycles) {
  EdgeSet rest = g;
  for (const Cycle& c : cycles) {
    if (c.size() < 3) return false;
    std::vector<Vertex> sorted = c;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (std::size_t i = 0; i < c.size(); ++i) {
      Vertex x = c[i], y = c[(i + 1) % c.size()];
      if (x < 0 || y < 0 || x >= g.order() || y >= g.order() || !rest.has(x, y)) return false;
      rest.remove(x, y);
    }
  }
  return rest.empty() && lengths_of(cycles) == M;
}

std::optional<std::vector<Cycle>> exact_decomposition(const EdgeSet& leave, const std::vector<int>& lengths,
                                                      long long node_budget) {
  return Exact(leave, lengths, node_budget).solve();
}

std::vector<Cycle> solve_list_decomposition(const EdgeSet& g, const LengthList& M, const SolverConfig& cfg,
                                            SolverStats* stats) {
  if (g.order() > cfg.max_vertices) fail(ErrorKind::PreconditionViolation, "graph exceeds solver vertex limit");
  if (M.sum() != g.size()) fail(ErrorKind::PreconditionViolation, "length list does not sum to the edge count");
  if (cfg.time_budget <= 0) fail(ErrorKind::PreconditionViolation, "time budget must be positive");
  for (Vertex x = 0; x < g.order(); ++x)
    if (g.degree(x) % 2) fail(ErrorKind::PreconditionViolation, "graph has a vertex of odd degree");
  if (M.empty()) return {};
  Solver s(g, M, cfg, stats);
  auto out = s.run();
  if (!out) fail(ErrorKind::ResourceExhausted, "solver budget exhausted; increase the budget or change the seed");
  if (!is_list_decomposition(g, M, *out)) fail(ErrorKind::InternalInvariantViolation, "solver produced an invalid decomposition");
  return *out;
}

FactorDecomposition decompose_even_complete_minus_factor(int n, const LengthList& M, const SolverConfig& cfg) {
  if (n < 4 || n % 2) fail(ErrorKind::PreconditionViolation, "order must be even and at least 4");
  if (M.sum() != static_cast<long long>(n) * (n - 1) / 2 - n / 2)
    fail(ErrorKind::PreconditionViolation, "lengths must sum to C(n,2) - n/2");
  for (auto [len, c] : M.counts())
    if (len > n) fail(ErrorKind::PreconditionViolation, "cycle longer than the order");
  if (n > cfg.max_vertices) fail(ErrorKind::PreconditionViolation, "order exceeds solver vertex limit");
  EdgeSet g(n);
  FactorDecomposition out;
  for (Vertex x = 0; x < n; ++x)
    for (Vertex y = x + 1; y < n; ++y) {
      if (y == x + 1 && x % 2 == 0)
        out.factor.edges.emplace_back(x, y);
      else
        g.add(x, y);
    }
  out.cycles = solve_list_decomposition(g, M, cfg);
  return out;
}

std::vector<Cycle> decompose_bipartite(int a, int b, const LengthList& M, const SolverConfig& cfg) {
  if (a < 2 || b < 2 || a % 2 || b % 2) fail(ErrorKind::PreconditionViolation, "bipartite parts must be even and positive");
  if (M.sum() != static_cast<long long>(a) * b) fail(ErrorKind::PreconditionViolation, "lengths must sum to ab");
  for (auto [len, c] : M.counts())
    if (len % 2 || len < 4 || len > 2 * std::min(a, b))
      fail(ErrorKind::PreconditionViolation, "bipartite cycle lengths must be even, >= 4 and <= 2 min(a,b)");
  if (M.count(4) == M.size()) {
    std::vector<Cycle> out;
    for (int i = 0; i < a; i += 2)
      for (int j = 0; j < b; j += 2) out.push_back({i, a + j, i + 1, a + j + 1});
    return out;
  }
  if (a + b > cfg.max_vertices) fail(ErrorKind::PreconditionViolation, "order exceeds solver vertex limit");
  EdgeSet g(a + b);
  for (Vertex x = 0; x < a; ++x)
    for (Vertex y = a; y < a + b; ++y) g.add(x, y);
  return solve_list_decomposition(g, M, cfg);
}

}  // namespace holey
