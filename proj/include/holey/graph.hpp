#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "holey/errors.hpp"

namespace holey {

using Vertex = int;
using Cycle = std::vector<Vertex>;  // x_0..x_{k-1}, closed
using Path = std::vector<Vertex>;   // y_0..y_n, open
using Edge = std::pair<Vertex, Vertex>;

inline Edge make_edge(Vertex x, Vertex y) { return x < y ? Edge{x, y} : Edge{y, x}; }

// Dense simple graph on 0..n-1, one bit row per vertex.
class EdgeSet {
 public:
  EdgeSet() = default;
  explicit EdgeSet(int n);

  int order() const { return n_; }
  int words() const { return words_; }
  long long size() const { return size_; }
  bool empty() const { return size_ == 0; }

  bool has(Vertex x, Vertex y) const {
    return (rows_[static_cast<std::size_t>(x) * words_ + (y >> 6)] >> (y & 63)) & 1U;
  }
  void add(Vertex x, Vertex y);
  void remove(Vertex x, Vertex y);
  void toggle(Vertex x, Vertex y);
  int degree(Vertex x) const { return deg_[x]; }
  const std::uint64_t* row(Vertex x) const { return rows_.data() + static_cast<std::size_t>(x) * words_; }

  std::vector<Vertex> neighbours(Vertex x) const;
  std::vector<Edge> edges() const;
  std::vector<Vertex> support() const;  // vertices of positive degree

  bool operator==(const EdgeSet& o) const { return n_ == o.n_ && rows_ == o.rows_; }

 private:
  int n_ = 0;
  int words_ = 0;
  long long size_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<int> deg_;
};

enum class EdgeKind { Pure, Cross };

// K_v - K_u with hole {0..u-1}.
class HoledGraph {
 public:
  HoledGraph() = default;
  HoledGraph(int u, int v);

  int u() const { return u_; }
  int v() const { return v_; }
  bool in_hole(Vertex x) const { return x < u_; }
  bool valid_vertex(Vertex x) const { return x >= 0 && x < v_; }
  bool has_edge(Vertex x, Vertex y) const {
    return valid_vertex(x) && valid_vertex(y) && x != y && !(x < u_ && y < u_);
  }
  bool is_pure(Vertex x, Vertex y) const { return x >= u_ && y >= u_; }
  long long edge_count() const;
  long long pure_edge_count() const;
  EdgeKind classify(Vertex x, Vertex y) const;
  bool twins(Vertex a, Vertex b) const;
  EdgeSet edges() const;

  bool operator==(const HoledGraph& o) const { return u_ == o.u_ && v_ == o.v_; }

 private:
  int u_ = 0;
  int v_ = 0;
};

HoledGraph build_holed_graph(int u, int v);
EdgeKind classify_edge(const HoledGraph& g, Vertex x, Vertex y);
bool are_twin(const HoledGraph& g, Vertex a, Vertex b);

// Least vertex first, then the direction whose second entry is smaller.
Cycle canonical_cycle(const Cycle& c);
bool same_cycle(const Cycle& a, const Cycle& b);
std::vector<Edge> cycle_edges(const Cycle& c);
int pure_edges_in(const HoledGraph& g, const Cycle& c);
int pure_edges_in_path(const HoledGraph& g, const Path& p);
bool is_cycle_in(const HoledGraph& g, const Cycle& c);

struct CyclePacking {
  HoledGraph host;
  std::vector<Cycle> cycles;
};

bool is_valid_packing(const CyclePacking& p);
EdgeSet leave_of(const CyclePacking& p);  // throws InvalidParameters on overlap

struct ReducedLeave {
  EdgeSet edges;
  std::vector<Vertex> vertices;  // positive degree, ascending
  int pure_edges = 0;
  std::vector<int> degree;  // indexed by vertex of the host
};

ReducedLeave reduced_leave(const CyclePacking& p);
ReducedLeave reduced_leave_of(const HoledGraph& g, const EdgeSet& leave);

// Multiset of cycle lengths, zeros dropped.
class LengthList {
 public:
  LengthList() = default;
  LengthList(std::initializer_list<int> items);
  explicit LengthList(const std::vector<int>& items);

  void add(int len, int times = 1);
  LengthList& operator+=(const LengthList& o);
  friend LengthList operator+(LengthList a, const LengthList& b) { return a += b; }

  long long sum() const;
  int size() const;
  int count(int len) const;
  bool empty() const { return counts_.empty(); }
  int max() const;
  std::vector<int> sorted() const;  // ascending
  const std::map<int, int>& counts() const { return counts_; }
  bool operator==(const LengthList& o) const { return counts_ == o.counts_; }

 private:
  std::map<int, int> counts_;
};

LengthList lengths_of(const std::vector<Cycle>& cycles);

}  // namespace holey
