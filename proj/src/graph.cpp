#include "holey/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

namespace holey {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidParameters: return "InvalidParameters";
    case ErrorKind::NoSuchEdge: return "NoSuchEdge";
    case ErrorKind::NotTwin: return "NotTwin";
    case ErrorKind::OriginNotEligible: return "OriginNotEligible";
    case ErrorKind::InternalInvariantViolation: return "InternalInvariantViolation";
    case ErrorKind::MalformedLeave: return "MalformedLeave";
    case ErrorKind::HypothesisViolation: return "HypothesisViolation";
    case ErrorKind::PreconditionViolation: return "PreconditionViolation";
    case ErrorKind::ResourceExhausted: return "ResourceExhausted";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::OutOfCoveredRange: return "OutOfCoveredRange";
    case ErrorKind::Unsupported: return "Unsupported";
    case ErrorKind::InvalidInputSystem: return "InvalidInputSystem";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

// ---------------------------------------------------------------- EdgeSet

EdgeSet::EdgeSet(int n) : n_(n), words_((n + 63) / 64) {
  rows_.assign(static_cast<std::size_t>(n) * words_, 0);
  deg_.assign(n, 0);
}

void EdgeSet::add(Vertex x, Vertex y) {
  if (has(x, y)) return;
  rows_[static_cast<std::size_t>(x) * words_ + (y >> 6)] |= std::uint64_t{1} << (y & 63);
  rows_[static_cast<std::size_t>(y) * words_ + (x >> 6)] |= std::uint64_t{1} << (x & 63);
  ++deg_[x];
  ++deg_[y];
  ++size_;
}

void EdgeSet::remove(Vertex x, Vertex y) {
  if (!has(x, y)) return;
  rows_[static_cast<std::size_t>(x) * words_ + (y >> 6)] &= ~(std::uint64_t{1} << (y & 63));
  rows_[static_cast<std::size_t>(y) * words_ + (x >> 6)] &= ~(std::uint64_t{1} << (x & 63));
  --deg_[x];
  --deg_[y];
  --size_;
}

void EdgeSet::toggle(Vertex x, Vertex y) {
  if (has(x, y))
    remove(x, y);
  else
    add(x, y);
}

std::vector<Vertex> EdgeSet::neighbours(Vertex x) const {
  std::vector<Vertex> out;
  out.reserve(deg_[x]);
  const std::uint64_t* r = row(x);
  for (int w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      int b = std::countr_zero(bits);
      out.push_back(w * 64 + b);
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<Edge> EdgeSet::edges() const {
  std::vector<Edge> out;
  out.reserve(size_);
  for (Vertex x = 0; x < n_; ++x)
    for (Vertex y : neighbours(x))
      if (x < y) out.emplace_back(x, y);
  return out;
}

std::vector<Vertex> EdgeSet::support() const {
  std::vector<Vertex> out;
  for (Vertex x = 0; x < n_; ++x)
    if (deg_[x] > 0) out.push_back(x);
  return out;
}

// ------------------------------------------------------------- HoledGraph

HoledGraph::HoledGraph(int u, int v) : u_(u), v_(v) {
  if (u < 0 || v < 1 || u > v) fail(ErrorKind::InvalidParameters, "need 0 <= u <= v and v >= 1");
}

long long HoledGraph::edge_count() const {
  return static_cast<long long>(v_) * (v_ - 1) / 2 - static_cast<long long>(u_) * (u_ - 1) / 2;
}

long long HoledGraph::pure_edge_count() const {
  long long w = v_ - u_;
  return w * (w - 1) / 2;
}

EdgeKind HoledGraph::classify(Vertex x, Vertex y) const {
  if (!has_edge(x, y)) fail(ErrorKind::NoSuchEdge, "{" + std::to_string(x) + "," + std::to_string(y) + "}");
  return is_pure(x, y) ? EdgeKind::Pure : EdgeKind::Cross;
}

bool HoledGraph::twins(Vertex a, Vertex b) const {
  if (a == b || !valid_vertex(a) || !valid_vertex(b)) fail(ErrorKind::InvalidParameters, "twin query needs two distinct vertices");
  return in_hole(a) == in_hole(b);
}

EdgeSet HoledGraph::edges() const {
  EdgeSet e(v_);
  for (Vertex x = 0; x < v_; ++x)
    for (Vertex y = std::max(x + 1, u_); y < v_; ++y) e.add(x, y);
  return e;
}

HoledGraph build_holed_graph(int u, int v) { return HoledGraph(u, v); }
EdgeKind classify_edge(const HoledGraph& g, Vertex x, Vertex y) { return g.classify(x, y); }
bool are_twin(const HoledGraph& g, Vertex a, Vertex b) { return g.twins(a, b); }

// ----------------------------------------------------------------- cycles

Cycle canonical_cycle(const Cycle& c) {
  if (c.empty()) return c;
  const std::size_t k = c.size();
  std::size_t i = static_cast<std::size_t>(std::min_element(c.begin(), c.end()) - c.begin());
  Vertex next = c[(i + 1) % k];
  Vertex prev = c[(i + k - 1) % k];
  Cycle out;
  out.reserve(k);
  if (next <= prev) {
    for (std::size_t j = 0; j < k; ++j) out.push_back(c[(i + j) % k]);
  } else {
    for (std::size_t j = 0; j < k; ++j) out.push_back(c[(i + k - j) % k]);
  }
  return out;
}

bool same_cycle(const Cycle& a, const Cycle& b) { return canonical_cycle(a) == canonical_cycle(b); }

std::vector<Edge> cycle_edges(const Cycle& c) {
  std::vector<Edge> out;
  out.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) out.push_back(make_edge(c[i], c[(i + 1) % c.size()]));
  return out;
}

int pure_edges_in(const HoledGraph& g, const Cycle& c) {
  int n = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (g.is_pure(c[i], c[(i + 1) % c.size()])) ++n;
  return n;
}

int pure_edges_in_path(const HoledGraph& g, const Path& p) {
  int n = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (g.is_pure(p[i], p[i + 1])) ++n;
  return n;
}

bool is_cycle_in(const HoledGraph& g, const Cycle& c) {
  if (c.size() < 3) return false;
  std::vector<char> seen(g.v(), 0);
  for (Vertex x : c) {
    if (!g.valid_vertex(x) || seen[x]) return false;
    seen[x] = 1;
  }
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!g.has_edge(c[i], c[(i + 1) % c.size()])) return false;
  return true;
}

// ---------------------------------------------------------------- packing

EdgeSet leave_of(const CyclePacking& p) {
  EdgeSet leave = p.host.edges();
  for (const Cycle& c : p.cycles) {
    if (!is_cycle_in(p.host, c)) fail(ErrorKind::InvalidParameters, "packing contains a non-cycle");
    for (std::size_t i = 0; i < c.size(); ++i) {
      Vertex x = c[i], y = c[(i + 1) % c.size()];
      if (!leave.has(x, y)) fail(ErrorKind::InvalidParameters, "packing cycles share an edge");
      leave.remove(x, y);
    }
  }
  return leave;
}

bool is_valid_packing(const CyclePacking& p) {
  try {
    (void)leave_of(p);
    return true;
  } catch (const Error&) {
    return false;
  }
}

ReducedLeave reduced_leave_of(const HoledGraph& g, const EdgeSet& leave) {
  ReducedLeave r;
  r.edges = leave;
  r.degree.assign(g.v(), 0);
  for (Vertex x = 0; x < g.v(); ++x) {
    r.degree[x] = leave.degree(x);
    if (r.degree[x] > 0) r.vertices.push_back(x);
  }
  for (auto [x, y] : leave.edges())
    if (g.is_pure(x, y)) ++r.pure_edges;
  return r;
}

ReducedLeave reduced_leave(const CyclePacking& p) { return reduced_leave_of(p.host, leave_of(p)); }

// ------------------------------------------------------------- LengthList

LengthList::LengthList(std::initializer_list<int> items) {
  for (int x : items) add(x);
}

LengthList::LengthList(const std::vector<int>& items) {
  for (int x : items) add(x);
}

void LengthList::add(int len, int times) {
  if (len == 0 || times == 0) return;
  if (len < 3 || times < 0) fail(ErrorKind::InvalidParameters, "cycle lengths must be >= 3");
  counts_[len] += times;
}

LengthList& LengthList::operator+=(const LengthList& o) {
  for (auto [len, c] : o.counts_) counts_[len] += c;
  return *this;
}

long long LengthList::sum() const {
  long long s = 0;
  for (auto [len, c] : counts_) s += static_cast<long long>(len) * c;
  return s;
}

int LengthList::size() const {
  int s = 0;
  for (auto [len, c] : counts_) s += c;
  return s;
}

int LengthList::count(int len) const {
  auto it = counts_.find(len);
  return it == counts_.end() ? 0 : it->second;
}

int LengthList::max() const { return counts_.empty() ? 0 : counts_.rbegin()->first; }

std::vector<int> LengthList::sorted() const {
  std::vector<int> out;
  for (auto [len, c] : counts_) out.insert(out.end(), c, len);
  return out;
}

LengthList lengths_of(const std::vector<Cycle>& cycles) {
  LengthList l;
  for (const Cycle& c : cycles) l.add(static_cast<int>(c.size()));
  return l;
}

}  // namespace holey
