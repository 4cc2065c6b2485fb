#include "holey/surgery.hpp"

#include <algorithm>
#include <string>

#include "algorithms.hpp"

namespace holey {
namespace detail {
namespace {

// P = (c, x_1, ..., x_{p-1}), Q = (c, y_1, ..., y_{q-1}).
struct Lab {
  Cycle P, Q;
  int p() const { return static_cast<int>(P.size()); }
  int q() const { return static_cast<int>(Q.size()); }
  Vertex c() const { return P[0]; }
  Vertex x(int i) const { return P[static_cast<std::size_t>(i % p())]; }
  Vertex y(int j) const { return Q[static_cast<std::size_t>(j % q())]; }
};

struct Step {
  bool split = false;
  bool grown = false;
  Lab next;
  Cycle first, second;
};

Lab lab_of(const ChainForm& ch) {
  if (ch.size() != 2) fail(ErrorKind::HypothesisViolation, "expected a 2-chain");
  Lab L{ch.cycles[0], ch.cycles[1]};
  if (L.P.empty() || L.Q.empty() || L.P[0] != L.Q[0]) fail(ErrorKind::HypothesisViolation, "both chain cycles must start at the link vertex");
  return L;
}

ChainForm form_of(const HoledGraph& g, const Lab& L) {
  ChainForm f;
  f.cycles = {L.P, L.Q};
  f.links = {L.c()};
  f.pure = {pure_edges_in(g, L.P), pure_edges_in(g, L.Q)};
  return f;
}

void expect_leave(const Work& w, const Lab& L) {
  if (!leave_is(w.leave, {L.P, L.Q})) fail(ErrorKind::HypothesisViolation, "leave is not the given 2-chain");
}

Step split_of(Cycle a, Cycle b) {
  Step s;
  s.split = true;
  s.first = std::move(a);
  s.second = std::move(b);
  return s;
}

void expect_chain(const Work& w, const Lab& L, const char* step) {
  if (!leave_is(w.leave, {L.P, L.Q})) broken(std::string(step) + ": leave differs from the predicted chain");
}

Step split_with(const Work& w, Cycle mc, int other_len, const char* step) {
  auto rest = remainder_cycle(w.leave, mc);
  if (!rest || static_cast<int>(rest->size()) != other_len) broken(std::string(step) + ": leave is not the predicted pair of cycles");
  return split_of(std::move(mc), std::move(*rest));
}

void check_lengths(const Lab& L, int m) {
  if (m < L.p() || L.p() + L.q() - m < 3) fail(ErrorKind::HypothesisViolation, "need m >= p and p + q - m >= 3");
}

Step foe1(Work& w, const Lab& L, int m) {
  check_lengths(L, m);
  const int p = L.p(), q = L.q();
  if (p == m) return split_of(L.P, L.Q);
  const Vertex a = L.x(1), b = L.y(m - p + 1);
  if (!w.twin(a, b)) fail(ErrorKind::HypothesisViolation, "x_1 and y_{m-p+1} are not twin");
  const Vertex t = w.sw(a, b, L.x(2), "figure-of-eight-1");
  if (t == L.y(m - p)) {
    Step s;
    s.next.P = {L.c(), L.x(1)};
    for (int j = m - p; j >= 1; --j) s.next.P.push_back(L.y(j));
    s.next.Q = {L.c()};
    for (int i = p - 1; i >= 2; --i) s.next.Q.push_back(L.x(i));
    for (int j = m - p + 1; j <= q - 1; ++j) s.next.Q.push_back(L.y(j));
    expect_chain(w, s.next, "figure-of-eight-1");
    return s;
  }
  Cycle mc;
  for (int j = 1; j <= m - p + 1; ++j) mc.push_back(L.y(j));
  for (int i = 2; i <= p - 1; ++i) mc.push_back(L.x(i));
  mc.push_back(L.c());
  return split_with(w, std::move(mc), p + q - m, "figure-of-eight-1");
}

Step foe2(Work& w, const Lab& L, int m) {
  check_lengths(L, m);
  const int p = L.p(), q = L.q();
  if (p == m) return split_of(L.P, L.Q);
  if (p < 4) fail(ErrorKind::HypothesisViolation, "the second figure-of-eight step needs p >= 4");
  const Vertex a = L.x(2), b = L.y(m - p + 2);
  if (!w.twin(a, b)) fail(ErrorKind::HypothesisViolation, "x_2 and y_{m-p+2} are not twin");
  const Vertex t = w.sw(a, b, L.x(3), "figure-of-eight-2");
  if (t == L.y(m - p + 1)) {
    Step s;
    s.next.P = {L.c(), L.x(1), L.x(2)};
    for (int j = m - p + 1; j >= 1; --j) s.next.P.push_back(L.y(j));
    s.next.Q = {L.c()};
    for (int i = p - 1; i >= 3; --i) s.next.Q.push_back(L.x(i));
    for (int j = m - p + 2; j <= q - 1; ++j) s.next.Q.push_back(L.y(j));
    expect_chain(w, s.next, "figure-of-eight-2");
    return s;
  }
  Cycle mc;
  for (int j = 1; j <= m - p + 2; ++j) mc.push_back(L.y(j));
  for (int i = 3; i <= p - 1; ++i) mc.push_back(L.x(i));
  mc.push_back(L.c());
  return split_with(w, std::move(mc), p + q - m, "figure-of-eight-2");
}

bool same_side(const HoledGraph& g, const std::vector<Vertex>& s) {
  for (Vertex x : s)
    if (g.in_hole(x) != g.in_hole(s.front())) return false;
  return true;
}

bool foe3_hypotheses(const HoledGraph& g, const Lab& L, int m) {
  const int p = L.p(), q = L.q();
  if (m % 2 == 0 || m < p || p + q - m < 3) return false;
  if (p == m) return true;
  std::vector<Vertex> s1, s2;
  if (p % 2) {
    s1.push_back(L.x(1));
    for (int j = 3; j <= m - p + 1; j += 2) s1.push_back(L.y(j));
    for (int j = 2; j <= m - p + 2; j += 2) s2.push_back(L.y(j));
  } else {
    for (int i = 1; i <= p - 3; i += 2) s1.push_back(L.x(i));
    s2.push_back(L.y(m - p + 2));
    for (int i = 2; i <= p - 2; i += 2) s2.push_back(L.x(i));
  }
  return same_side(g, s1) && same_side(g, s2);
}

Step foe3(Work& w, Lab L, int m) {
  if (!foe3_hypotheses(w.g, L, m)) fail(ErrorKind::HypothesisViolation, "figure-of-eight twin conditions fail");
  for (int iter = 0; iter <= 4 * m; ++iter) {
    if (L.p() == m) return split_of(L.P, L.Q);
    if (!foe3_hypotheses(w.g, L, m)) broken("figure-of-eight induction lost its twin conditions");
    Step s = L.p() % 2 ? foe1(w, L, m) : foe2(w, L, m);
    if (s.split) return s;
    L = std::move(s.next);
  }
  broken("figure-of-eight sequence did not terminate");
}

Step rearrange(Work& w, const Lab& L) {
  const int p = L.p(), q = L.q();
  if (q < 5) fail(ErrorKind::HypothesisViolation, "rearrange needs q >= 5");
  const Vertex y0 = L.c();
  if (!w.twin(y0, L.y(q - 2))) fail(ErrorKind::HypothesisViolation, "y_0 and y_{q-2} are not twin");
  const Vertex t = w.sw(y0, L.y(q - 2), L.y(q - 3), "rearrange-local");
  Step s;
  if (t == L.y(1)) {
    s.next.P = L.P;
    s.next.Q = {y0, L.y(q - 1), L.y(q - 2)};
    for (int j = 1; j <= q - 3; ++j) s.next.Q.push_back(L.y(j));
    expect_chain(w, s.next, "rearrange-local");
    return s;
  }
  Cycle cq;
  for (int j = 0; j <= q - 3; ++j) cq.push_back(L.y(j));
  auto rest = remainder_cycle(w.leave, cq);
  if (!rest || static_cast<int>(rest->size()) != p + 2 || shared_vertices(*rest, cq) != 1 || !contains(*rest, y0))
    broken("rearrange-local: leave is not the predicted (p+2, q-2)-chain");
  s.grown = true;
  s.next.P = rotate_to(*rest, y0);
  s.next.Q = std::move(cq);
  return s;
}

std::pair<Cycle, Cycle> ordered(Cycle a, Cycle b, int m) {
  if (static_cast<int>(a.size()) == m) return {std::move(a), std::move(b)};
  if (static_cast<int>(b.size()) == m) return {std::move(b), std::move(a)};
  broken("final leave has no cycle of the requested length");
}

std::vector<int> pure_positions(const HoledGraph& g, const Cycle& c) {
  std::vector<int> out;
  for (std::size_t j = 0; j < c.size(); ++j)
    if (g.is_pure(c[j], c[(j + 1) % c.size()])) out.push_back(static_cast<int>(j));
  return out;
}

std::vector<Lab> labelings(const Cycle& P, const Cycle& Q) {
  std::vector<Lab> out;
  for (int dp = 0; dp < 2; ++dp)
    for (int dq = 0; dq < 2; ++dq) out.push_back({dp ? reversed_from_start(P) : P, dq ? reversed_from_start(Q) : Q});
  return out;
}

std::pair<Cycle, Cycle> odd_cycles(Work& w, int m) {
  // After a growth step the grown cycle keeps the role of P, even once it is the
  // longer one; its length rises by two per round, so the loop ends by p = T.
  int grow = -1;
  for (int outer = 0; outer < 8 * m + 8; ++outer) {
    const LeaveShape sh = w.shape();
    if (sh.tag != ShapeTag::TwoChain) broken("odd-cycles branch lost the 2-chain shape");
    const Cycle& A = sh.chain.cycles[0];
    const Cycle& B = sh.chain.cycles[1];
    const int total = static_cast<int>(A.size() + B.size());
    const int T = std::max(m, total - m);
    if (static_cast<int>(A.size()) == T || static_cast<int>(B.size()) == T) return ordered(A, B, m);
    if (sh.chain.pure[0] != 1 || sh.chain.pure[1] != 1) broken("odd-cycles branch needs one pure edge per cycle");

    std::vector<Lab> cands;
    for (auto [Pc, Qc] : {std::pair{&A, &B}, std::pair{&B, &A}})
      if (grow < 0 ? Pc->size() <= Qc->size() : static_cast<int>(Pc->size()) == grow)
        for (Lab& L : labelings(*Pc, *Qc)) cands.push_back(std::move(L));

    for (const Lab& L : cands) {
      if (w.g.is_pure(L.c(), L.x(1))) continue;
      const int r = pure_positions(w.g, L.Q).front();
      if (T - L.p() + 2 <= r && r <= L.q() - 1) {
        Step s = foe3(w, L, T);
        return ordered(s.first, s.second, m);
      }
    }

    const Lab* pick = nullptr;
    for (const Lab& L : cands) {
      if (w.g.is_pure(L.c(), L.x(1))) continue;
      if (2 * pure_positions(w.g, L.Q).front() >= L.q() - 1) {
        pick = &L;
        break;
      }
    }
    if (!pick) broken("odd-cycles branch found no usable labelling");
    Lab L = *pick;
    int r = pure_positions(w.g, L.Q).front();
    while (true) {
      if (r > T - L.p() + 1) broken("odd-cycles case 2 overshot");
      Step s = rearrange(w, L);
      if (s.grown) {
        grow = s.next.p();
        break;
      }
      L = std::move(s.next);
      r += 2;
      if (pure_positions(w.g, L.Q).front() != r) broken("rearrange-local moved the pure edge unexpectedly");
      if (r >= T - L.p() + 2) {
        if (r > L.q() - 1) broken("odd-cycles case 2 overshot the cycle");
        Step f = foe3(w, L, T);
        return ordered(f.first, f.second, m);
      }
    }
  }
  broken("odd-cycles branch did not terminate");
}

std::pair<Cycle, Cycle> even_case1(Work& w, const Lab& L, int r, int T, int m) {
  const int p = L.p();
  const int total = L.p() + L.q();
  const int t = std::max(r + 1, T - p + 1);
  auto xi = [&](int i) { return i == 0 ? L.c() : L.x(i); };
  const Vertex a = xi(T - t), b = L.y(t);
  const Vertex term = w.sw(a, b, xi(T - t - 1), "even-cycles");
  if (term != L.y(t - 1)) {
    auto two = split_two_cycles(w.leave, T, total - T);
    if (!two) broken("even-cycles: leave is not an m-cycle plus a cycle");
    return ordered(two->first, two->second, m);
  }
  return odd_cycles(w, m);
}

std::pair<Cycle, Cycle> even_cycles(Work& w, int m) {
  for (int outer = 0; outer < 8 * m + 8; ++outer) {
    const LeaveShape sh = w.shape();
    if (sh.tag != ShapeTag::TwoChain) broken("even-cycles branch lost the 2-chain shape");
    const int zero = sh.chain.pure[0] == 0 ? 0 : 1;
    if (sh.chain.pure[zero] != 0 || sh.chain.pure[1 - zero] != 2) broken("even-cycles branch needs pure split 0/2");
    const Cycle& P0 = sh.chain.cycles[zero];
    const Cycle& Q0 = sh.chain.cycles[1 - zero];
    const int total = static_cast<int>(P0.size() + Q0.size());
    const int T = std::max(m, total - m);

    for (const Lab& L : labelings(P0, Q0)) {
      auto pos = pure_positions(w.g, L.Q);
      const int r = pos[0], s = pos[1];
      if (r <= T - 2 && s >= T - L.p() + 1) return even_case1(w, L, r, T, m);
    }

    if (Q0.size() < 6) broken("even-cycles case 2 needs q >= 6");
    Lab L{P0, Q0};
    {
      auto pos = pure_positions(w.g, L.Q);
      if (2 * pos[0] > L.q()) L.Q = reversed_from_start(L.Q);
    }
    auto pos = pure_positions(w.g, L.Q);
    int r = pos[0], s = pos[1];
    while (true) {
      Step st = rearrange(w, L);
      if (st.grown) break;
      L = std::move(st.next);
      r += 2;
      s += 2;
      auto now = pure_positions(w.g, L.Q);
      if (now.size() != 2 || now[0] != r || now[1] != s) broken("rearrange-local moved the pure edges unexpectedly");
      if (r <= T - 2 && s >= T - L.p() + 1) return even_case1(w, L, r, T, m);
      if (s > L.q() - 1) broken("even-cycles case 2 overshot");
    }
  }
  broken("even-cycles branch did not terminate");
}

}  // namespace

std::pair<Cycle, Cycle> split_two_chain_work(Work& w, int m) {
  const LeaveShape sh = w.shape();
  if (sh.tag != ShapeTag::TwoChain) fail(ErrorKind::HypothesisViolation, "leave is not a 2-chain");
  const int total = static_cast<int>(sh.chain.cycles[0].size() + sh.chain.cycles[1].size());
  if (m < 3 || m % 2 == 0 || total - m < 3) fail(ErrorKind::HypothesisViolation, "need odd m >= 3 and p + q - m >= 3");
  if (sh.chain.pure[0] + sh.chain.pure[1] != 2) fail(ErrorKind::HypothesisViolation, "leave must contain exactly two pure edges");
  if ((m == 3 || total - m == 3) && w.g.in_hole(sh.chain.links[0]))
    fail(ErrorKind::HypothesisViolation, "link vertex must lie outside the hole when a 3-cycle is requested");
  if (sh.chain.pure[0] == 1) return odd_cycles(w, m);
  return even_cycles(w, m);
}

}  // namespace detail

using detail::Work;

bool figure_of_eight_hypotheses(const HoledGraph& g, const ChainForm& chain, int m) {
  return detail::foe3_hypotheses(g, detail::lab_of(chain), m);
}

namespace {

SurgeryResult to_result(const Work& w, const HoledGraph& g, bool split, bool grown, const detail::Lab* next, Cycle a, Cycle b) {
  SurgeryResult out;
  out.packing = w.packing();
  out.split = split;
  out.grown = grown;
  if (next) out.chain = detail::form_of(g, *next);
  out.first = std::move(a);
  out.second = std::move(b);
  return out;
}

SurgeryResult from_step(const Work& w, detail::Step s) {
  if (s.split) return to_result(w, w.g, true, false, nullptr, std::move(s.first), std::move(s.second));
  return to_result(w, w.g, false, s.grown, &s.next, {}, {});
}

}  // namespace

SurgeryResult figure_of_eight_1(const CyclePacking& p, const ChainForm& chain, int m, SwitchTrace* trace) {
  Work w(p, trace);
  detail::Lab L = detail::lab_of(chain);
  detail::expect_leave(w, L);
  return from_step(w, detail::foe1(w, L, m));
}

SurgeryResult figure_of_eight_2(const CyclePacking& p, const ChainForm& chain, int m, SwitchTrace* trace) {
  Work w(p, trace);
  detail::Lab L = detail::lab_of(chain);
  detail::expect_leave(w, L);
  return from_step(w, detail::foe2(w, L, m));
}

SurgeryResult figure_of_eight_reduce(const CyclePacking& p, const ChainForm& chain, int m, SwitchTrace* trace) {
  Work w(p, trace);
  detail::Lab L = detail::lab_of(chain);
  detail::expect_leave(w, L);
  return from_step(w, detail::foe3(w, L, m));
}

SurgeryResult rearrange_local(const CyclePacking& p, const ChainForm& chain, SwitchTrace* trace) {
  Work w(p, trace);
  detail::Lab L = detail::lab_of(chain);
  detail::expect_leave(w, L);
  return from_step(w, detail::rearrange(w, L));
}

SurgeryResult split_two_chain(const CyclePacking& p, int m, SwitchTrace* trace) {
  Work w(p, trace);
  auto [a, b] = detail::split_two_chain_work(w, m);
  return to_result(w, w.g, true, false, nullptr, std::move(a), std::move(b));
}

}  // namespace holey
