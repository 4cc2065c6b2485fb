#include <doctest.h>

#include <algorithm>

#include "holey/admissible.hpp"
#include "holey/pipeline.hpp"
#include "support/instances.hpp"

using namespace holey;

namespace {

// Independent restatement of N1-N4; N3 rearranged as (v-1-u)(m-1) >= 2u.
bool brute_admissible(long long m, long long u, long long v) {
  if (u % 2 == 0 || v % 2 == 0) return false;
  if ((v * (v - 1) / 2 - u * (u - 1) / 2) % m != 0) return false;
  if ((v - 1 - u) * (m - 1) < 2 * u) return false;
  return (v - m) * (v - 1) >= u * (u - 1);
}

int brute_nu(int m, int u) {
  for (int x = u + 1;; ++x)
    if (brute_admissible(m, u, x)) return x;
}

bool contains_cycle(const Certificate& c, const Cycle& x) {
  return std::any_of(c.cycles.begin(), c.cycles.end(), [&](const Cycle& y) { return same_cycle(x, y); });
}

}  // namespace

TEST_CASE("admissibility examples") {
  CHECK(admissible(9, 5, 11).admissible());
  const AdmissibilityReport a = admissible(9, 5, 7);
  CHECK(a.n1);
  CHECK_FALSE(a.n3);
  CHECK_FALSE(admissible(9, 4, 12).n1);
  CHECK(testing::thrown_kind([] { admissible(8, 1, 9); }) == ErrorKind::Unsupported);
  CHECK(testing::thrown_kind([] { admissible(9, 9, 9); }) == ErrorKind::InvalidParameters);
  // N3 boundary: 9*10/8 + 1 = 12.25
  CHECK_FALSE(admissible(9, 9, 11).n3);
  CHECK(admissible(9, 9, 13).n3);
  // m = 3: 3*4/2 + 1 = 7 exactly
  CHECK(admissible(3, 3, 7).n3);
  CHECK_FALSE(admissible(3, 3, 5).n3);
}

TEST_CASE("admissibility agrees with a brute-force restatement") {
  for (int m = 3; m <= 21; m += 2)
    for (int v = 1; v <= 90; ++v)
      for (int u = 0; u < v; ++u) CHECK(admissible(m, u, v).admissible() == brute_admissible(m, u, v));
}

TEST_CASE("nu examples") {
  CHECK(nu(9, 5) == 11);
  CHECK(nu(9, 1) == 9);
  CHECK(nu(11, 13) == 21);
  CHECK(testing::thrown_kind([] { nu(9, 4); }) == ErrorKind::InvalidParameters);
}

TEST_CASE("nu against brute force and the congruence bound") {
  for (int m = 3; m <= 15; m += 2)
    for (int u = 1; u <= 60; u += 2) {
      const int n = nu(m, u);
      CHECK(n == brute_nu(m, u));
      int y = u + 2 * m;  // smallest y > u with y = u (mod 2m) meeting N3
      while ((y - 1 - u) * (m - 1) < 2 * u) y += 2 * m;
      CHECK(n <= y);
    }
}

TEST_CASE("construct examples") {
  DispatchTrace t;
  const Certificate c = construct(9, 9, 19, {}, &t);
  CHECK(verify(c).ok());
  CHECK(c.cycles.size() == 15);
  CHECK(t.route == Route::AmostEverything);

  DispatchTrace s;
  const Certificate d = construct(9, 5, 11, {}, &s);
  CHECK(verify(d).ok());
  CHECK(d.cycles.size() == 5);
  CHECK(s.route == Route::Search);

  CHECK(testing::thrown_kind([] { construct(9, 4, 12); }) == ErrorKind::NotAdmissible);
  CHECK(testing::thrown_kind([] { construct(9, 5, 7); }) == ErrorKind::NotAdmissible);
  CHECK(testing::thrown_kind([] { search_small(9, 5, 7); }) == ErrorKind::PreconditionViolation);
}

TEST_CASE("construct is replayable under a fixed seed") {
  SolverConfig cfg;
  cfg.seed = 1234;
  CHECK(construct(9, 5, 17, cfg) == construct(9, 5, 17, cfg));
  CHECK(construct(9, 9, 19, cfg) == construct(9, 9, 19, cfg));
}

TEST_CASE("nesting through an intermediate hole") {
  const Certificate inner = construct(9, 7, 21);
  const Certificate outer = construct(9, 21, 43);
  const Certificate both = nest(inner, outer);
  CHECK(verify(both).ok());
  CHECK(both.u == 7);
  CHECK(both.v == 43);
  CHECK(testing::thrown_kind([&] { nest(outer, inner); }) == ErrorKind::InvalidParameters);
}

TEST_CASE("construct never succeeds on an inadmissible triple") {
  for (int m = 3; m <= 15; m += 2)
    for (int v = 2; v <= 45; ++v)
      for (int u = 0; u < v; ++u)
        if (!brute_admissible(m, u, v)) CHECK(testing::thrown_kind([&] { construct(m, u, v); }) == ErrorKind::NotAdmissible);
}

TEST_CASE("small m sweep in the main range") {
  for (int m : {3, 5, 7})
    for (int v = 1; v <= 25; v += 2)
      for (int u = std::max(1, m - 2); u < v; u += 2) {
        if (v - u < m + 1 || !brute_admissible(m, u, v)) continue;
        const Certificate c = construct(m, u, v);
        CHECK(verify(c).ok());
        CHECK(static_cast<long long>(c.cycles.size()) * m == holed_edge_count(u, v));
      }
}

TEST_CASE("embedding a system") {
  const Certificate sys = search_small(9, 1, 9);
  REQUIRE(sys.cycles.size() == 4);
  const Certificate big = embed_system(sys, 19);
  CHECK(verify(big).ok());
  CHECK(big.u == 1);
  CHECK(big.v == 19);
  CHECK(big.cycles.size() == 19);
  for (const Cycle& c : sys.cycles) CHECK(contains_cycle(big, c));

  Certificate k9 = sys;  // the same system written with an empty hole
  k9.u = 0;
  k9.hole.clear();
  CHECK(embed_system(k9, 19).cycles.size() == 19);

  const Certificate trivial = make_certificate(9, 1, 1, {});
  const Certificate t = embed_system(trivial, 9);
  CHECK(verify(t).ok());
  CHECK(t.cycles.size() == 4);

  CHECK(testing::thrown_kind([&] { embed_system(sys, 11); }) == ErrorKind::NotAdmissible);
  Certificate broken = sys;
  broken.cycles.pop_back();
  CHECK(testing::thrown_kind([&] { embed_system(broken, 19); }) == ErrorKind::InvalidInputSystem);
  const Certificate holed = construct(9, 5, 11);
  CHECK(testing::thrown_kind([&] { embed_system(holed, 21); }) == ErrorKind::InvalidInputSystem);
}
