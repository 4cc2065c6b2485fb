#include "holey/admissible.hpp"

#include "holey/errors.hpp"

namespace holey {

long long holed_edge_count(int u, int v) {
  const long long U = u, V = v;
  return V * (V - 1) / 2 - U * (U - 1) / 2;
}

AdmissibilityReport admissible(int m, int u, int v) {
  if (m % 2 == 0) fail(ErrorKind::Unsupported, "only odd cycle lengths are supported");
  if (m < 3 || u < 0 || u >= v) fail(ErrorKind::InvalidParameters, "need m >= 3 and 0 <= u < v");
  const long long M = m, U = u, V = v;
  AdmissibilityReport r;
  r.n1 = u % 2 == 1 && v % 2 == 1;
  r.n2 = holed_edge_count(u, v) % m == 0;
  r.n3 = (V - 1) * (M - 1) >= U * (M + 1);
  r.n4 = (V - M) * (V - 1) >= U * (U - 1);
  return r;
}

int nu(int m, int u) {
  if (m % 2 == 0) fail(ErrorKind::Unsupported, "only odd cycle lengths are supported");
  if (m < 3 || u < 1 || u % 2 == 0) fail(ErrorKind::InvalidParameters, "need m >= 3 and odd u >= 1");
  // Smallest y = u mod 2m with y >= u(m+1)/(m-1) + 1; (u, y) is always admissible.
  long long y = u;
  while (y <= u || (y - 1) * (m - 1) < static_cast<long long>(u) * (m + 1)) y += 2LL * m;
  for (int x = u + 1; x <= y; ++x)
    if (admissible(m, u, x).admissible()) return x;
  fail(ErrorKind::InternalInvariantViolation, "no admissible order below the congruence bound");
}

}  // namespace holey
