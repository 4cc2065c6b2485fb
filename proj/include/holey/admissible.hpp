#pragma once

namespace holey {

// Necessary conditions N1-N4 for an m-cycle decomposition of K_v - K_u.
struct AdmissibilityReport {
  bool n1 = false;  // u, v odd
  bool n2 = false;  // C(v,2) - C(u,2) divisible by m
  bool n3 = false;  // v >= u(m+1)/(m-1) + 1
  bool n4 = false;  // (v-m)(v-1) >= u(u-1)
  bool admissible() const { return n1 && n2 && n3 && n4; }
};

// Throws Unsupported for even m, InvalidParameters for m < 3 or u >= v.
AdmissibilityReport admissible(int m, int u, int v);

// Smallest x > u with (u, x) m-admissible.
int nu(int m, int u);

// Number of edges of K_v - K_u.
long long holed_edge_count(int u, int v);

}  // namespace holey
