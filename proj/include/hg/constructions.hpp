#pragma once

#include "hg/core.hpp"
#include "hg/rational.hpp"
#include "hg/report.hpp"

namespace hg {

// All k-sets e of {1..nx+ny} with |e meet X| != a, where X = {1..nx}.
// Requires 0 <= a <= k, k <= nx+ny <= 64.
Hypergraph gen_split_kgraph(int k, int nx, int ny, int a);

// Verifies that g decomposes into exactly two tight components, one holding
// the edges with |e meet X| > a and one those with |e meet X| < a.
// Deviations are reported, not thrown.
struct SplitProfile {
  bool as_expected = false;
  std::vector<std::size_t> component_sizes;  // descending
  Report detail;
};
SplitProfile split_component_profile(const Hypergraph& g, int nx, int a);

// Complete k-graph on {1..(s+1)k-1} inside {1..n}. Requires (s+1)k-1 <= n.
Hypergraph gen_emc_clique(int n, int s, int k);

// All k-sets meeting {1..s}. Matching number is min(s, floor(n/k)).
Hypergraph gen_emc_cover(int n, int s, int k);

// Split-construction densities, computed in closed form so they work far
// beyond the 64-vertex graph cap: X-side nx, Y-side ny, a = floor(k/2).
struct DensityWitness {
  Rat edge_density;           // e(G) / binom(n,k)
  Rat max_component_density;  // larger side / binom(n,k)
};
DensityWitness ck_witness(int k, int nx, int ny);

// k = 3 split witness: edge density and (longest tight cycle)/n, exact.
struct CycleSpaceWitness {
  Rat edge_density;
  Rat cycle_ratio;
  bool search_complete = true;  // false if the cycle search hit its budget
};
CycleSpaceWitness eg3_witness(int nx, int ny, double time_limit_s = 60.0);

}  // namespace hg
