#pragma once

#include <vector>

#include "hg/core.hpp"
#include "hg/rational.hpp"
#include "hg/report.hpp"

namespace hg {

// Two-colouring of a subset of the pairs on {1..n}; red and blue disjoint.
struct EdgeColouring2 {
  int n = 0;
  std::vector<VSet> red;
  std::vector<VSet> blue;
  void validate() const;
};

// (red mono triangles, blue mono triangles): triangles all of whose pairs
// have the one colour.
std::pair<long long, long long> count_mono_triangles(const EdgeColouring2& c);

// ---- mu: densest distinguishable pair with a sparse-side constraint ----
// Family: pairs (R,B) of 3-graphs on {1..n}, distinguishable, with
// m(R) <= s and e(R) > t. Value: max e(R) + e(B).
struct MuResult {
  bool family_nonempty = false;
  long long value = 0;
  // canonical witnesses: R left-shifted, B the full set of triples meeting
  // every red edge in at most one vertex (the unique maximal choice)
  std::vector<ColouredPair> witnesses;
  unsigned long long nodes = 0;
};

// Canonical enumeration: left-shifted R only (down-sets of the coordinate
// dominance order), B always the maximal compatible set.
MuResult mu_bruteforce(int n, int s, long long t);
// Oracle: every R subset of all triples. n <= 6.
MuResult mu_unrestricted(int n, int s, long long t);

// max e(R) + |compat(R)| grouped by (matching number of R, e(R)); -1 where
// empty. mu(s,t) = max over m <= s, e > t. Lets one acceptance sweep cover
// every (s,t) cell with a single enumeration.
using MuTable = std::vector<std::vector<long long>>;
MuTable mu_table_canonical(int n, unsigned long long* nodes = nullptr);
MuTable mu_table_unrestricted(int n, unsigned long long* nodes = nullptr);
long long mu_from_table(const MuTable& table, int s, long long t);  // -1 if family empty

// ---- maximum edges with bounded matching number (k = 3) ----
struct EmcResult {
  long long value = 0;
  Hypergraph witness;
  unsigned long long nodes = 0;
};
// Branch and bound over left-shifted families (down-sets in dominance
// order), pruning on matching number and on best-possible completions.
EmcResult emc_max_edges(int n, int s);

// ---- pair colourings maximizing mono triangles ----
struct MonoResult {
  bool feasible = false;
  long long total = 0;  // red + blue mono triangles at the optimum
  EdgeColouring2 witness;
  unsigned long long nodes = 0;
};
// Maximize (#red mono) + (#blue mono) over colourings with both counts
// >= tmin. Blue is always the complement of the red pair set: completing
// blue maximally never hurts either count. n <= 7 directly; n = 8 only
// with allow_large (long exhaustive run); larger n refused.
MonoResult mono_triangle_extremum(int n, long long tmin, bool allow_large = false);

// ---- partition of a dense 3-graph into two distinguishable halves ----
// Pure arithmetic core, also driven directly by randomized profile tests.
// comp_sizes: edge counts of tight components, descending. total_ksets =
// binom(n,3). Components are accumulated (largest first) until the prefix
// reaches (1/8+eps)*total_ksets; that prefix is R, the rest B.
struct ProfileCuts {
  bool hypothesis_failed = false;  // prefix never reached the threshold
  int prefix_len = 0;              // number of components in R
  long long e_red = 0, e_blue = 0;
  bool hyp_total_lower = false;  // e(G) >= (5/8+eps) * N
  bool hyp_comp_upper = false;   // every component < (1/2+eps) * N
  bool hyp_total_upper = false;  // e(G) <= (5/8+2eps) * N
  // consequences, guaranteed whenever all three hypotheses hold:
  bool concl_min_share = false;  // min(e_red, e_blue) > N/8
  bool concl_red_upper = false;  // e_red < (1/2+eps) * N
  bool concl_blue_upper = false; // e_blue <= (1/2+eps) * N
};
ProfileCuts partition_profile(const std::vector<long long>& comp_sizes_desc,
                              const mpz_class& total_ksets, const Rat& eps);

struct PartitionResult {
  std::vector<VSet> red, blue;  // unions of tight components
  ProfileCuts cuts;
  Report diagnostics;
};
// Requires k = 3 and 0 < eps < 1/16.
PartitionResult connection_partition(const Hypergraph& g, const Rat& eps);

}  // namespace hg
