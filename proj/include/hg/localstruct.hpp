#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hg/rational.hpp"
#include "hg/report.hpp"

namespace hg {

// Local configurations live on three ordered disjoint triples
//   M1 = (i1,j1,k1), M2 = (i2,j2,k2), M3 = (i3,j3,k3)
// over nine abstract vertices.  Positions are numbered 0..8 as
// 3*triple + role with roles 0=i, 1=j, 2=k.  The role order encodes the
// within-triple weight order used by all shift-closure checks: i is the
// smallest (most shifted-into) position, k the largest.

inline constexpr int kNumPositions = 9;
inline constexpr int kNumCrossingPairs = 27;
inline constexpr int kNumCrossingTriples = 27;

extern const std::array<std::string, 9> kPositionNames;  // i1,j1,k1,...,k3

constexpr int position_of(int triple, int role) { return 3 * triple + role; }
constexpr int triple_of(int pos) { return pos / 3; }
constexpr int role_of(int pos) { return pos % 3; }

// Crossing pairs take one vertex from each of two distinct triples.  They are
// indexed 0..26 as 9*pairclass + 3*role_lo + role_hi where pairclass
// 0 = (M1,M2), 1 = (M2,M3), 2 = (M1,M3) and role_lo belongs to the
// lower-numbered triple.
int crossing_pair_index(int pos_a, int pos_b);            // order-insensitive
std::array<int, 2> crossing_pair_positions(int pair_idx); // lower triple first

// Crossing triples take one vertex from every triple; index 9*a+3*b+c where
// a,b,c are the roles used in M1,M2,M3.
constexpr int crossing_triple_index(int role1, int role2, int role3) {
  return 9 * role1 + 3 * role2 + role3;
}
std::array<int, 3> crossing_triple_positions(int triple_idx);

struct TripleSystem {
  // M[t][r] = vertex id of role r in triple t; ids are arbitrary but must be
  // nine distinct values.  The canonical system uses ids 0..8 equal to the
  // position numbers.
  std::array<std::array<int, 3>, 3> M;

  static TripleSystem canonical();
  // Throws std::invalid_argument if the nine entries are not distinct.
  void validate() const;
};

// A two-coloured local configuration.  Bit v of r1/b1 selects position v as a
// red/blue singleton; bit p of r2/b2 selects crossing pair p; bit t of r3/b3
// selects crossing triple t.
struct LocalConfig {
  std::uint16_t r1 = 0;
  std::uint16_t b1 = 0;
  std::uint32_t r2 = 0;
  std::uint32_t b2 = 0;
  std::uint32_t r3 = 0;
  std::uint32_t b3 = 0;

  bool operator==(const LocalConfig&) const = default;
};

// Structural invariant labels reported by validate_config:
//   a  blue closure: endpoints of B2 pairs lie in B1, sub-pairs of B3 in B2
//   b  red/blue edges of size >= 2 pairwise share at most one vertex
//   c  steadiness: no three pairwise disjoint chosen edges (among the three
//      base triples, red singletons, red pairs, red triples) whose union
//      meets the i-positions in at most two vertices
//   d  every edge is crossing (guaranteed by the index representation)
//   e  red pairs are closed under lowering a role towards i, blue pairs under
//      raising a role towards k (within-triple order, per grid)
//   g  blue pairs between two triples form a star at the k of the higher one
//   h  red singletons sit at i-positions; at most five red pairs between two
//      triples, five only for the exceptional lowered pattern
//   j  with >= 20 red triples every grid has at most four red pairs; with
//      >= 22 and four pairs in every grid, none may touch a k position
struct ValidationResult {
  bool ok = true;
  std::vector<std::string> violated;  // label strings, ascending
};

ValidationResult validate_config(const LocalConfig& cfg);

// Renders a configuration as section lines (R1:/R2:/R3:/B1:/B2:/B3:) using
// the position names.  Deterministic: ascending index order.
std::string format_config(const LocalConfig& cfg);

// Fractional weights on the selected singletons and pairs.  Entries for
// unselected items stay zero.
struct WeightAssignment {
  std::array<Rat, kNumPositions> r_single{};
  std::array<Rat, kNumPositions> b_single{};
  std::array<Rat, kNumCrossingPairs> r_pair{};
  std::array<Rat, kNumCrossingPairs> b_pair{};
};

struct WeightOptimum {
  Rat q1;  // singleton mass at the optimum
  Rat q2;  // pair mass at the optimum
  WeightAssignment assignment;
  long pivots = 0;
};

// Maximizes beta^2*q1 + beta*q2 over [0,1]-weights subject to the opposed
// pair constraints (red weight + blue weight <= 1 whenever the supports
// interact) and the within-triple blue chain b(i) <= b(j) <= b(k).
// Exact rational simplex.  Requires beta >= 1.
WeightOptimum max_weight_lp(const LocalConfig& cfg, const Rat& beta);

// f(sigma) = sigma^3 (beta^3 + s beta^2 + p beta + t) with beta = 1/sigma - 3,
// evaluated exactly.  Requires 0 < sigma <= 1/3.
Rat f_spt(const Rat& sigma, const Rat& s, const Rat& p, const Rat& t);

// Certified range endpoints for the sigma sweep.  sigma_lower() is an exact
// rational located within 10^-18 below 1 - 2^(-1/3), so the swept interval
// contains the target interval.
const Rat& sigma_lower();
const Rat& sigma_upper();  // 1/4

struct SigmaFrame {
  Rat sigma;
  Rat beta;  // 1/sigma - 3, >= 1 throughout the sweep range
  Rat q1;
  Rat q2;
};

SigmaFrame make_sigma_frame(const Rat& sigma, const Rat& q1, const Rat& q2);

// Value of a configuration at a given sigma: frame weight from the LP optimum
// plus the triple count, i.e. sigma^3 (beta^3 + q1* beta^2 + q2* beta + t)
// with t = |R3 u B3|.
Rat config_value(const LocalConfig& cfg, const Rat& sigma);

// --- bounded-value fact ----------------------------------------------------

struct FactTriple {
  int s, p, t;
};

// The eleven (s,p,t) triples whose value functions stay below 5/8.
const std::vector<FactTriple>& fact_triples();

struct FactResult {
  FactTriple triple;
  Rat grid_max;       // best value on the sigma grid
  Rat grid_argmax;
  Rat refined_max;    // after interior refinement around the best grid point
  Rat refined_argmax;
  Rat certified_max;  // rigorous upper bound for sup over the whole interval
  Rat refine_gap;     // certified_max - refined_max (>= 0)
  bool pass = false;  // certified_max <= 5/8 + tol
};

struct FactReport {
  bool pass = false;
  std::vector<FactResult> results;
};

FactReport check_fact(const std::vector<FactTriple>& triples, const Rat& tol,
                      const Rat& grid_step = Rat(1, 1000));

// --- index monotonicity ----------------------------------------------------

struct MonotonicityViolation {
  Rat sigma;
  Rat x;
  Rat lhs;  // f_{s,p+x,t}(sigma)
  Rat rhs;  // f_{s+x,p,t}(sigma)
};

struct MonotonicityReport {
  bool pass = true;
  long checks = 0;
  std::optional<MonotonicityViolation> first_violation;
};

// Checks f_{s,p+x,t}(sigma) <= f_{s+x,p,t}(sigma) for every x in xs and every
// sigma on the grid over [sigma_lower(), sigma_upper()], exactly.
MonotonicityReport check_monotonicity(const Rat& s, const Rat& p, const Rat& t,
                                      const std::vector<Rat>& xs,
                                      const Rat& grid_step = Rat(1, 1000));

// --- two-triple pair bound ---------------------------------------------------

// A configuration restricted to an ordered pair of triples (Ma, Mb): red
// singletons at the two i-positions, red pairs in the 3x3 grid between the
// triples, blue pairs forming a star at the k of the higher triple.
struct PairConfig {
  std::uint8_t r1 = 0;      // bit 0: i of first triple, bit 1: i of second
  std::uint16_t r2 = 0;     // bits 0..8: 3*role_first + role_second
  std::uint8_t b2_legs = 0; // star legs at the centre, by role of the far end
  int centre_triple = 1;    // 0: star centred at k of first, 1: at k of second
};

struct StrahlungResult {
  Rat q_max;       // LP optimum of q1+q2 over the pair
  bool main_ok;    // q_max <= 6
  // Refinement 1: no red pair touches either k position; then
  // q - b(k_a k_b) <= 5.
  bool refine1_applicable = false;
  Rat refine1_value;
  bool refine1_ok = true;
  // Refinement 2: at most one blue pair; then 2*q1 + q2 <= 7.
  bool refine2_applicable = false;
  Rat refine2_value;
  bool refine2_ok = true;
};

// Verifies the pairwise weight bound for one two-triple configuration at the
// given beta (>= 1).  The bound itself is beta-free; beta only selects the
// frame the caller is working in.
StrahlungResult check_claim_strahlung(const PairConfig& pc, const Rat& beta);

// --- full local-structure verification --------------------------------------

struct VerifyOptions {
  Rat grid_step = Rat(1, 1000);
  Rat tol = Rat(1, 1000000000);
  Rat attain_window = Rat(1, 1000000);  // witness must reach 5/8 minus this
  int workers = 1;
  bool exhaustive = false;  // lift the shift-closure restriction on red triples
};

struct ClaimReport {
  std::string name;
  bool pass = false;
  Report details;
};

struct VerificationReport {
  bool pass = false;
  Rat global_max_lower;   // best attained value (exact, at witness_sigma)
  Rat global_max_upper;   // certified upper bound over all configs and sigma
  Rat witness_sigma;
  LocalConfig witness;
  std::uint64_t configs = 0;      // (R1,R2,B2,B3) combinations valued
  std::uint64_t lp_classes = 0;   // distinct weight frontiers computed
  std::uint64_t exceedances = 0;  // configs whose certified value > 5/8 + tol
  std::vector<ClaimReport> claims;
  Report report;  // flat deterministic key=value summary
};

VerificationReport verify_local_structure(const VerifyOptions& opts);

// Re-verifies the structural claims that need no configuration sweep: the
// two-triple pair bound over all pair configurations, the blue-triple
// structure, the red-triple cap derivation, and the exclusion counting bounds.
std::vector<ClaimReport> verify_claims_standalone(const VerifyOptions& opts);

}  // namespace hg
