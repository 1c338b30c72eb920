#pragma once

// Internal machinery shared by the local-structure modules: index tables over
// the nine positions, down-set enumeration for crossing triples, exact cubic
// range analysis for the sigma sweep, and the integral weight frontier used
// to accelerate the per-configuration LP.

#include <array>
#include <cstdint>
#include <vector>

#include "hg/localstruct.hpp"
#include "hg/rational.hpp"

namespace hg::detail {

inline constexpr std::uint16_t kIMask = 0b001001001;  // positions i1,i2,i3
inline constexpr std::uint16_t kKMask = 0b100100100;  // positions k1,k2,k3

struct LocalTables {
  // crossing pairs
  std::array<std::array<int, 2>, 27> pair_pos;  // positions, lower triple first
  std::array<std::uint16_t, 27> pair_vmask;
  std::array<int, 27> pair_grid;  // 0=(M1,M2) 1=(M2,M3) 2=(M1,M3)
  std::array<int, 27> pair_cell;  // 3*role_lo + role_hi
  std::array<std::array<int, 9>, 3> grid_pair;  // [grid][cell] -> pair index
  std::array<std::uint32_t, 27> pair_overlap;   // pairs sharing >=1 vertex (incl self)
  // crossing triples
  std::array<std::array<int, 3>, 27> tri_roles;
  std::array<std::uint16_t, 27> tri_vmask;
  std::array<std::uint32_t, 27> tri_preds;   // lower one role by one
  std::array<std::uint32_t, 27> tri_disj;    // disjoint triples (differ in all roles)
  std::array<std::uint32_t, 27> tri_near;    // triples sharing >=2 positions (incl self)
  std::array<std::uint32_t, 27> pair_sub3;   // triples containing pair p
  std::array<std::uint32_t, 9> touch_pairs;  // pairs containing position v
  // blue stars: one per grid, centred at the k of the higher triple
  std::array<int, 3> star_centre;                  // centre position
  std::array<std::array<int, 3>, 3> star_leg_pair; // [grid][leg role] -> pair index
  std::array<int, 3> star_leg_triple;              // triple holding the legs
};

const LocalTables& tab();

// Down-closed sets of crossing triples under the within-triple role order,
// sorted by descending size, then ascending mask.
struct Ideal {
  std::uint32_t mask;
  int size;
};
const std::vector<Ideal>& triple_ideals();

// Per-grid red pair patterns compatible with the closure and pair-cap rules:
// the ten down-closed cell sets of size <= 4 plus the exceptional five-cell
// pattern.  9-bit cell masks sorted by (size, mask).
const std::vector<std::uint16_t>& red_grid_cells();

// Blue star leg selections per grid, up-closed in the role order:
// {}, {k}, {j,k}, {i,j,k} as role bitmasks.
const std::array<std::uint8_t, 4>& blue_leg_masks();

// True if some three pairwise disjoint edges in the list have a union meeting
// the i-positions in at most two vertices.  Callers include the base triples.
bool steady_violation_exists(const std::vector<std::uint16_t>& edges);

// Exact maximum analysis of c0 + c1 x + c2 x^2 + c3 x^3 over [lo, hi].
// `attained` is an exact value of the polynomial at `arg`; `upper` is a
// certified bound for the true supremum (upper - attained is the certification
// slack, controlled by bracket_width at interior critical points).
struct CubicMax {
  Rat attained;
  Rat arg;
  Rat upper;
};
CubicMax cubic_max(const std::array<Rat, 4>& c, const Rat& lo, const Rat& hi,
                   const Rat& bracket_width);

// Coefficients of sigma^3 (beta^3 + q1 beta^2 + q2 beta + t) as a cubic in
// sigma, with beta = 1/sigma - 3.
std::array<Rat, 4> value_coeffs(const Rat& q1, const Rat& q2, const Rat& t);

// Supremum of the value cubic over the sweep range [sigma_lower(), 1/4].
CubicMax value_sup(const Rat& q1, const Rat& q2, long t);

// Pareto-maximal (q1, q2) pairs over integral weightings of a configuration
// whose blue singleton set is all nine positions.  Covers the LP optimum for
// every beta > 0.
struct FrontierPoint {
  int q1;
  int q2;
};
std::vector<FrontierPoint> weight_frontier(std::uint16_t r1, std::uint32_t r2,
                                           std::uint32_t b2);

}  // namespace hg::detail
