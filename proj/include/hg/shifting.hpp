#pragma once

#include "hg/core.hpp"

namespace hg {

// Simultaneous (i,j)-shift: every edge containing i but not j is replaced by
// (e - i + j) unless that set is already an edge. Requires i, j in {1..n}
// and i != j. Preserves the number of edges.
Hypergraph shift(const Hypergraph& g, int i, int j);

// Closed under replacing any vertex of an edge by a smaller unused one.
bool is_left_shifted(const Hypergraph& g);
// Closed under replacing any vertex of an edge by a larger unused one.
bool is_right_shifted(const Hypergraph& g);

struct ClosureResult {
  Hypergraph graph;
  int sweeps;  // full lexicographic (i,j)-sweeps, including the final no-op sweep
};
ClosureResult left_shift_closure(const Hypergraph& g);
ClosureResult right_shift_closure(const Hypergraph& g);

// One coupled move on a coloured pair, i < j: red edges shift j -> i (down),
// blue edges shift i -> j (up). This is the direction that preserves
// distinguishability. Requires i < j (std::invalid_argument) and a
// distinguishable input pair (ContractViolation).
ColouredPair shift_pair(const ColouredPair& p, int i, int j);

struct PairClosureResult {
  ColouredPair pair;
  int rounds;  // alternating red-sweep/blue-sweep rounds, including final no-op
};
// Alternates full red-down sweeps and blue-up sweeps until a joint fixpoint:
// red ends left-shifted, blue ends right-shifted, distinguishability intact.
PairClosureResult canonicalize_pair(const ColouredPair& p);

}  // namespace hg
