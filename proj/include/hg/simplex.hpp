#pragma once

#include <vector>

#include "hg/rational.hpp"

namespace hg {

// maximize c^T x subject to A x <= b, x >= 0, solved exactly over the
// rationals. Right-hand sides must be nonnegative (the slack basis is the
// starting point); every caller in this project satisfies that.
struct LinearProgram {
  std::vector<std::vector<Rat>> A;
  std::vector<Rat> b;
  std::vector<Rat> c;
};

enum class LpStatus { optimal, unbounded };

struct LpResult {
  LpStatus status = LpStatus::optimal;
  Rat value = 0;
  std::vector<Rat> x;
  unsigned long long pivots = 0;
};

// Bland's rule throughout, so the iteration terminates even on degenerate
// tableaus.
LpResult solve_lp(const LinearProgram& lp);

}  // namespace hg
