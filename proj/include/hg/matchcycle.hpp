#pragma once

#include <string>
#include <vector>

#include "hg/core.hpp"

namespace hg {

enum class TriState { no, yes, timeout };

inline const char* tristate_str(TriState t) {
  switch (t) {
    case TriState::no: return "false";
    case TriState::yes: return "true";
    default: return "timeout";
  }
}

struct MatchingResult {
  Matching matching;  // best matching found
  bool optimal;       // false iff the time limit cut the search
  unsigned long long nodes = 0;
};

// Branch and bound on the vertex of minimum positive degree; bound is
// |matching| + floor(free vertices / k).
MatchingResult max_matching(const Hypergraph& g, double time_limit_s = 60.0);

// Early-exit decision version.
TriState has_matching_of_size(const Hypergraph& g, int s, double time_limit_s = 60.0);

struct CycleResult {
  int length = 0;          // 0 when no admissible cycle was found
  std::vector<int> cycle;  // cyclic vertex sequence, 1-based
  bool timed_out = false;
  unsigned long long nodes = 0;
};

// Longest tight cycle. A tight cycle visits distinct vertices cyclically with
// every k consecutive vertices forming an edge; admissible lengths start at
// k+1 (or 2k when min_len_2k is set).
CycleResult longest_tight_cycle(const Hypergraph& g, double time_limit_s = 60.0,
                                bool min_len_2k = false);

struct HamiltonResult {
  TriState status = TriState::no;
  std::vector<int> cycle;   // certificate when status == yes
  std::string obstruction;  // reason when status == no
  unsigned long long nodes = 0;
};

// Tight Hamilton cycle decision with certificate. Certificates are
// re-verified window by window and checked to live in one tight component.
HamiltonResult has_tight_hamilton(const Hypergraph& g, double time_limit_s = 60.0);

// True iff seq consists of distinct vertices of {1..n}, has length >= k+1,
// and every k cyclically consecutive vertices form an edge.
bool verify_tight_cycle(const Hypergraph& g, const std::vector<int>& seq);

}  // namespace hg
