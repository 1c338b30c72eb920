#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hg {

// Vertex subsets are bitmasks over 1-based vertex ids: vertex v <-> bit (v-1).
// This caps n at 64, which covers every search this library can finish anyway.
using VSet = std::uint64_t;

inline int vs_size(VSet s) { return __builtin_popcountll(s); }
inline VSet vs_full(int n) { return n >= 64 ? ~0ull : ((1ull << n) - 1); }
inline bool vs_has(VSet s, int v) { return (s >> (v - 1)) & 1ull; }
inline VSet vs_single(int v) { return 1ull << (v - 1); }
inline int vs_min(VSet s) { return __builtin_ctzll(s) + 1; }  // pre: s != 0

std::vector<int> vs_elements(VSet s);
VSet vs_of(const std::vector<int>& vs);
std::string vs_str(VSet s);  // "1 2 5"

// Lexicographic order on the increasing-tuple form of two subsets.
inline bool lex_less(VSet a, VSet b) {
  if (a == b) return false;
  VSet d = a ^ b;
  return (a >> __builtin_ctzll(d)) & 1ull;
}

// Thrown on malformed input files; line is 1-based.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what_)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

// Violation of a documented call contract (as opposed to a bad argument value).
struct ContractViolation : std::logic_error {
  using std::logic_error::logic_error;
};

// k-uniform hypergraph on vertex set {1..n}. Edges are stored as bitmasks,
// kept unique and sorted in lexicographic tuple order.
struct Hypergraph {
  int k = 0;
  int n = 0;
  std::vector<VSet> edges;

  Hypergraph() = default;
  Hypergraph(int k_, int n_) : k(k_), n(n_) {}
  Hypergraph(int k_, int n_, std::vector<VSet> edges_);

  std::size_t m() const { return edges.size(); }
  bool has_edge(VSet e) const;
  void add_edge(VSet e);     // keeps order; ignores duplicates
  VSet covered() const;      // union of all edges

  // Checks k/n ranges, uniformity, vertex bounds, uniqueness, order.
  void validate() const;     // throws std::invalid_argument
  void sort_edges();
};

// Two edge-disjoint k-graphs on the same vertex set {1..n}.
struct ColouredPair {
  int k = 0;
  int n = 0;
  std::vector<VSet> red;
  std::vector<VSet> blue;

  Hypergraph red_graph() const;
  Hypergraph blue_graph() const;
  void validate() const;  // uniformity, bounds, edge-disjointness
};

using Matching = std::vector<VSet>;  // pairwise disjoint edges

// Number of edges e with S a subset of e and e minus S inside W.
// W defaults to {1..n} minus S. Requires |S| <= k.
long long degree(const Hypergraph& g, VSet s, std::optional<VSet> w = std::nullopt);

// Minimum of degree(S) over all d-subsets S of {1..n}. Requires 0 <= d <= k.
long long min_d_degree(const Hypergraph& g, int d);

// (k-1)-graph of all (k-1)-subsets contained in an edge. Requires k >= 2.
Hypergraph shadow(const Hypergraph& g);

inline bool tight_adjacent(int k, VSet e, VSet f) {
  return e != f && vs_size(e & f) == k - 1;
}

// Partition of the edge set into tight components (classes of the
// transitive closure of tight adjacency). Components are sorted by
// size descending, ties by lexicographically smallest edge; edges inside
// a component keep lexicographic order.
std::vector<std::vector<VSet>> tight_components(const Hypergraph& g);

// True iff the edge set is nonempty, forms a single tight component and
// every vertex of {1..n} lies in some edge.
bool is_tightly_connected(const Hypergraph& g);

// True iff every red and blue edge share at most one vertex.
// Throws std::invalid_argument if the two graphs disagree on k or n.
bool distinguishable(const Hypergraph& r, const Hypergraph& b);
bool distinguishable(const ColouredPair& p);

// All r-subsets of the vertices of the matching that meet every matching
// edge in at most one vertex, in lexicographic order. Requires the edges
// of m to be pairwise disjoint and r >= 0.
std::vector<VSet> crossing_sets(const Matching& m, int r);

// ---- file formats ----
// .hg   : '#' comments; first data line "k n"; then one edge per line as
//         k strictly increasing 1-based vertex ids.
// .hgp  : same header; then a line "R:", red edges, a line "B:", blue edges.
Hypergraph parse_hypergraph(std::istream& in);
ColouredPair parse_coloured_pair(std::istream& in);
Hypergraph load_hypergraph(const std::string& path);
ColouredPair load_coloured_pair(const std::string& path);
void emit_hypergraph(std::ostream& out, const Hypergraph& g);
void emit_coloured_pair(std::ostream& out, const ColouredPair& p);
void save_hypergraph(const std::string& path, const Hypergraph& g);
void save_coloured_pair(const std::string& path, const ColouredPair& p);

// All k-subsets of {1..n} in lexicographic order.
std::vector<VSet> all_ksets(int n, int k);

}  // namespace hg
