#include "hg/shifting.hpp"

#include <algorithm>

namespace hg {

Hypergraph shift(const Hypergraph& g, int i, int j) {
  if (i < 1 || i > g.n || j < 1 || j > g.n) throw std::invalid_argument("shift: vertex out of range");
  if (i == j) throw std::invalid_argument("shift: i and j must differ");
  VSet vi = vs_single(i), vj = vs_single(j);
  Hypergraph out(g.k, g.n);
  out.edges.reserve(g.edges.size());
  for (VSet e : g.edges) {
    if ((e & vi) && !(e & vj)) {
      VSet t = (e & ~vi) | vj;
      out.edges.push_back(g.has_edge(t) ? e : t);
    } else {
      out.edges.push_back(e);
    }
  }
  out.sort_edges();
  return out;
}

bool is_left_shifted(const Hypergraph& g) {
  for (VSet e : g.edges) {
    for (int v : vs_elements(e)) {
      for (int u = 1; u < v; ++u) {
        if (vs_has(e, u)) continue;
        if (!g.has_edge((e & ~vs_single(v)) | vs_single(u))) return false;
      }
    }
  }
  return true;
}

bool is_right_shifted(const Hypergraph& g) {
  for (VSet e : g.edges) {
    for (int v : vs_elements(e)) {
      for (int u = v + 1; u <= g.n; ++u) {
        if (vs_has(e, u)) continue;
        if (!g.has_edge((e & ~vs_single(v)) | vs_single(u))) return false;
      }
    }
  }
  return true;
}

namespace {

// One full lexicographic sweep of all moves; left: j -> i, right: i -> j.
Hypergraph sweep_once(const Hypergraph& g, bool left) {
  Hypergraph cur = g;
  for (int i = 1; i <= g.n; ++i)
    for (int j = i + 1; j <= g.n; ++j) cur = left ? shift(cur, j, i) : shift(cur, i, j);
  return cur;
}

ClosureResult closure(const Hypergraph& g, bool left) {
  Hypergraph cur = g;
  cur.sort_edges();
  int sweeps = 0;
  while (true) {
    ++sweeps;
    Hypergraph nxt = sweep_once(cur, left);
    if (nxt.edges == cur.edges) break;
    cur = std::move(nxt);
  }
  return {std::move(cur), sweeps};
}

}  // namespace

ClosureResult left_shift_closure(const Hypergraph& g) { return closure(g, true); }
ClosureResult right_shift_closure(const Hypergraph& g) { return closure(g, false); }

ColouredPair shift_pair(const ColouredPair& p, int i, int j) {
  if (i >= j) throw std::invalid_argument("shift_pair: requires i < j");
  if (!distinguishable(p)) throw ContractViolation("shift_pair: input pair is not distinguishable");
  Hypergraph r = p.red_graph(), b = p.blue_graph();
  ColouredPair out;
  out.k = p.k;
  out.n = p.n;
  out.red = shift(r, j, i).edges;
  out.blue = shift(b, i, j).edges;
  return out;
}

PairClosureResult canonicalize_pair(const ColouredPair& p) {
  if (!distinguishable(p))
    throw ContractViolation("canonicalize_pair: input pair is not distinguishable");
  ColouredPair cur = p;
  std::sort(cur.red.begin(), cur.red.end(), lex_less);
  std::sort(cur.blue.begin(), cur.blue.end(), lex_less);
  int rounds = 0;
  while (true) {
    ++rounds;
    ColouredPair nxt = cur;
    // red sweep (down), then blue sweep (up)
    Hypergraph r = nxt.red_graph();
    r = sweep_once(r, true);
    nxt.red = r.edges;
    Hypergraph b = nxt.blue_graph();
    b = sweep_once(b, false);
    nxt.blue = b.edges;
    if (nxt.red == cur.red && nxt.blue == cur.blue) break;
    cur = std::move(nxt);
  }
  return {std::move(cur), rounds};
}

}  // namespace hg
