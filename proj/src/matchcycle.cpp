#include "hg/matchcycle.hpp"

#include <algorithm>
#include <chrono>
#include <unordered_map>

namespace hg {

namespace {

using Clock = std::chrono::steady_clock;

struct Deadline {
  Clock::time_point end;
  bool unlimited;
  bool hit = false;
  explicit Deadline(double seconds)
      : end(Clock::now() + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(seconds < 0 ? 0 : seconds))),
        unlimited(seconds <= 0) {}
  // checked every 256 nodes by callers
  bool expired() {
    if (hit) return true;
    if (!unlimited && Clock::now() >= end) hit = true;
    return hit;
  }
};

struct MatchSearch {
  const std::vector<VSet>& edges;
  int k;
  Deadline& dl;
  unsigned long long nodes = 0;
  int best = 0;
  std::vector<VSet> best_edges;
  std::vector<VSet> cur;
  int target;  // early exit when best >= target (target < 0: never)

  MatchSearch(const std::vector<VSet>& e, int k_, Deadline& d, int tgt)
      : edges(e), k(k_), dl(d), target(tgt) {}

  // used: matched vertices; banned: vertices decided to stay unmatched
  void run(VSet used, VSet banned) {
    if ((++nodes & 255u) == 0 && dl.expired()) return;
    VSet blocked = used | banned;
    // free vertices that still lie on an available edge, and pivot selection
    int deg[64] = {0};
    VSet active = 0;
    for (VSet e : edges) {
      if (e & blocked) continue;
      active |= e;
      VSet r = e;
      while (r) {
        ++deg[__builtin_ctzll(r)];
        r &= r - 1;
      }
    }
    int cnt = static_cast<int>(cur.size());
    if (cnt > best) {
      best = cnt;
      best_edges = cur;
    }
    if (target >= 0 && best >= target) return;
    if (cnt + vs_size(active) / k <= best) return;  // bound
    if (!active) return;
    int pivot = -1, pd = 1 << 30;
    VSet r = active;
    while (r) {
      int v = __builtin_ctzll(r);
      if (deg[v] < pd) {
        pd = deg[v];
        pivot = v;
      }
      r &= r - 1;
    }
    VSet pm = 1ull << pivot;
    for (VSet e : edges) {
      if ((e & pm) && !(e & blocked)) {
        cur.push_back(e);
        run(used | e, banned);
        cur.pop_back();
        if (dl.hit || (target >= 0 && best >= target)) return;
      }
    }
    run(used, banned | pm);  // leave the pivot unmatched
  }
};

}  // namespace

MatchingResult max_matching(const Hypergraph& g, double time_limit_s) {
  Deadline dl(time_limit_s);
  MatchSearch ms(g.edges, g.k, dl, -1);
  ms.run(0, 0);
  return {ms.best_edges, !dl.hit, ms.nodes};
}

TriState has_matching_of_size(const Hypergraph& g, int s, double time_limit_s) {
  if (s <= 0) return TriState::yes;
  Deadline dl(time_limit_s);
  MatchSearch ms(g.edges, g.k, dl, s);
  ms.run(0, 0);
  if (ms.best >= s) return TriState::yes;
  return dl.hit ? TriState::timeout : TriState::no;
}

bool verify_tight_cycle(const Hypergraph& g, const std::vector<int>& seq) {
  int l = static_cast<int>(seq.size());
  if (l < g.k + 1) return false;
  VSet seen = 0;
  for (int v : seq) {
    if (v < 1 || v > g.n || vs_has(seen, v)) return false;
    seen |= vs_single(v);
  }
  for (int i = 0; i < l; ++i) {
    VSet w = 0;
    for (int d = 0; d < g.k; ++d) w |= vs_single(seq[(i + d) % l]);
    if (!g.has_edge(w)) return false;
  }
  return true;
}

namespace {

// DFS state shared by the cycle searches. Extensions are looked up through
// the map (k-1)-subset -> bitmask of completing vertices.
struct CycleSearch {
  const Hypergraph& g;
  int k;
  std::unordered_map<VSet, VSet> ext;
  Deadline& dl;
  unsigned long long nodes = 0;

  CycleSearch(const Hypergraph& g_, const std::vector<VSet>& edges, Deadline& d)
      : g(g_), k(g_.k), dl(d) {
    for (VSet e : edges) {
      VSet r = e;
      while (r) {
        VSet low = r & (~r + 1);
        ext[e & ~low] |= low;
        r &= r - 1;
      }
    }
  }

  VSet extensions(const std::vector<int>& path) const {
    int t = static_cast<int>(path.size());
    if (t < k - 1) return vs_full(g.n);
    VSet w = 0;
    for (int d = 0; d < k - 1; ++d) w |= vs_single(path[t - 1 - d]);
    auto it = ext.find(w);
    return it == ext.end() ? 0 : it->second;
  }

  // Fixed-length-l cycle with minimum vertex path[0]; hamilton mode (l == n)
  // additionally prunes on reachability of unvisited vertices.
  bool dfs(std::vector<int>& path, VSet visited, int l, bool hamilton) {
    if ((++nodes & 255u) == 0 && dl.expired()) return false;
    int t = static_cast<int>(path.size());
    if (t == l) {
      std::vector<int> cand = path;
      return verify_tight_cycle(g, cand);
    }
    // not enough unvisited vertices above the anchor to reach length l
    VSet pool = ~visited & vs_full(g.n) & ~(vs_single(path[0]) - 1);
    if (vs_size(pool) < l - t) return false;
    VSet cand = extensions(path) & pool;
    if (hamilton && !frontier_ok(path, visited)) return false;
    VSet r = cand;
    while (r) {
      int v = __builtin_ctzll(r) + 1;
      r &= r - 1;
      path.push_back(v);
      if (dfs(path, visited | vs_single(v), l, hamilton)) return true;
      path.pop_back();
      if (dl.hit) return false;
    }
    return false;
  }

  // Sound prune: in any completion to a spanning cycle, an unvisited vertex
  // can only ever share a window with unvisited vertices, the last k-1 of the
  // path, or the first k-1 of the path. If some unvisited vertex has no edge
  // inside that allowance, no completion exists.
  bool frontier_ok(const std::vector<int>& path, VSet visited) const {
    int t = static_cast<int>(path.size());
    VSet allowed = ~visited & vs_full(g.n);
    for (int d = 0; d < k - 1 && d < t; ++d) allowed |= vs_single(path[t - 1 - d]);
    for (int d = 0; d < k - 1 && d < t; ++d) allowed |= vs_single(path[d]);
    VSet unv = ~visited & vs_full(g.n);
    VSet r = unv;
    while (r) {
      int v = __builtin_ctzll(r) + 1;
      r &= r - 1;
      bool ok = false;
      for (VSet e : g.edges) {
        if (vs_has(e, v) && (e & ~allowed) == 0) {
          ok = true;
          break;
        }
      }
      if (!ok) return false;
    }
    return true;
  }
};

}  // namespace

CycleResult longest_tight_cycle(const Hypergraph& g, double time_limit_s, bool min_len_2k) {
  CycleResult res;
  Deadline dl(time_limit_s);
  CycleSearch cs(g, g.edges, dl);
  int min_len = min_len_2k ? 2 * g.k : g.k + 1;
  for (int l = g.n; l >= min_len && !dl.hit; --l) {
    bool found = false;
    for (int v1 = 1; v1 + l - 1 <= g.n && !found && !dl.hit; ++v1) {
      std::vector<int> path{v1};
      if (cs.dfs(path, vs_single(v1), l, false)) {
        res.length = l;
        res.cycle = path;
        found = true;
      }
    }
    if (found) break;
  }
  res.timed_out = dl.hit;
  res.nodes = cs.nodes;
  return res;
}

HamiltonResult has_tight_hamilton(const Hypergraph& g, double time_limit_s) {
  HamiltonResult res;
  if (g.n < g.k + 1) {
    res.status = TriState::no;
    res.obstruction = "fewer than k+1 vertices";
    return res;
  }
  auto comps = tight_components(g);
  Deadline dl(time_limit_s);
  bool any_spanning = false;
  for (const auto& comp : comps) {
    VSet cover = 0;
    for (VSet e : comp) cover |= e;
    if (cover != vs_full(g.n)) continue;
    any_spanning = true;
    // search restricted to this component's edges
    Hypergraph sub(g.k, g.n);
    sub.edges = comp;
    sub.sort_edges();
    CycleSearch cs(sub, sub.edges, dl);
    std::vector<int> path{1};
    bool found = cs.dfs(path, vs_single(1), g.n, true);
    res.nodes += cs.nodes;
    if (found) {
      // post-hoc: re-verify windows and single-component containment
      if (!verify_tight_cycle(g, path))
        throw ContractViolation("hamilton: certificate failed re-verification");
      for (int i = 0; i < g.n; ++i) {
        VSet w = 0;
        for (int d = 0; d < g.k; ++d) w |= vs_single(path[(i + d) % g.n]);
        if (!std::binary_search(comp.begin(), comp.end(), w, lex_less))
          throw ContractViolation("hamilton: certificate leaves its tight component");
      }
      res.status = TriState::yes;
      res.cycle = path;
      return res;
    }
    if (dl.hit) break;
  }
  if (dl.hit) {
    res.status = TriState::timeout;
    res.obstruction = "time limit reached";
  } else if (!any_spanning) {
    res.status = TriState::no;
    res.obstruction = "no tight component spans all vertices";
  } else {
    res.status = TriState::no;
    res.obstruction = "exhausted search space";
  }
  return res;
}

}  // namespace hg
