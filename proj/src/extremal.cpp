#include "hg/extremal.hpp"

#include <algorithm>
#include <array>

namespace hg {

void EdgeColouring2::validate() const {
  if (n < 1 || n > 64) throw std::invalid_argument("EdgeColouring2: need 1 <= n <= 64");
  VSet full = vs_full(n);
  auto check_side = [&](const std::vector<VSet>& side) {
    for (VSet e : side) {
      if (vs_size(e) != 2) throw std::invalid_argument("EdgeColouring2: edge is not a pair");
      if (e & ~full) throw std::invalid_argument("EdgeColouring2: vertex outside {1..n}");
    }
  };
  check_side(red);
  check_side(blue);
  for (VSet e : red)
    for (VSet f : blue)
      if (e == f) throw std::invalid_argument("EdgeColouring2: red and blue overlap");
}

std::pair<long long, long long> count_mono_triangles(const EdgeColouring2& c) {
  c.validate();
  auto side_count = [&](const std::vector<VSet>& side) {
    long long cnt = 0;
    for (VSet t : all_ksets(c.n, 3)) {
      bool all = true;
      VSet rest = t;
      while (rest && all) {
        VSet low = rest & (~rest + 1);
        VSet pair = t & ~low;
        all = std::find(side.begin(), side.end(), pair) != side.end();
        rest &= rest - 1;
      }
      if (all) ++cnt;
    }
    return cnt;
  };
  return {side_count(c.red), side_count(c.blue)};
}

// ---------------------------------------------------------------- mu ----

namespace {

// Shared machinery for 3-graphs as triple-index bitmasks (n <= 7: <= 35 bits).
struct TripleSpace {
  int n;
  std::vector<VSet> triples;            // lex order
  std::vector<std::uint64_t> disj;      // disj[i]: triples disjoint from i
  std::vector<std::uint32_t> pair_mask; // pairs (lex index among 2-sets) inside triple i
  std::vector<std::uint64_t> pred;      // immediate dominance predecessors
  std::vector<VSet> pairs;

  explicit TripleSpace(int n_) : n(n_) {
    triples = all_ksets(n, 3);
    pairs = all_ksets(n, 2);
    std::size_t m = triples.size();
    auto tindex = [&](VSet t) {
      return static_cast<std::size_t>(
          std::lower_bound(triples.begin(), triples.end(), t, lex_less) - triples.begin());
    };
    disj.assign(m, 0);
    pair_mask.assign(m, 0);
    pred.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j)
        if (!(triples[i] & triples[j])) disj[i] |= 1ull << j;
      for (std::size_t p = 0; p < pairs.size(); ++p)
        if ((triples[i] & pairs[p]) == pairs[p]) pair_mask[i] |= 1u << p;
      auto [a, b, c] = std::array<int, 3>{vs_elements(triples[i])[0], vs_elements(triples[i])[1],
                                          vs_elements(triples[i])[2]};
      if (a - 1 >= 1) pred[i] |= 1ull << tindex(vs_of({a - 1, b, c}));
      if (b - 1 > a) pred[i] |= 1ull << tindex(vs_of({a, b - 1, c}));
      if (c - 1 > b) pred[i] |= 1ull << tindex(vs_of({a, b, c - 1}));
    }
  }

  // max matching of the chosen set, capped at 2 (n <= 7 never fits 3 disjoint)
  int matching_upto2(std::uint64_t chosen) const {
    if (!chosen) return 0;
    std::uint64_t r = chosen;
    while (r) {
      int i = __builtin_ctzll(r);
      r &= r - 1;
      if (chosen & disj[i]) return 2;
    }
    return 1;
  }

  long long compat_count(std::uint64_t chosen) const {
    std::uint32_t shade = 0;
    std::uint64_t r = chosen;
    while (r) {
      shade |= pair_mask[__builtin_ctzll(r)];
      r &= r - 1;
    }
    long long c = 0;
    for (std::size_t i = 0; i < triples.size(); ++i)
      if (!(pair_mask[i] & shade)) ++c;
    return c;
  }

  std::vector<VSet> edge_list(std::uint64_t chosen) const {
    std::vector<VSet> out;
    std::uint64_t r = chosen;
    while (r) {
      out.push_back(triples[__builtin_ctzll(r)]);
      r &= r - 1;
    }
    return out;
  }

  std::vector<VSet> compat_list(std::uint64_t chosen) const {
    std::uint32_t shade = 0;
    std::uint64_t r = chosen;
    while (r) {
      shade |= pair_mask[__builtin_ctzll(r)];
      r &= r - 1;
    }
    std::vector<VSet> out;
    for (std::size_t i = 0; i < triples.size(); ++i)
      if (!(pair_mask[i] & shade)) out.push_back(triples[i]);
    return out;
  }
};

// Enumerates all down-sets of the dominance order via include/exclude in lex
// order (a triple may be included only when all its immediate predecessors
// are). Calls leaf(chosen) on every complete down-set.
template <class Leaf>
void downset_dfs(const TripleSpace& ts, std::size_t idx, std::uint64_t chosen,
                 unsigned long long& nodes, Leaf&& leaf) {
  ++nodes;
  if (idx == ts.triples.size()) {
    leaf(chosen);
    return;
  }
  // include first (only if a down-set stays a down-set)
  if ((ts.pred[idx] & ~chosen) == 0)
    downset_dfs(ts, idx + 1, chosen | (1ull << idx), nodes, leaf);
  downset_dfs(ts, idx + 1, chosen, nodes, leaf);
}

ColouredPair make_pair(const TripleSpace& ts, std::uint64_t chosen) {
  ColouredPair cp;
  cp.k = 3;
  cp.n = ts.n;
  cp.red = ts.edge_list(chosen);
  cp.blue = ts.compat_list(chosen);
  return cp;
}

}  // namespace

MuResult mu_bruteforce(int n, int s, long long t) {
  if (n < 3 || n > 7) throw std::invalid_argument("mu_bruteforce: need 3 <= n <= 7");
  if (s < 0) throw std::invalid_argument("mu_bruteforce: s must be >= 0");
  TripleSpace ts(n);
  MuResult res;
  std::vector<std::uint64_t> best_sets;
  downset_dfs(ts, 0, 0, res.nodes, [&](std::uint64_t chosen) {
    if (ts.matching_upto2(chosen) > s) return;
    long long e = __builtin_popcountll(chosen);
    if (e <= t) return;
    long long value = e + ts.compat_count(chosen);
    if (!res.family_nonempty || value > res.value) {
      res.family_nonempty = true;
      res.value = value;
      best_sets.assign(1, chosen);
    } else if (value == res.value) {
      best_sets.push_back(chosen);
    }
  });
  for (std::uint64_t c : best_sets) res.witnesses.push_back(make_pair(ts, c));
  return res;
}

MuResult mu_unrestricted(int n, int s, long long t) {
  if (n < 3 || n > 6) throw std::invalid_argument("mu_unrestricted: need 3 <= n <= 6");
  if (s < 0) throw std::invalid_argument("mu_unrestricted: s must be >= 0");
  TripleSpace ts(n);
  MuResult res;
  std::uint64_t limit = 1ull << ts.triples.size();
  std::vector<std::uint64_t> best_sets;
  for (std::uint64_t chosen = 0; chosen < limit; ++chosen) {
    ++res.nodes;
    if (ts.matching_upto2(chosen) > s) continue;
    long long e = __builtin_popcountll(chosen);
    if (e <= t) continue;
    long long value = e + ts.compat_count(chosen);
    if (!res.family_nonempty || value > res.value) {
      res.family_nonempty = true;
      res.value = value;
      best_sets.assign(1, chosen);
    } else if (value == res.value) {
      best_sets.push_back(chosen);
    }
  }
  for (std::uint64_t c : best_sets) res.witnesses.push_back(make_pair(ts, c));
  return res;
}

MuTable mu_table_canonical(int n, unsigned long long* nodes) {
  if (n < 3 || n > 7) throw std::invalid_argument("mu_table_canonical: need 3 <= n <= 7");
  TripleSpace ts(n);
  MuTable table(3, std::vector<long long>(ts.triples.size() + 1, -1));
  unsigned long long cnt = 0;
  downset_dfs(ts, 0, 0, cnt, [&](std::uint64_t chosen) {
    int m = ts.matching_upto2(chosen);
    long long e = __builtin_popcountll(chosen);
    long long value = e + ts.compat_count(chosen);
    auto& cell = table[m][static_cast<std::size_t>(e)];
    cell = std::max(cell, value);
  });
  if (nodes) *nodes = cnt;
  return table;
}

MuTable mu_table_unrestricted(int n, unsigned long long* nodes) {
  if (n < 3 || n > 6) throw std::invalid_argument("mu_table_unrestricted: need 3 <= n <= 6");
  TripleSpace ts(n);
  MuTable table(3, std::vector<long long>(ts.triples.size() + 1, -1));
  unsigned long long cnt = 0;
  std::uint64_t limit = 1ull << ts.triples.size();
  for (std::uint64_t chosen = 0; chosen < limit; ++chosen) {
    ++cnt;
    int m = ts.matching_upto2(chosen);
    long long e = __builtin_popcountll(chosen);
    long long value = e + ts.compat_count(chosen);
    auto& cell = table[m][static_cast<std::size_t>(e)];
    cell = std::max(cell, value);
  }
  if (nodes) *nodes = cnt;
  return table;
}

long long mu_from_table(const MuTable& table, int s, long long t) {
  long long best = -1;
  for (std::size_t m = 0; m < table.size(); ++m) {
    if (static_cast<int>(m) > s) break;
    for (std::size_t e = 0; e < table[m].size(); ++e)
      if (static_cast<long long>(e) > t) best = std::max(best, table[m][e]);
  }
  return best;
}

// ---------------------------------------------------------------- emc ----

namespace {

// Bit set over up to 128 triples (n = 9 needs 84).
struct M128 {
  std::uint64_t lo = 0, hi = 0;
  bool test(int i) const { return i < 64 ? (lo >> i) & 1 : (hi >> (i - 64)) & 1; }
  void set(int i) { (i < 64 ? lo : hi) |= 1ull << (i & 63); }
  M128 operator&(const M128& o) const { return {lo & o.lo, hi & o.hi}; }
  M128 operator|(const M128& o) const { return {lo | o.lo, hi | o.hi}; }
  M128 operator~() const { return {~lo, ~hi}; }
  bool any() const { return lo || hi; }
  int count() const { return __builtin_popcountll(lo) + __builtin_popcountll(hi); }
  bool subset_of(const M128& o) const { return !(lo & ~o.lo) && !(hi & ~o.hi); }
  template <class F>
  void for_each(F&& f) const {
    std::uint64_t r = lo;
    while (r) {
      f(__builtin_ctzll(r));
      r &= r - 1;
    }
    r = hi;
    while (r) {
      f(64 + __builtin_ctzll(r));
      r &= r - 1;
    }
  }
};

struct EmcSearch {
  int n, s;
  std::vector<VSet> triples;
  std::vector<M128> disj, pred, upset, future;
  long long best = -1;
  M128 best_set;
  unsigned long long nodes = 0;

  EmcSearch(int n_, int s_) : n(n_), s(s_) {
    triples = all_ksets(n, 3);
    int m = static_cast<int>(triples.size());
    auto tindex = [&](VSet t) {
      return static_cast<int>(std::lower_bound(triples.begin(), triples.end(), t, lex_less) -
                              triples.begin());
    };
    disj.assign(m, {});
    pred.assign(m, {});
    upset.assign(m, {});
    future.assign(m + 1, {});
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (!(triples[i] & triples[j])) disj[i].set(j);
    for (int i = 0; i < m; ++i) {
      auto v = vs_elements(triples[i]);
      int a = v[0], b = v[1], c = v[2];
      if (a - 1 >= 1) pred[i].set(tindex(vs_of({a - 1, b, c})));
      if (b - 1 > a) pred[i].set(tindex(vs_of({a, b - 1, c})));
      if (c - 1 > b) pred[i].set(tindex(vs_of({a, b, c - 1})));
    }
    // up-sets: lex order extends dominance, so successors come later
    for (int i = m - 1; i >= 0; --i) {
      upset[i].set(i);
      auto v = vs_elements(triples[i]);
      int a = v[0], b = v[1], c = v[2];
      if (a + 1 < b) upset[i] = upset[i] | upset[tindex(vs_of({a + 1, b, c}))];
      if (b + 1 < c) upset[i] = upset[i] | upset[tindex(vs_of({a, b + 1, c}))];
      if (c + 1 <= n) upset[i] = upset[i] | upset[tindex(vs_of({a, b, c + 1}))];
    }
    for (int i = m - 1; i >= 0; --i) {
      future[i] = future[i + 1];
      future[i].set(i);
    }
  }

  // would adding triple i raise the matching number above s? chosen has
  // matching <= s already, so it suffices to look for s triples disjoint
  // from i (s <= 2 whenever the constraint is not vacuous)
  bool raises_matching(const M128& chosen, int i) const {
    if (s == 0) return true;  // a single edge is already a 1-matching
    M128 cand = chosen & disj[i];
    if (s == 1) return cand.any();
    // s == 2: need two disjoint triples inside cand
    bool found = false;
    cand.for_each([&](int t) {
      if (!found && (cand & disj[t]).any()) found = true;
    });
    return found;
  }

  void dfs(int idx, M128 chosen, M128 blocked, int count) {
    ++nodes;
    if (count + (future[idx] & ~blocked).count() <= best) return;  // cannot beat best
    if (idx == static_cast<int>(triples.size())) {
      if (count > best) {
        best = count;
        best_set = chosen;
      }
      return;
    }
    bool can_include = pred[idx].subset_of(chosen) && !blocked.test(idx);
    if (can_include && !raises_matching(chosen, idx)) {
      M128 c2 = chosen;
      c2.set(idx);
      dfs(idx + 1, c2, blocked, count + 1);
    }
    dfs(idx + 1, chosen, blocked | upset[idx], count);
  }
};

}  // namespace

EmcResult emc_max_edges(int n, int s) {
  if (n < 3 || n > 9) throw std::invalid_argument("emc_max_edges: need 3 <= n <= 9");
  if (s < 0) throw std::invalid_argument("emc_max_edges: s must be >= 0");
  EmcResult res;
  if (3 * (s + 1) > n) {
    // no (s+1)-matching fits in n vertices: the constraint is vacuous
    res.value = static_cast<long long>(binom_u64(n, 3));
    res.witness = Hypergraph(3, n, all_ksets(n, 3));
    res.nodes = 1;
    return res;
  }
  EmcSearch es(n, s);
  es.dfs(0, {}, {}, 0);
  res.value = es.best;
  Hypergraph w(3, n);
  es.best_set.for_each([&](int i) { w.edges.push_back(es.triples[i]); });
  w.sort_edges();
  res.witness = std::move(w);
  res.nodes = es.nodes;
  return res;
}

// --------------------------------------------------------------- mono ----

namespace {

struct MonoSearch {
  int n;
  std::vector<VSet> pairs;
  std::vector<std::uint32_t> tri_pairs;  // pair-index mask per triangle
  long long tmin;
  long long best = -1;
  std::uint32_t best_red = 0;
  unsigned long long nodes = 0;

  MonoSearch(int n_, long long tmin_) : n(n_), tmin(tmin_) {
    pairs = all_ksets(n, 2);
    for (VSet t : all_ksets(n, 3)) {
      std::uint32_t m = 0;
      for (std::size_t p = 0; p < pairs.size(); ++p)
        if ((t & pairs[p]) == pairs[p]) m |= 1u << p;
      tri_pairs.push_back(m);
    }
  }

  void dfs(std::size_t idx, std::uint32_t red) {
    ++nodes;
    std::uint32_t decided = idx >= 32 ? ~0u : ((1u << idx) - 1);
    long long red_alive = 0, blue_alive = 0;
    for (std::uint32_t tp : tri_pairs) {
      if ((tp & decided & ~red) == 0) ++red_alive;   // no decided non-red pair
      if ((tp & red) == 0) ++blue_alive;             // no red pair yet
    }
    if (red_alive < tmin || blue_alive < tmin) return;
    if (red_alive + blue_alive <= best) return;
    if (idx == pairs.size()) {
      best = red_alive + blue_alive;
      best_red = red;
      return;
    }
    dfs(idx + 1, red | (1u << idx));
    dfs(idx + 1, red);
  }
};

}  // namespace

MonoResult mono_triangle_extremum(int n, long long tmin, bool allow_large) {
  if (n < 3 || n > 8) throw std::invalid_argument("mono_triangle_extremum: need 3 <= n <= 8");
  if (n == 8 && !allow_large)
    throw std::invalid_argument("mono_triangle_extremum: n = 8 requires the uncertified flag");
  if (tmin < 0) tmin = 0;
  MonoSearch ms(n, tmin);
  ms.dfs(0, 0);
  MonoResult res;
  res.nodes = ms.nodes;
  if (ms.best < 0) return res;  // infeasible: empty family
  res.feasible = true;
  res.total = ms.best;
  res.witness.n = n;
  for (std::size_t p = 0; p < ms.pairs.size(); ++p)
    ((ms.best_red >> p) & 1 ? res.witness.red : res.witness.blue).push_back(ms.pairs[p]);
  return res;
}

// ---------------------------------------------- connection partition ----

ProfileCuts partition_profile(const std::vector<long long>& comp_sizes_desc,
                              const mpz_class& total_ksets, const Rat& eps) {
  if (eps <= 0 || eps >= Rat(1, 16))
    throw std::invalid_argument("partition_profile: need 0 < eps < 1/16");
  if (total_ksets <= 0) throw std::invalid_argument("partition_profile: empty ground set");
  for (std::size_t i = 1; i < comp_sizes_desc.size(); ++i)
    if (comp_sizes_desc[i] > comp_sizes_desc[i - 1])
      throw std::invalid_argument("partition_profile: sizes not descending");

  ProfileCuts pc;
  Rat N(total_ksets);
  long long total = 0, cmax = 0;
  for (long long c : comp_sizes_desc) {
    total += c;
    cmax = std::max(cmax, c);
  }
  pc.hyp_total_lower = Rat(static_cast<long>(total)) >= (Rat(5, 8) + eps) * N;
  pc.hyp_comp_upper = Rat(static_cast<long>(cmax)) < (Rat(1, 2) + eps) * N;
  pc.hyp_total_upper = Rat(static_cast<long>(total)) <= (Rat(5, 8) + 2 * eps) * N;

  Rat threshold = (Rat(1, 8) + eps) * N;
  long long prefix = 0;
  pc.prefix_len = 0;
  for (std::size_t i = 0; i < comp_sizes_desc.size(); ++i) {
    prefix += comp_sizes_desc[i];
    pc.prefix_len = static_cast<int>(i + 1);
    if (Rat(static_cast<long>(prefix)) >= threshold) break;
  }
  if (Rat(static_cast<long>(prefix)) < threshold) {
    pc.hypothesis_failed = true;
    pc.prefix_len = static_cast<int>(comp_sizes_desc.size());
    pc.e_red = total;
    pc.e_blue = 0;
    return pc;
  }
  pc.e_red = prefix;
  pc.e_blue = total - prefix;
  Rat upper = (Rat(1, 2) + eps) * N;
  pc.concl_min_share = Rat(static_cast<long>(std::min(pc.e_red, pc.e_blue))) > N / 8;
  pc.concl_red_upper = Rat(static_cast<long>(pc.e_red)) < upper;
  pc.concl_blue_upper = Rat(static_cast<long>(pc.e_blue)) <= upper;
  return pc;
}

PartitionResult connection_partition(const Hypergraph& g, const Rat& eps) {
  if (g.k != 3) throw std::invalid_argument("connection_partition: requires a 3-graph");
  auto comps = tight_components(g);
  std::vector<long long> sizes;
  for (const auto& c : comps) sizes.push_back(static_cast<long long>(c.size()));
  mpz_class total = binom_z(g.n, 3);
  PartitionResult out;
  out.cuts = partition_profile(sizes, total, eps);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    auto& side = static_cast<int>(i) < out.cuts.prefix_len ? out.red : out.blue;
    side.insert(side.end(), comps[i].begin(), comps[i].end());
  }
  std::sort(out.red.begin(), out.red.end(), lex_less);
  std::sort(out.blue.begin(), out.blue.end(), lex_less);

  Hypergraph rg(3, g.n), bg(3, g.n);
  rg.edges = out.red;
  bg.edges = out.blue;
  bool dist = distinguishable(rg, bg);

  Report& r = out.diagnostics;
  r.add("n", g.n);
  r.add("total_edges", static_cast<long long>(g.m()));
  r.add("total_triples", Rat(total));
  r.add("epsilon", eps);
  r.add("components", static_cast<long long>(comps.size()));
  std::string ss;
  for (long long c : sizes) {
    if (!ss.empty()) ss += ",";
    ss += std::to_string(c);
  }
  r.add("component_sizes", ss);
  r.add("threshold", (Rat(1, 8) + eps) * Rat(total));
  r.add("hyp_density_lower", out.cuts.hyp_total_lower);
  r.add("hyp_component_upper", out.cuts.hyp_comp_upper);
  r.add("hyp_density_upper", out.cuts.hyp_total_upper);
  r.add("hypothesis_failed", out.cuts.hypothesis_failed);
  r.add("red_components", out.cuts.prefix_len);
  r.add("e_red", out.cuts.e_red);
  r.add("e_blue", out.cuts.e_blue);
  r.add("min_share_ok", out.cuts.concl_min_share);
  r.add("red_upper_ok", out.cuts.concl_red_upper);
  r.add("blue_upper_ok", out.cuts.concl_blue_upper);
  r.add("red_blue_distinguishable", dist);
  return out;
}

}  // namespace hg
