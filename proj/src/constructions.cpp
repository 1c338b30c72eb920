#include "hg/constructions.hpp"

#include <algorithm>

#include "hg/matchcycle.hpp"

namespace hg {

Hypergraph gen_split_kgraph(int k, int nx, int ny, int a) {
  if (a < 0 || a > k) throw std::invalid_argument("gen_split_kgraph: need 0 <= a <= k");
  if (nx < 0 || ny < 0) throw std::invalid_argument("gen_split_kgraph: negative side size");
  int n = nx + ny;
  if (k < 1 || n < k || n > 64)
    throw std::invalid_argument("gen_split_kgraph: need 1 <= k <= nx+ny <= 64");
  Hypergraph g(k, n);
  VSet x = vs_full(nx);
  for (VSet e : all_ksets(n, k))
    if (vs_size(e & x) != a) g.edges.push_back(e);
  g.sort_edges();
  return g;
}

SplitProfile split_component_profile(const Hypergraph& g, int nx, int a) {
  if (nx < 0 || nx > g.n) throw std::invalid_argument("split_component_profile: bad nx");
  SplitProfile p;
  VSet x = vs_full(nx);
  std::vector<VSet> above, below, at;
  for (VSet e : g.edges) {
    int c = vs_size(e & x);
    (c > a ? above : c < a ? below : at).push_back(e);
  }
  auto comps = tight_components(g);
  for (const auto& c : comps) p.component_sizes.push_back(c.size());
  p.detail.add("components", static_cast<long long>(comps.size()));
  std::string sizes;
  for (std::size_t s : p.component_sizes) {
    if (!sizes.empty()) sizes += ",";
    sizes += std::to_string(s);
  }
  p.detail.add("sizes", sizes);
  p.detail.add("edges_above", static_cast<long long>(above.size()));
  p.detail.add("edges_below", static_cast<long long>(below.size()));
  p.detail.add("edges_at_threshold", static_cast<long long>(at.size()));
  bool ok = at.empty() && comps.size() == 2 && !above.empty() && !below.empty();
  if (ok) {
    // each side must be exactly one of the two components
    auto side_is_comp = [&](std::vector<VSet> side) {
      std::sort(side.begin(), side.end(), lex_less);
      return side == comps[0] || side == comps[1];
    };
    ok = side_is_comp(above) && side_is_comp(below);
    p.detail.add("sides_match_components", ok);
  } else {
    p.detail.add("sides_match_components", false);
  }
  p.as_expected = ok;
  p.detail.add("as_expected", ok);
  return p;
}

Hypergraph gen_emc_clique(int n, int s, int k) {
  if (k < 1 || n < k || n > 64) throw std::invalid_argument("gen_emc_clique: need 1 <= k <= n <= 64");
  if (s < 0) throw std::invalid_argument("gen_emc_clique: s must be >= 0");
  long long top = static_cast<long long>(s + 1) * k - 1;
  if (top > n)
    throw std::invalid_argument("gen_emc_clique: clique on (s+1)k-1 vertices does not fit in n");
  Hypergraph g(k, n);
  if (top >= k)
    for (VSet e : all_ksets(static_cast<int>(top), k)) g.edges.push_back(e);
  g.sort_edges();
  return g;
}

Hypergraph gen_emc_cover(int n, int s, int k) {
  if (k < 1 || n < k || n > 64) throw std::invalid_argument("gen_emc_cover: need 1 <= k <= n <= 64");
  if (s < 0 || s > n) throw std::invalid_argument("gen_emc_cover: need 0 <= s <= n");
  Hypergraph g(k, n);
  VSet head = vs_full(s);
  for (VSet e : all_ksets(n, k))
    if (e & head) g.edges.push_back(e);
  g.sort_edges();
  return g;
}

DensityWitness ck_witness(int k, int nx, int ny) {
  if (k < 1 || nx < 0 || ny < 0 || nx + ny < k)
    throw std::invalid_argument("ck_witness: need k >= 1 and nx+ny >= k");
  int a = k / 2;
  mpz_class above = 0, below = 0, at = 0;
  for (int i = 0; i <= k; ++i) {
    mpz_class ways = binom_z(nx, i) * binom_z(ny, k - i);
    if (i > a)
      above += ways;
    else if (i < a)
      below += ways;
    else
      at += ways;
  }
  mpz_class total = binom_z(nx + ny, k);
  DensityWitness w;
  w.edge_density = Rat(above + below, total);
  w.edge_density.canonicalize();
  w.max_component_density = Rat(above > below ? above : below, total);
  w.max_component_density.canonicalize();
  return w;
}

CycleSpaceWitness eg3_witness(int nx, int ny, double time_limit_s) {
  Hypergraph g = gen_split_kgraph(3, nx, ny, 1);
  CycleSpaceWitness w;
  w.edge_density = Rat(static_cast<long>(g.m()), static_cast<long>(binom_u64(g.n, 3)));
  w.edge_density.canonicalize();
  auto c = longest_tight_cycle(g, time_limit_s);
  w.cycle_ratio = Rat(c.length, g.n);
  w.cycle_ratio.canonicalize();
  w.search_complete = !c.timed_out;
  return w;
}

}  // namespace hg
