#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hg/core.hpp"
#include "hg/matchcycle.hpp"

using namespace hg;

namespace {

Hypergraph make(int k, int n, std::initializer_list<std::initializer_list<int>> es) {
  std::vector<VSet> edges;
  for (auto& e : es) edges.push_back(vs_of(std::vector<int>(e)));
  return Hypergraph(k, n, std::move(edges));
}

Hypergraph complete(int n, int k) { return Hypergraph(k, n, all_ksets(n, k)); }

int naive_matching(const std::vector<VSet>& edges, std::size_t idx = 0, VSet used = 0) {
  int best = 0;
  for (std::size_t i = idx; i < edges.size(); ++i)
    if (!(edges[i] & used)) best = std::max(best, 1 + naive_matching(edges, i + 1, used | edges[i]));
  return best;
}

bool valid_matching(const Matching& m) {
  VSet used = 0;
  for (VSet e : m) {
    if (e & used) return false;
    used |= e;
  }
  return true;
}

// All k-sets with |e meet X| != a, X = {1..nx}; hand-rolled here because the
// constructions module has its own tests against this module.
Hypergraph split_graph(int k, int nx, int ny, int a) {
  Hypergraph g(k, nx + ny);
  VSet x = vs_full(nx);
  for (VSet e : all_ksets(nx + ny, k))
    if (vs_size(e & x) != a) g.edges.push_back(e);
  g.sort_edges();
  return g;
}

}  // namespace

TEST_CASE("max matching agrees with exhaustive enumeration") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 300; ++t) {
    int n = 6 + static_cast<int>(rng() % 4);  // n <= 9
    Hypergraph g(3, n);
    for (VSet e : all_ksets(n, 3))
      if (rng() % 4 == 0) g.edges.push_back(e);
    g.sort_edges();
    auto r = max_matching(g);
    REQUIRE(r.optimal);
    CHECK(valid_matching(r.matching));
    CHECK(static_cast<int>(r.matching.size()) == naive_matching(g.edges));
  }
}

TEST_CASE("max matching basics") {
  CHECK(max_matching(Hypergraph(3, 6)).matching.empty());
  CHECK(max_matching(complete(9, 3)).matching.size() == 3);
  CHECK(max_matching(complete(8, 3)).matching.size() == 2);
  auto star = make(3, 7, {{1, 2, 3}, {1, 4, 5}, {1, 6, 7}});
  CHECK(max_matching(star).matching.size() == 1);
}

TEST_CASE("matching decision with early exit") {
  auto g = complete(9, 3);
  CHECK(has_matching_of_size(g, 0) == TriState::yes);
  CHECK(has_matching_of_size(g, 3) == TriState::yes);
  CHECK(has_matching_of_size(g, 4) == TriState::no);
  CHECK(has_matching_of_size(Hypergraph(3, 9), 1) == TriState::no);
}

TEST_CASE("tight cycle verification") {
  auto k5 = complete(5, 3);
  CHECK(verify_tight_cycle(k5, {1, 2, 3, 4, 5}));
  CHECK(verify_tight_cycle(k5, {1, 3, 5, 2, 4}));
  CHECK_FALSE(verify_tight_cycle(k5, {1, 2, 3, 4, 4}));
  CHECK_FALSE(verify_tight_cycle(k5, {1, 2, 3}));  // below k+1
  auto g = make(3, 5, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}});
  CHECK_FALSE(verify_tight_cycle(g, {1, 2, 3, 4, 5}));
}

TEST_CASE("longest tight cycle") {
  auto k5 = complete(5, 3);
  auto r = longest_tight_cycle(k5);
  CHECK(r.length == 5);
  CHECK(verify_tight_cycle(k5, r.cycle));
  CHECK_FALSE(r.timed_out);

  // K4 on 3-sets: the 4-sequence uses each edge once
  auto k4 = complete(4, 3);
  auto r4 = longest_tight_cycle(k4);
  CHECK(r4.length == 4);
  CHECK(verify_tight_cycle(k4, r4.cycle));
  // stricter minimum length 2k excludes it
  CHECK(longest_tight_cycle(k4, 60.0, true).length == 0);

  CHECK(longest_tight_cycle(Hypergraph(3, 6)).length == 0);

  // split graph: X-heavy windows cap cycle length at 4 when nx = ny = 3
  auto sp = split_graph(3, 3, 3, 1);
  auto rs = longest_tight_cycle(sp);
  CHECK(rs.length == 4);
  CHECK(verify_tight_cycle(sp, rs.cycle));
}

TEST_CASE("hamilton decision and certificates") {
  auto k5 = complete(5, 3);
  auto h = has_tight_hamilton(k5);
  REQUIRE(h.status == TriState::yes);
  CHECK(h.cycle == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(verify_tight_cycle(k5, h.cycle));

  auto k64 = complete(6, 4);
  auto h64 = has_tight_hamilton(k64);
  REQUIRE(h64.status == TriState::yes);
  CHECK(verify_tight_cycle(k64, h64.cycle));

  // two tight components, neither spanning
  auto g2 = make(3, 6, {{1, 2, 3}, {4, 5, 6}});
  auto h2 = has_tight_hamilton(g2);
  CHECK(h2.status == TriState::no);
  CHECK(h2.obstruction == "no tight component spans all vertices");

  // spanning component exists but X-side windows forbid a hamilton cycle
  auto sp = split_graph(3, 3, 3, 1);
  auto hs = has_tight_hamilton(sp);
  CHECK(hs.status == TriState::no);
  CHECK(hs.obstruction == "exhausted search space");

  // a tight path that cannot close
  auto path = make(3, 5, {{1, 2, 3}, {2, 3, 4}, {3, 4, 5}});
  CHECK(has_tight_hamilton(path).status == TriState::no);

  CHECK(has_tight_hamilton(complete(3, 3)).status == TriState::no);
}

TEST_CASE("hamilton on split graphs is false for m up to 4") {
  for (int m = 3; m <= 4; ++m) {
    auto sp3 = split_graph(3, m, m, 1);
    CHECK(has_tight_hamilton(sp3).status == TriState::no);
    auto sp4 = split_graph(4, m, m, 2);
    CHECK(has_tight_hamilton(sp4).status == TriState::no);
  }
}

TEST_CASE("timeouts surface as tri-state") {
  // dense non-hamiltonian instance; with a tiny budget the search cannot finish
  auto sp = split_graph(3, 6, 6, 1);
  auto h = has_tight_hamilton(sp, 1e-6);
  CHECK(h.status == TriState::timeout);
  // with a real budget it resolves to a definite no
  auto h2 = has_tight_hamilton(sp, 60.0);
  CHECK(h2.status == TriState::no);

  auto r = longest_tight_cycle(sp, 1e-6);
  CHECK(r.timed_out);

  // every edge meets {1,2}: max matching is 2, but proving it explores many
  // unmatched-vertex branches, so a tiny budget cannot finish
  Hypergraph star(3, 20);
  for (VSet e : all_ksets(20, 3))
    if (e & vs_of({1, 2})) star.edges.push_back(e);
  star.sort_edges();
  auto mm = max_matching(star, 1e-6);
  CHECK_FALSE(mm.optimal);
  CHECK(valid_matching(mm.matching));
  auto mm2 = max_matching(star, 60.0);
  CHECK(mm2.optimal);
  CHECK(mm2.matching.size() == 2);
}

TEST_CASE("random graphs: longest cycle is consistent with hamilton") {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 60; ++t) {
    int n = 5 + static_cast<int>(rng() % 3);
    Hypergraph g(3, n);
    for (VSet e : all_ksets(n, 3))
      if (rng() % 2 == 0) g.edges.push_back(e);
    g.sort_edges();
    auto h = has_tight_hamilton(g);
    auto c = longest_tight_cycle(g);
    REQUIRE(h.status != TriState::timeout);
    REQUIRE_FALSE(c.timed_out);
    if (h.status == TriState::yes) {
      CHECK(c.length == n);
      CHECK(verify_tight_cycle(g, h.cycle));
    } else {
      CHECK(c.length < n);
    }
    if (c.length > 0) CHECK(verify_tight_cycle(g, c.cycle));
  }
}
