#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "hg/core.hpp"
#include "hg/shifting.hpp"

using namespace hg;

namespace {

Hypergraph make(int k, int n, std::initializer_list<std::initializer_list<int>> es) {
  std::vector<VSet> edges;
  for (auto& e : es) edges.push_back(vs_of(std::vector<int>(e)));
  return Hypergraph(k, n, std::move(edges));
}

// Exhaustive maximum matching, fine for the small graphs used here.
int naive_matching(const std::vector<VSet>& edges, std::size_t idx = 0, VSet used = 0) {
  int best = 0;
  for (std::size_t i = idx; i < edges.size(); ++i)
    if (!(edges[i] & used)) best = std::max(best, 1 + naive_matching(edges, i + 1, used | edges[i]));
  return best;
}

long long label_sum(const Hypergraph& g) {
  long long s = 0;
  for (VSet e : g.edges)
    for (int v : vs_elements(e)) s += v;
  return s;
}

Hypergraph random_graph(std::mt19937_64& rng, int n, int k, int density_one_in) {
  Hypergraph g(k, n);
  for (VSet e : all_ksets(n, k))
    if (rng() % density_one_in == 0) g.edges.push_back(e);
  g.sort_edges();
  return g;
}

// Random distinguishable pair: random red set, then blue sampled from the
// triples meeting every red edge in at most one vertex.
ColouredPair random_pair(std::mt19937_64& rng, int n) {
  ColouredPair p;
  p.k = 3;
  p.n = n;
  auto pool = all_ksets(n, 3);
  for (VSet e : pool)
    if (rng() % 7 == 0) p.red.push_back(e);
  for (VSet f : pool) {
    bool ok = true;
    for (VSet e : p.red)
      if (vs_size(e & f) > 1) {
        ok = false;
        break;
      }
    if (ok && rng() % 3 == 0) p.blue.push_back(f);
  }
  return p;
}

}  // namespace

TEST_CASE("single shift semantics") {
  auto g = make(3, 4, {{2, 3, 4}});
  CHECK(shift(g, 4, 1).edges == std::vector<VSet>{vs_of({1, 2, 3})});
  // target already present: edge is kept
  auto h = make(3, 4, {{1, 2, 3}, {2, 3, 4}});
  CHECK(shift(h, 4, 1).edges == h.edges);
  // i not in the edge, or j already there: untouched
  CHECK(shift(g, 1, 2).edges == g.edges);
  CHECK(shift(g, 3, 4).edges == g.edges);

  CHECK_THROWS_AS(shift(g, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(shift(g, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(shift(g, 1, 5), std::invalid_argument);
}

TEST_CASE("shift preserves the number of edges") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    int n = 5 + static_cast<int>(rng() % 6);
    auto g = random_graph(rng, n, 3, 3);
    int i = 1 + static_cast<int>(rng() % n), j = 1 + static_cast<int>(rng() % n);
    if (i == j) continue;
    CHECK(shift(g, i, j).m() == g.m());
  }
}

TEST_CASE("shiftedness predicates") {
  CHECK(is_left_shifted(Hypergraph(3, 6, all_ksets(6, 3))));
  CHECK(is_right_shifted(Hypergraph(3, 6, all_ksets(6, 3))));
  CHECK(is_left_shifted(make(3, 5, {{1, 2, 3}})));
  CHECK_FALSE(is_left_shifted(make(3, 5, {{1, 2, 4}})));
  CHECK(is_right_shifted(make(3, 5, {{3, 4, 5}})));
  CHECK_FALSE(is_right_shifted(make(3, 5, {{2, 4, 5}})));
  CHECK(is_left_shifted(Hypergraph(3, 5)));  // empty
}

TEST_CASE("closures reach shifted fixpoints") {
  auto r = left_shift_closure(make(3, 4, {{2, 3, 4}}));
  CHECK(r.graph.edges == std::vector<VSet>{vs_of({1, 2, 3})});
  CHECK(r.sweeps == 2);

  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    int n = 5 + static_cast<int>(rng() % 5);
    auto g = random_graph(rng, n, 3, 4);
    auto lc = left_shift_closure(g);
    CHECK(is_left_shifted(lc.graph));
    CHECK(lc.graph.m() == g.m());
    CHECK(label_sum(lc.graph) <= label_sum(g));
    // idempotent: second closure is a single no-op sweep
    auto again = left_shift_closure(lc.graph);
    CHECK(again.graph.edges == lc.graph.edges);
    CHECK(again.sweeps == 1);

    auto rc = right_shift_closure(g);
    CHECK(is_right_shifted(rc.graph));
    CHECK(rc.graph.m() == g.m());
    CHECK(label_sum(rc.graph) >= label_sum(g));
  }
}

TEST_CASE("extreme edges survive the respective closures") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    int n = 6 + static_cast<int>(rng() % 4);
    auto g = random_graph(rng, n, 3, 4);
    VSet bottom = vs_of({1, 2, 3});
    VSet top = vs_of({n - 2, n - 1, n});
    g.add_edge(bottom);
    g.add_edge(top);
    CHECK(left_shift_closure(g).graph.has_edge(bottom));
    CHECK(right_shift_closure(g).graph.has_edge(top));
  }
}

TEST_CASE("label sum strictly decreases on every changing left move") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 300; ++t) {
    int n = 5 + static_cast<int>(rng() % 6);
    auto g = random_graph(rng, n, 3, 3);
    int j = 2 + static_cast<int>(rng() % (n - 1));
    int i = 1 + static_cast<int>(rng() % (j - 1));
    auto h = shift(g, j, i);  // move j down to i
    if (h.edges == g.edges)
      CHECK(label_sum(h) == label_sum(g));
    else
      CHECK(label_sum(h) < label_sum(g));
  }
}

TEST_CASE("matching number never increases under left moves") {
  std::mt19937_64 rng(19);
  for (int t = 0; t < 150; ++t) {
    int n = 6 + static_cast<int>(rng() % 4);
    auto g = random_graph(rng, n, 3, 5);
    int j = 2 + static_cast<int>(rng() % (n - 1));
    int i = 1 + static_cast<int>(rng() % (j - 1));
    auto h = shift(g, j, i);
    CHECK(naive_matching(h.edges) <= naive_matching(g.edges));
  }
  // shifting can genuinely drop the matching number
  auto g = make(3, 6, {{1, 2, 3}, {4, 5, 6}});
  auto c = left_shift_closure(g).graph;
  CHECK(naive_matching(c.edges) == 1);
}

TEST_CASE("pair moves preserve distinguishability") {
  std::mt19937_64 rng(23);
  int checked = 0;
  for (int t = 0; t < 200; ++t) {
    int n = 6 + static_cast<int>(rng() % 4);
    auto p = random_pair(rng, n);
    REQUIRE(distinguishable(p));
    int j = 2 + static_cast<int>(rng() % (n - 1));
    int i = 1 + static_cast<int>(rng() % (j - 1));
    auto q = shift_pair(p, i, j);
    CHECK(distinguishable(q));
    CHECK(q.red.size() == p.red.size());
    CHECK(q.blue.size() == p.blue.size());
    ++checked;
  }
  CHECK(checked == 200);
}

TEST_CASE("shift_pair contract") {
  ColouredPair bad;
  bad.k = 3;
  bad.n = 6;
  bad.red = {vs_of({1, 2, 3})};
  bad.blue = {vs_of({2, 3, 4})};
  CHECK_THROWS_AS(shift_pair(bad, 1, 4), ContractViolation);
  ColouredPair ok;
  ok.k = 3;
  ok.n = 6;
  ok.red = {vs_of({1, 2, 3})};
  ok.blue = {vs_of({3, 4, 5})};
  CHECK_THROWS_AS(shift_pair(ok, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(shift_pair(ok, 2, 2), std::invalid_argument);
  CHECK_NOTHROW(shift_pair(ok, 1, 4));
}

TEST_CASE("canonicalize_pair reaches a canonical distinguishable pair") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 60; ++t) {
    int n = 6 + static_cast<int>(rng() % 4);
    auto p = random_pair(rng, n);
    auto r = canonicalize_pair(p);
    CHECK(is_left_shifted(r.pair.red_graph()));
    CHECK(is_right_shifted(r.pair.blue_graph()));
    CHECK(distinguishable(r.pair));
    CHECK(r.pair.red.size() == p.red.size());
    CHECK(r.pair.blue.size() == p.blue.size());
    CHECK(r.rounds >= 1);
    auto again = canonicalize_pair(r.pair);
    CHECK(again.rounds == 1);
    CHECK(again.pair.red == r.pair.red);
    CHECK(again.pair.blue == r.pair.blue);
  }
}
