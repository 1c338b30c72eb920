#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "hg/simplex.hpp"

using namespace hg;

namespace {

LinearProgram make(std::vector<std::vector<Rat>> A, std::vector<Rat> b,
                   std::vector<Rat> c) {
  return LinearProgram{std::move(A), std::move(b), std::move(c)};
}

bool feasible(const LinearProgram& lp, const std::vector<Rat>& x) {
  for (const Rat& v : x)
    if (v < 0) return false;
  for (std::size_t i = 0; i < lp.A.size(); ++i) {
    Rat lhs = 0;
    for (std::size_t j = 0; j < x.size(); ++j) lhs += lp.A[i][j] * x[j];
    if (lhs > lp.b[i]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("axis-aligned box") {
  auto lp = make({{1, 0}, {0, 1}}, {3, 2}, {1, 1});
  auto r = solve_lp(lp);
  CHECK(r.status == LpStatus::optimal);
  CHECK(r.value == 5);
  CHECK(r.x == std::vector<Rat>{3, 2});
  CHECK(feasible(lp, r.x));
}

TEST_CASE("binding mixture of constraints") {
  auto lp = make({{1, 1}, {1, 0}}, {4, 2}, {2, 1});
  auto r = solve_lp(lp);
  CHECK(r.status == LpStatus::optimal);
  CHECK(r.value == 6);
  CHECK(r.x == std::vector<Rat>{2, 2});
}

TEST_CASE("fractional optimum stays exact") {
  // max x + y with 2x + y <= 1, x + 3y <= 1: vertex (2/5, 1/5)
  auto lp = make({{2, 1}, {1, 3}}, {1, 1}, {1, 1});
  auto r = solve_lp(lp);
  CHECK(r.status == LpStatus::optimal);
  CHECK(r.value == rat(3, 5));
  CHECK(r.x == std::vector<Rat>{rat(2, 5), rat(1, 5)});
}

TEST_CASE("degenerate tableau terminates under the anti-cycling rule") {
  // the classic cycling instance for the steepest-increase rule
  auto lp = make(
      {{rat(1, 4), -60, rat(-1, 25), 9}, {rat(1, 2), -90, rat(-1, 50), 3}, {0, 0, 1, 0}},
      {0, 0, 1}, {rat(3, 4), -150, rat(1, 50), -6});
  auto r = solve_lp(lp);
  CHECK(r.status == LpStatus::optimal);
  CHECK(r.value == rat(1, 20));
  CHECK(feasible(lp, r.x));
  CHECK(r.pivots < 50);
}

TEST_CASE("unbounded directions are detected") {
  auto lp = make({{0, 1}}, {1}, {1, 0});
  CHECK(solve_lp(lp).status == LpStatus::unbounded);
  auto lp0 = make({}, {}, {1});
  CHECK(solve_lp(lp0).status == LpStatus::unbounded);
  auto lp1 = make({}, {}, {-1});
  auto r1 = solve_lp(lp1);
  CHECK(r1.status == LpStatus::optimal);
  CHECK(r1.value == 0);
}

TEST_CASE("conflict systems have integral optima") {
  // vars r1, r2, b1 with pairwise conflicts against b1 and unit boxes:
  // the constraint matrix is an interval/bipartite pattern, so some optimal
  // vertex is integral and the simplex lands on a vertex
  auto lp = make({{1, 0, 1}, {0, 1, 1}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}},
                 {1, 1, 1, 1, 1}, {1, 1, 1});
  auto r = solve_lp(lp);
  CHECK(r.status == LpStatus::optimal);
  CHECK(r.value == 2);
  for (const Rat& v : r.x) CHECK((v == 0 || v == 1));
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(solve_lp(make({{1}}, {-1}, {1})), std::invalid_argument);
  CHECK_THROWS_AS(solve_lp(make({{1, 2}}, {1}, {1})), std::invalid_argument);
  CHECK_THROWS_AS(solve_lp(make({{1}}, {1, 2}, {1})), std::invalid_argument);
}
