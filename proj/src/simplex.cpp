#include "hg/simplex.hpp"

#include <stdexcept>

namespace hg {

LpResult solve_lp(const LinearProgram& lp) {
  std::size_t m = lp.A.size(), n = lp.c.size();
  if (lp.b.size() != m) throw std::invalid_argument("solve_lp: |b| != rows of A");
  for (const auto& row : lp.A)
    if (row.size() != n) throw std::invalid_argument("solve_lp: ragged row in A");
  for (const auto& v : lp.b)
    if (v < 0) throw std::invalid_argument("solve_lp: negative right-hand side");

  LpResult res;
  res.x.assign(n, 0);
  if (m == 0) {
    for (std::size_t j = 0; j < n; ++j)
      if (lp.c[j] > 0) {
        res.status = LpStatus::unbounded;
        return res;
      }
    return res;
  }

  // tableau: columns 0..n-1 structural, n..n+m-1 slack, n+m rhs;
  // obj holds reduced costs, obj[n+m] = -(current value)
  std::size_t width = n + m + 1;
  std::vector<std::vector<Rat>> t(m, std::vector<Rat>(width, 0));
  std::vector<Rat> obj(width, 0);
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i][j] = lp.A[i][j];
    t[i][n + i] = 1;
    t[i][width - 1] = lp.b[i];
    basis[i] = n + i;
  }
  for (std::size_t j = 0; j < n; ++j) obj[j] = lp.c[j];

  for (;;) {
    std::size_t col = width;
    for (std::size_t j = 0; j + 1 < width; ++j)
      if (obj[j] > 0) {
        col = j;
        break;
      }
    if (col == width) break;

    std::size_t row = m;
    Rat best_ratio = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][col] <= 0) continue;
      Rat ratio = t[i][width - 1] / t[i][col];
      if (row == m || ratio < best_ratio ||
          (ratio == best_ratio && basis[i] < basis[row])) {
        row = i;
        best_ratio = ratio;
      }
    }
    if (row == m) {
      res.status = LpStatus::unbounded;
      return res;
    }

    ++res.pivots;
    Rat piv = t[row][col];
    for (auto& v : t[row]) v /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || t[i][col] == 0) continue;
      Rat f = t[i][col];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[row][j];
    }
    if (obj[col] != 0) {
      Rat f = obj[col];
      for (std::size_t j = 0; j < width; ++j) obj[j] -= f * t[row][j];
    }
    basis[row] = col;
  }

  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) res.x[basis[i]] = t[i][width - 1];
  res.value = -obj[width - 1];
  res.value.canonicalize();
  for (auto& v : res.x) v.canonicalize();
  return res;
}

}  // namespace hg
