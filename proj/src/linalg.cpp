// SPDX-License-Identifier: Apache-2.0
#include "rslab/linalg.hpp"

#include <utility>

namespace rslab {

namespace {

std::size_t find_pivot(const Matrix& a, std::size_t col, std::size_t from) {
  for (std::size_t r = from; r < a.size(); ++r) {
    if (a[r][col] != 0) return r;
  }
  return a.size();
}

}  // namespace

Elem determinant(const Arith& ar, Matrix a) {
  const std::size_t n = a.size();
  Elem det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t p = find_pivot(a, c, c);
    if (p == n) return 0;
    // Row swaps flip the sign, which is invisible in characteristic 2.
    std::swap(a[p], a[c]);
    det = ar.mul(det, a[c][c]);
    const Elem piv_inv = ar.inv(a[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const Elem f = ar.mul(a[r][c], piv_inv);
      for (std::size_t k = c; k < n; ++k) a[r][k] = ar.sub(a[r][k], ar.mul(f, a[c][k]));
    }
  }
  return det;
}

int matrix_rank(const Field& f, Matrix a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    const std::size_t p = find_pivot(a, c, rank);
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    const Elem piv_inv = f.inv(a[rank][c]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][c] == 0) continue;
      const Elem m = f.mul(a[r][c], piv_inv);
      for (std::size_t k = c; k < cols; ++k) a[r][k] = f.sub(a[r][k], f.mul(m, a[rank][k]));
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

std::optional<std::vector<Elem>> solve_linear(const Arith& ar, Matrix a, std::vector<Elem> b) {
  const std::size_t n = a.size();
  for (std::size_t c = 0; c < n; ++c) {
    const std::size_t p = find_pivot(a, c, c);
    if (p == n) return std::nullopt;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    const Elem piv_inv = ar.inv(a[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c] == 0) continue;
      const Elem f = ar.mul(a[r][c], piv_inv);
      for (std::size_t k = c; k < n; ++k) a[r][k] = ar.sub(a[r][k], ar.mul(f, a[c][k]));
      b[r] = ar.sub(b[r], ar.mul(f, b[c]));
    }
  }
  std::vector<Elem> x(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    Elem acc = b[i];
    for (std::size_t k = i + 1; k < n; ++k) acc = ar.sub(acc, ar.mul(a[i][k], x[k]));
    x[i] = ar.div(acc, a[i][i]);
  }
  return x;
}

std::vector<Elem> mat_vec(const Field& f, const Matrix& a, const std::vector<Elem>& x) {
  std::vector<Elem> y(a.size(), 0);
  for (std::size_t r = 0; r < a.size(); ++r) {
    Elem acc = 0;
    for (std::size_t c = 0; c < x.size() && c < a[r].size(); ++c) acc ^= f.mul(a[r][c], x[c]);
    y[r] = acc;
  }
  return y;
}

}  // namespace rslab
