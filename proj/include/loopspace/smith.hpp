#pragma once

#include <cstdlib>
#include <tuple>

#include "loopspace/matrix.hpp"

namespace loopspace {

struct SmithResult {
  Matrix d;  // diagonal, d1 | d2 | ... | dr, rest zero
  Matrix u;  // unimodular, u * m * v == d
  Matrix v;  // unimodular
  std::size_t rank = 0;
};

/// Smith normal form over Z. Pivot choice: smallest nonzero absolute value,
/// ties broken by (row, col), so U and V are reproducible.
inline SmithResult smith_normal_form(const Matrix& m) {
  SmithResult res;
  Matrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  Matrix u = Matrix::identity(rows), v = Matrix::identity(cols);

  auto find_pivot = [&](std::size_t t) -> std::pair<std::size_t, std::size_t> {
    std::size_t bi = rows, bj = cols;
    Int best(0);
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        const Int& x = a.at(i, j);
        if (x == 0) continue;
        Int ax = abs(x);
        if (bi == rows || ax < best) {
          best = ax;
          bi = i;
          bj = j;
        }
      }
    return {bi, bj};
  };

  std::size_t t = 0;
  while (t < rows && t < cols) {
    auto [pi, pj] = find_pivot(t);
    if (pi == rows) break;  // submatrix is zero
    a.swap_rows(t, pi);
    u.swap_rows(t, pi);
    a.swap_cols(t, pj);
    v.swap_cols(t, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      // clear column t
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a.at(i, t) == 0) continue;
        Int q = a.at(i, t) / a.at(t, t);  // truncated division
        if (q != 0) {
          a.add_row(i, t, -q);
          u.add_row(i, t, -q);
        }
        if (a.at(i, t) != 0) {  // remainder smaller than pivot: promote it
          a.swap_rows(t, i);
          u.swap_rows(t, i);
          clean = false;
        }
      }
      if (!clean) continue;
      // clear row t
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a.at(t, j) == 0) continue;
        Int q = a.at(t, j) / a.at(t, t);
        if (q != 0) {
          a.add_col(j, t, -q);
          v.add_col(j, t, -q);
        }
        if (a.at(t, j) != 0) {
          a.swap_cols(t, j);
          v.swap_cols(t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // pivot must divide the rest of the submatrix; if not, fold the
      // offending row in and reduce again
      for (std::size_t i = t + 1; i < rows && clean; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a.at(i, j) % a.at(t, t) != 0) {
            a.add_row(t, i, 1);
            u.add_row(t, i, 1);
            clean = false;
            break;
          }
    }
    if (a.at(t, t) < 0) {
      a.negate_row(t);
      u.negate_row(t);
    }
    ++t;
  }

  res.d = a;
  res.u = u;
  res.v = v;
  res.rank = t;
  return res;
}

}  // namespace loopspace
