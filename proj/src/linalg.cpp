// Copyright (c) the crnet contributors.
// SPDX-License-Identifier: Apache-2.0
#include "crnet/linalg.hpp"

#include <algorithm>

#include "crnet/errors.hpp"

namespace crnet {

std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  std::size_t cols = m[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rational inv = m[row][col];
    for (std::size_t j = col; j < cols; ++j) m[row][j] /= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rational factor = m[i][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= factor * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix copy = m;
  return rref(copy).size();
}

RationalMatrix basis_of_span(const RationalMatrix& vectors, std::size_t dim) {
  for (const auto& v : vectors) {
    if (v.size() != dim) throw Error(ErrorCode::DimensionMismatch, "span vector has wrong length");
  }
  RationalMatrix copy = vectors;
  auto pivots = rref(copy);
  RationalMatrix basis;
  for (std::size_t i = 0; i < pivots.size(); ++i) basis.push_back(copy[i]);
  return basis;
}

RationalMatrix nullspace_basis(const RationalMatrix& m, std::size_t dim) {
  RationalMatrix copy = m;
  for (const auto& v : copy) {
    if (v.size() != dim) throw Error(ErrorCode::DimensionMismatch, "matrix row has wrong length");
  }
  auto pivots = rref(copy);
  std::vector<bool> is_pivot(dim, false);
  for (auto p : pivots) is_pivot[p] = true;
  RationalMatrix basis;
  for (std::size_t free = 0; free < dim; ++free) {
    if (is_pivot[free]) continue;
    RationalVector x(dim, Rational(0));
    x[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -copy[i][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace crnet
