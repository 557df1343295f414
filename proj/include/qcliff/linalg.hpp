#pragma once

// Dense Gaussian elimination over any exact field type providing + - * /
// and is_zero() (FieldElement, RatFunc).

#include <cstddef>
#include <utility>
#include <vector>

namespace qcliff {

template <class T>
using Matrix = std::vector<std::vector<T>>;

/// Reduced row echelon form in place; returns pivot columns.
template <class T>
std::vector<std::size_t> row_reduce(Matrix<T>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    const T inv = T(1) / m[row][c];
    for (std::size_t k = c; k < cols; ++k) m[row][k] = m[row][k] * inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c].is_zero()) continue;
      const T f = m[r][c];
      for (std::size_t k = c; k < cols; ++k)
        if (!m[row][k].is_zero()) m[r][k] = m[r][k] - f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m) {
  if (m.empty()) return 0;
  return row_reduce(m, m.front().size()).size();
}

/// Basis of {v : m v = 0}.
template <class T>
std::vector<std::vector<T>> nullspace(Matrix<T> m, std::size_t cols) {
  auto pivots = row_reduce(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(cols, T(0));
    v[free] = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = T(0) - m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace qcliff
