#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "svol/exact.hpp"

namespace svol::linalg {

using Matrix = std::vector<std::vector<GaussianRational>>;
using Vector = std::vector<GaussianRational>;

/// Solves M x = b exactly by reduction to row echelon form. Free variables
/// are set to zero, so the result is the unique solution supported on the
/// pivot columns (leftmost columns are preferred as pivots).
inline std::optional<Vector> solve(Matrix m, Vector b) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    std::swap(b[p], b[r]);
    GaussianRational inv = GaussianRational(1) / m[r][c];
    for (std::size_t k = c; k < cols; ++k) m[r][k] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      GaussianRational factor = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= factor * m[r][k];
      b[i] -= factor * b[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (!b[i].is_zero()) return std::nullopt;
  Vector x(cols);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = b[i];
  return x;
}

inline GaussianRational determinant(Matrix m) {
  const std::size_t n = m.size();
  GaussianRational det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return GaussianRational(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      GaussianRational factor = m[i][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[i][k] -= factor * m[c][k];
    }
  }
  return det;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  Matrix out(a.size(), Vector(b.empty() ? 0 : b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b[0].size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

inline GaussianRational trace(const Matrix& a) {
  GaussianRational t;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

}  // namespace svol::linalg
