#pragma once

#include <optional>
#include <vector>

#include "qsuper/scalar.hpp"

namespace qsuper {

using Matrix = std::vector<std::vector<Scalar>>;
using Vector = std::vector<Scalar>;

/// Reduced row echelon form over the scalar field. Pivots are chosen by
/// smallest coefficient size to limit expression swell.
struct RowEchelon {
  Matrix rows;               // reduced rows, one per pivot
  std::vector<int> pivots;   // pivot column of each row
  std::size_t cols = 0;

  std::size_t rank() const { return pivots.size(); }
};

inline RowEchelon row_reduce(Matrix m, std::size_t cols) {
  RowEchelon out;
  out.cols = cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::optional<std::size_t> best;
    std::size_t best_w = 0;
    for (std::size_t i = r; i < m.size(); ++i) {
      if (m[i][c].is_zero()) continue;
      std::size_t w = m[i][c].weight();
      if (!best || w < best_w) best = i, best_w = w;
    }
    if (!best) continue;
    std::swap(m[r], m[*best]);
    Scalar inv = m[r][c].inv();
    for (std::size_t k = c; k < cols; ++k)
      if (!m[r][k].is_zero()) m[r][k] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Scalar f = m[i][c];
      for (std::size_t k = c; k < cols; ++k)
        if (!m[r][k].is_zero()) m[i][k] -= f * m[r][k];
    }
    out.pivots.push_back(static_cast<int>(c));
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  return out;
}

inline std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  return row_reduce(m, m.front().size()).rank();
}

/// Basis of { x : m x = 0 }.
inline std::vector<Vector> nullspace(const Matrix& m, std::size_t cols) {
  RowEchelon e = row_reduce(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = Scalar(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.rows[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One solution of m x = b, if any.
inline std::optional<Vector> solve(const Matrix& m, const Vector& b, std::size_t cols) {
  Matrix aug = m;
  for (std::size_t i = 0; i < aug.size(); ++i) {
    aug[i].resize(cols + 1);
    aug[i][cols] = b[i];
  }
  RowEchelon e = row_reduce(aug, cols + 1);
  Vector x(cols);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    if (e.pivots[r] == static_cast<int>(cols)) return std::nullopt;
    x[e.pivots[r]] = e.rows[r][cols];
  }
  return x;
}

/// Rank of the matrix with t specialized to a rational value. This is a
/// lower bound for the rank over Q(i)(t). Returns nullopt if an entry has a
/// pole there or carries a radical.
inline std::optional<std::size_t> specialized_rank(const Matrix& m, const GaussRat& t0) {
  if (m.empty()) return 0;
  std::size_t cols = m.front().size();
  std::vector<std::vector<GaussRat>> a(m.size(), std::vector<GaussRat>(cols));
  try {
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) {
        if (m[i][j].is_zero()) continue;
        if (!m[i][j].is_rational()) return std::nullopt;
        a[i][j] = m[i][j].rational().eval(t0);
      }
  } catch (const PoleError&) {
    return std::nullopt;
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
    std::size_t p = r;
    while (p < a.size() && a[p][c].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[r], a[p]);
    GaussRat inv = a[r][c].inv();
    for (std::size_t k = c; k < cols; ++k) a[r][k] *= inv;
    for (std::size_t i = r + 1; i < a.size(); ++i) {
      if (a[i][c].is_zero()) continue;
      GaussRat f = a[i][c];
      for (std::size_t k = c; k < cols; ++k)
        if (!a[r][k].is_zero()) a[i][k] -= f * a[r][k];
    }
    ++r;
  }
  return r;
}

}  // namespace qsuper
