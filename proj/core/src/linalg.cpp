#include "sympolar/linalg.hpp"

#include <utility>

namespace sympolar {

namespace {

// Reduces m in place to row echelon form; returns (rank, determinant sign
// flips and pivot product folded into det). det is only meaningful for
// square input.
std::pair<std::size_t, Rational> eliminate(Matrix& m) {
  Rational det = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) {
      det = 0;
      continue;
    }
    if (pivot != row) {
      for (std::size_t c = col; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
      det = -det;
    }
    det *= m(row, col);
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      if (m(r, col) == 0) continue;
      const Rational f = m(r, col) / m(row, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    ++row;
  }
  if (row < m.rows()) det = 0;
  return {row, det};
}

}  // namespace

Rational determinant(Matrix m) {
  if (m.rows() != m.cols()) return 0;
  if (m.rows() == 0) return 1;
  return eliminate(m).second;
}

std::size_t rank(Matrix m) { return eliminate(m).first; }

std::size_t affine_rank(std::span<const RationalVector> points) {
  if (points.size() < 2) return 0;
  Matrix m(points.size() - 1, points.front().dim());
  for (std::size_t r = 1; r < points.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r - 1, c) = points[r][c] - points[0][c];
  return rank(std::move(m));
}

std::optional<RationalVector> solve(Matrix m, RationalVector b) {
  const std::size_t n = m.rows();
  if (m.cols() != n || b.dim() != n) return std::nullopt;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(pivot, c), m(col, c));
      std::swap(b[pivot], b[col]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      const Rational f = m(r, col) / m(col, col);
      for (std::size_t c = col; c < n; ++c) m(r, c) -= f * m(col, c);
      b[r] -= f * b[col];
    }
  }
  RationalVector x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational s = b[i];
    for (std::size_t c = i + 1; c < n; ++c) s -= m(i, c) * x[c];
    x[i] = s / m(i, i);
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) return std::nullopt;
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && aug(pivot, col) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col)
      for (std::size_t c = 0; c < 2 * n; ++c) std::swap(aug(pivot, c), aug(col, c));
    const Rational p = aug(col, col);
    for (std::size_t c = 0; c < 2 * n; ++c) aug(col, c) /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || aug(r, col) == 0) continue;
      const Rational f = aug(r, col);
      for (std::size_t c = 0; c < 2 * n; ++c) aug(r, c) -= f * aug(col, c);
    }
  }
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

}  // namespace sympolar
