#pragma once

#include <optional>
#include <span>

#include "sympolar/vector.hpp"

// Exact Gaussian elimination over the rationals.

namespace sympolar {

Rational determinant(Matrix m);

std::size_t rank(Matrix m);

/// Rank of the row set {p - p0}.
std::size_t affine_rank(std::span<const RationalVector> points);

/// nullopt when m is singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Unique solution of m x = b, nullopt when m is singular.
std::optional<RationalVector> solve(Matrix m, RationalVector b);

}  // namespace sympolar
