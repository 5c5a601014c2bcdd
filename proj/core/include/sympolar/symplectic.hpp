#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sympolar/polytope.hpp"

namespace sympolar {

/// Standard symplectic form on R^{2n} with interleaved coordinates
/// (q1, p1, ..., qn, pn):  omega(x, y) = sum_i x_{2i-1} y_{2i} - x_{2i} y_{2i-1}.
/// Throws PreconditionError on odd or mismatched dimensions.
Rational omega(const RationalVector& x, const RationalVector& y);

/// Gram matrix L of omega, omega(x, y) = <x, L y>, read off from the basis.
Matrix symplectic_gram(std::size_t dim);

/// The linear map taking the classical polar to the symplectic polar,
/// X^omega = polar_map * X°. Equal to L^{-1}.
Matrix symplectic_polar_map(std::size_t dim);

/// X^omega = {y : omega(x, y) <= 1 for all x in X}. Requires a centrally
/// symmetric polytope with the origin in its interior.
Polytope symplectic_polar(const Polytope& p);

struct OmegaWitness {
  RationalVector v;
  RationalVector w;
  Rational value;
};

struct SubsetCheck {
  bool holds = true;
  /// Most violating ordered vertex pair when the check fails.
  std::optional<OmegaWitness> witness;
};

/// K ⊆ K^omega, tested as omega(v, w) <= 1 over all ordered vertex pairs.
SubsetCheck check_subset_sympolar(const Polytope& p);

/// Same pairwise test over an arbitrary point list.
SubsetCheck check_pairwise_omega(std::span<const RationalVector> points);

bool is_self_polar(const Polytope& p);

/// Reciprocal of max |omega(x, y)| over x, y in X^omega.
Rational c_j(const Polytope& p);

/// conv(K ∪ S) for a centrally symmetric, pairwise compatible subset S of
/// the vertices of K^omega. Throws PreconditionError with a witness when S is
/// not admissible; the result is checked to satisfy M ⊆ M^omega.
Polytope expand_step(const Polytope& k, std::span<const RationalVector> subset);

}  // namespace sympolar
