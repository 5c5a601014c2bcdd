#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <vector>

#include "sympolar/polytope.hpp"

namespace sympolar {

/// The hexagon P = conv{±(1,1), ±(1,0), ±(0,1)}, the base of every
/// suspension.
const Polytope& hexagon();

/// The marked vertex u = (1,1) of the hexagon.
const RationalVector& hexagon_apex();

/// The vertex list of P ⋉ K predicted for self-polar K:
/// ({±(1,0), ±(0,1)} × {0}) ∪ ({±u} × V(K)), sorted.
std::vector<RationalVector> suspension_vertex_list(const std::vector<RationalVector>& base_vertices);

/// Canonical vertex list of P^{⋉n} from the recursive vertex formula, without
/// computing any hull.
std::vector<RationalVector> power_suspension_vertex_list(int n);

/// P ⋉ X as the hull of its predicted vertices. X must be symplectically
/// self-polar (otherwise use suspend_halfspaces); throws PreconditionError.
Polytope suspend_vertices(const Polytope& x);

/// P ⋉ X from its defining inequalities |omega(u, v)| + ||x||_X <= 1 and
/// v ∈ P. Valid for every centrally symmetric X with 0 interior.
Polytope suspend_halfspaces(const Polytope& x);

/// (v, x) ∈ P ⋉ X, tested directly from the definition.
bool suspension_membership(const RationalVector& v, const RationalVector& x, const Polytope& base);

/// P^{⋉n}; P^{⋉1} = P. With a cache directory, the result is read from or
/// atomically written to power_suspend_n<n>.json inside it.
Polytope power_suspend(int n, const std::optional<std::filesystem::path>& cache_dir = std::nullopt);

std::filesystem::path power_suspend_cache_file(const std::filesystem::path& cache_dir, int n);

/// vol P^{⋉n} = 2^n / n! * prod_{k<n} (4k+3)/(4k+2)
/// (the Gamma quotient Γ(n+3/4)Γ(1/2) / (Γ(n+1/2)Γ(3/4)) telescopes to the
/// product through Γ(x+1) = xΓ(x)).
Rational volume_closed_form(int n);

/// 10(2^{n-1} - 1) + 6.
std::int64_t vertex_count_formula(int n);

/// Recurrence factor vol(P ⋉ X) / vol(X) = (4n+3) / ((n+1)(2n+1)) for X ⊂ R^{2n}.
Rational suspension_volume_factor(int n);

/// 2n+1 pairwise distinct, pairwise non-antipodal vertices of P^{⋉n} with
/// omega(v_i, v_j) = 1 for all i < j.
struct InductionCertificate {
  int n = 0;
  std::vector<RationalVector> vertices;
};

InductionCertificate induction_certificate(int n);

}  // namespace sympolar
