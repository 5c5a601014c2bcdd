#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "sympolar/rational.hpp"
#include "sympolar/vector.hpp"

namespace sympolar {

/// The closed halfspace {x : <normal, x> <= offset}.
///
/// Canonical scaling: offset 1 whenever the offset is positive (bodies with
/// the origin in their interior), otherwise a primitive integer normal.
struct HalfSpace {
  RationalVector normal;
  Rational offset;

  Rational slack(const RationalVector& x) const { return offset - dot(normal, x); }
  bool contains(const RationalVector& x) const { return slack(x) >= 0; }

  friend bool operator==(const HalfSpace&, const HalfSpace&) = default;
  friend bool operator<(const HalfSpace& a, const HalfSpace& b) {
    if (a.normal == b.normal) return a.offset < b.offset;
    return a.normal < b.normal;
  }
};

HalfSpace canonical_halfspace(RationalVector normal, Rational offset);

class Polytope;

namespace detail {
/// Builds a polytope from representations already known to be consistent;
/// only sorting and facet rescaling are applied.
Polytope make_polytope(std::size_t dim, std::vector<RationalVector> vertices, std::vector<HalfSpace> facets);
}  // namespace detail

/// Full-dimensional convex polytope in canonical form: the extreme points
/// sorted lexicographically, plus the facet halfspaces sorted by normal.
/// Immutable once built; equality compares the canonical vertex lists.
class Polytope {
 public:
  Polytope() = default;

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<RationalVector>& vertices() const noexcept { return vertices_; }
  const std::vector<HalfSpace>& facets() const noexcept { return facets_; }

  /// Vertex list closed under negation.
  bool symmetric() const noexcept { return symmetric_; }
  bool contains_origin_in_interior() const;
  bool contains(const RationalVector& x) const;

  /// Index of a vertex in the canonical list, or -1.
  std::ptrdiff_t vertex_index(const RationalVector& v) const;

  friend bool operator==(const Polytope& a, const Polytope& b) {
    return a.dim_ == b.dim_ && a.vertices_ == b.vertices_;
  }

 private:
  friend Polytope detail::make_polytope(std::size_t, std::vector<RationalVector>, std::vector<HalfSpace>);

  std::size_t dim_ = 0;
  std::vector<RationalVector> vertices_;
  std::vector<HalfSpace> facets_;
  bool symmetric_ = false;
};

/// Hull of a finite point set via exact double description.
/// Throws DimensionError when the points do not affinely span R^d.
Polytope convex_hull(std::span<const RationalVector> points);

/// Classical polar {y : <x, y> <= 1 for all x in P}. Throws
/// PolarityDomainError unless the origin is interior.
Polytope polar_dual(const Polytope& p);

/// Exact Lebesgue volume via a pulling triangulation from the
/// lexicographically smallest vertex.
Rational volume(const Polytope& p);

/// Minkowski functional min{t >= 0 : x in tP}; requires 0 interior.
Rational gauge_norm(const Polytope& p, const RationalVector& x);

/// h_P(direction) = max over vertices of <v, direction>.
Rational support_value(const Polytope& p, const RationalVector& direction);

/// Area of the projection onto the first two coordinates.
Rational shadow_area(const Polytope& p);

/// Image of P under an invertible square matrix. Throws PreconditionError on
/// singular or mismatched input.
Polytope apply_linear(const Matrix& m, const Polytope& p);

/// Face counts (f_0, ..., f_{d-1}).
std::vector<std::size_t> face_counts(const Polytope& p);

}  // namespace sympolar
