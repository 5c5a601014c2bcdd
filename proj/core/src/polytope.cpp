#include "sympolar/polytope.hpp"

#include <algorithm>
#include <string>

#include "sympolar/errors.hpp"
#include "sympolar/linalg.hpp"

namespace sympolar {

HalfSpace canonical_halfspace(RationalVector normal, Rational offset) {
  if (offset > 0) {
    const Rational inv = 1 / offset;
    normal *= inv;
    return {std::move(normal), Rational(1)};
  }
  RationalVector prim = primitive_direction(normal);
  for (std::size_t i = 0; i < normal.dim(); ++i) {
    if (normal[i] != 0) {
      offset *= prim[i] / normal[i];
      break;
    }
  }
  return {std::move(prim), std::move(offset)};
}

namespace detail {

Polytope make_polytope(std::size_t dim, std::vector<RationalVector> vertices, std::vector<HalfSpace> facets) {
  Polytope p;
  p.dim_ = dim;
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  for (auto& f : facets) f = canonical_halfspace(std::move(f.normal), std::move(f.offset));
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  p.vertices_ = std::move(vertices);
  p.facets_ = std::move(facets);
  p.symmetric_ = std::all_of(p.vertices_.begin(), p.vertices_.end(), [&](const RationalVector& v) {
    return std::binary_search(p.vertices_.begin(), p.vertices_.end(), -v);
  });
  return p;
}

}  // namespace detail

bool Polytope::contains_origin_in_interior() const {
  return !facets_.empty() &&
         std::all_of(facets_.begin(), facets_.end(), [](const HalfSpace& h) { return h.offset > 0; });
}

bool Polytope::contains(const RationalVector& x) const {
  return std::all_of(facets_.begin(), facets_.end(), [&](const HalfSpace& h) { return h.contains(x); });
}

std::ptrdiff_t Polytope::vertex_index(const RationalVector& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || !(*it == v)) return -1;
  return it - vertices_.begin();
}

Polytope polar_dual(const Polytope& p) {
  if (!p.contains_origin_in_interior()) {
    throw PolarityDomainError("polar_dual: the origin is not an interior point");
  }
  std::vector<RationalVector> vertices;
  vertices.reserve(p.facets().size());
  for (const auto& f : p.facets()) vertices.push_back(f.normal);
  std::vector<HalfSpace> facets;
  facets.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) facets.push_back({v, Rational(1)});
  return detail::make_polytope(p.dim(), std::move(vertices), std::move(facets));
}

Rational gauge_norm(const Polytope& p, const RationalVector& x) {
  if (!p.contains_origin_in_interior()) {
    throw PolarityDomainError("gauge_norm: the origin is not an interior point");
  }
  Rational best = 0;
  for (const auto& f : p.facets()) {
    Rational t = dot(f.normal, x);
    if (t > best) best = std::move(t);
  }
  return best;
}

Rational support_value(const Polytope& p, const RationalVector& direction) {
  Rational best = dot(p.vertices().front(), direction);
  for (const auto& v : p.vertices()) {
    Rational t = dot(v, direction);
    if (t > best) best = std::move(t);
  }
  return best;
}

namespace {

Rational cross(const RationalVector& o, const RationalVector& a, const RationalVector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

}  // namespace

Rational shadow_area(const Polytope& p) {
  if (p.dim() < 2) throw PreconditionError("shadow_area: dimension must be at least 2");
  std::vector<RationalVector> pts;
  pts.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) pts.push_back(RationalVector{v[0], v[1]});
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return 0;

  // Andrew's monotone chain, counter-clockwise.
  std::vector<RationalVector> hull(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);

  Rational twice = 0;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const auto& a = hull[i];
    const auto& b = hull[(i + 1) % hull.size()];
    twice += a[0] * b[1] - a[1] * b[0];
  }
  return abs(twice) / 2;
}

Polytope apply_linear(const Matrix& m, const Polytope& p) {
  if (m.rows() != m.cols() || m.rows() != p.dim()) {
    throw PreconditionError("apply_linear: matrix is " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                            ", polytope dimension is " + std::to_string(p.dim()));
  }
  auto inv = inverse(m);
  if (!inv) throw PreconditionError("apply_linear: matrix is singular");
  const Matrix normal_map = inv->transpose();

  std::vector<RationalVector> vertices;
  vertices.reserve(p.vertices().size());
  for (const auto& v : p.vertices()) vertices.push_back(m * v);
  std::vector<HalfSpace> facets;
  facets.reserve(p.facets().size());
  for (const auto& f : p.facets()) facets.push_back({normal_map * f.normal, f.offset});
  return detail::make_polytope(p.dim(), std::move(vertices), std::move(facets));
}

}  // namespace sympolar
