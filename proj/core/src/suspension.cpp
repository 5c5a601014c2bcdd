#include "sympolar/suspension.hpp"

#include <algorithm>
#include <string>

#include "sympolar/errors.hpp"
#include "sympolar/io.hpp"
#include "sympolar/symplectic.hpp"

namespace sympolar {

namespace {

std::vector<RationalVector> hexagon_points() {
  return {{1, 1}, {-1, -1}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}};
}

void require_positive(int n, const char* who) {
  if (n < 1) throw PreconditionError(std::string(who) + ": n must be a positive integer, got " + std::to_string(n));
}

}  // namespace

const Polytope& hexagon() {
  static const Polytope p = [] {
    const auto pts = hexagon_points();
    return convex_hull(pts);
  }();
  return p;
}

const RationalVector& hexagon_apex() {
  static const RationalVector u{1, 1};
  return u;
}

std::vector<RationalVector> suspension_vertex_list(const std::vector<RationalVector>& base_vertices) {
  const std::size_t dim = base_vertices.empty() ? 0 : base_vertices.front().dim();
  const RationalVector zero(dim);
  std::vector<RationalVector> out;
  out.reserve(4 + 2 * base_vertices.size());
  for (const RationalVector& e : {RationalVector{1, 0}, RationalVector{-1, 0}, RationalVector{0, 1}, RationalVector{0, -1}})
    out.push_back(concat(e, zero));
  const RationalVector& u = hexagon_apex();
  for (const auto& v : base_vertices) {
    out.push_back(concat(u, v));
    out.push_back(concat(-u, v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RationalVector> power_suspension_vertex_list(int n) {
  require_positive(n, "power_suspension_vertex_list");
  std::vector<RationalVector> verts = hexagon_points();
  std::sort(verts.begin(), verts.end());
  for (int k = 2; k <= n; ++k) verts = suspension_vertex_list(verts);
  return verts;
}

Polytope suspend_vertices(const Polytope& x) {
  if (!x.symmetric() || !is_self_polar(x)) {
    throw PreconditionError("suspend_vertices: X is not symplectically self-polar; use suspend_halfspaces");
  }
  const auto pts = suspension_vertex_list(x.vertices());
  Polytope result = convex_hull(pts);
  if (result.vertices() != pts) {
    throw std::logic_error("suspend_vertices: predicted points are not in convex position");
  }
  return result;
}

Polytope suspend_halfspaces(const Polytope& x) {
  if (!x.symmetric()) throw PreconditionError("suspend_halfspaces: X is not centrally symmetric");
  if (!x.contains_origin_in_interior()) {
    throw PolarityDomainError("suspend_halfspaces: the origin is not interior to X");
  }
  // omega(u, v) = v_2 - v_1 for u = (1,1), so eps*omega(u,v) has normal (-eps, eps).
  std::vector<RationalVector> normals;
  for (const auto& f : x.facets()) {
    normals.push_back(concat(RationalVector{-1, 1}, f.normal));
    normals.push_back(concat(RationalVector{1, -1}, f.normal));
  }
  const RationalVector zero(x.dim());
  for (const auto& f : hexagon().facets()) normals.push_back(concat(f.normal, zero));
  // The body is the polar of the hull of its offset-1 normals; normals that
  // are not vertices of that hull are redundant inequalities.
  return polar_dual(convex_hull(normals));
}

bool suspension_membership(const RationalVector& v, const RationalVector& x, const Polytope& base) {
  if (v.dim() != 2 || x.dim() != base.dim()) {
    throw PreconditionError("suspension_membership: expected v in R^2 and x in R^" + std::to_string(base.dim()));
  }
  if (!hexagon().contains(v)) return false;
  return abs(omega(hexagon_apex(), v)) + gauge_norm(base, x) <= 1;
}

std::filesystem::path power_suspend_cache_file(const std::filesystem::path& cache_dir, int n) {
  return cache_dir / ("power_suspend_n" + std::to_string(n) + ".json");
}

Polytope power_suspend(int n, const std::optional<std::filesystem::path>& cache_dir) {
  require_positive(n, "power_suspend");
  if (cache_dir) {
    const auto file = power_suspend_cache_file(*cache_dir, n);
    if (std::filesystem::exists(file)) {
      Polytope cached = read_polytope_file(file);
      if (cached.vertices() == power_suspension_vertex_list(n)) return cached;
    }
  }
  Polytope p = hexagon();
  for (int k = 2; k <= n; ++k) p = suspend_vertices(p);
  if (cache_dir) write_polytope_file(power_suspend_cache_file(*cache_dir, n), p);
  return p;
}

Rational volume_closed_form(int n) {
  require_positive(n, "volume_closed_form");
  Rational v = 1;
  for (int k = 0; k < n; ++k) v *= ratio(2 * (4 * k + 3), (k + 1) * (4 * k + 2));
  return v;
}

std::int64_t vertex_count_formula(int n) {
  require_positive(n, "vertex_count_formula");
  return 10 * ((std::int64_t{1} << (n - 1)) - 1) + 6;
}

Rational suspension_volume_factor(int n) {
  if (n < 1) throw PreconditionError("suspension_volume_factor: n must be positive");
  return ratio(4 * n + 3, (n + 1) * (2 * n + 1));
}

InductionCertificate induction_certificate(int n) {
  require_positive(n, "induction_certificate");
  std::vector<RationalVector> vs{{1, 0}, {1, 1}, {0, 1}};
  for (int k = 2; k <= n; ++k) {
    const RationalVector zero(vs.front().dim());
    std::vector<RationalVector> next;
    next.reserve(vs.size() + 2);
    for (const auto& v : vs) next.push_back(concat(hexagon_apex(), v));
    next.push_back(concat(RationalVector{0, 1}, zero));
    next.push_back(concat(RationalVector{-1, 0}, zero));
    vs = std::move(next);
  }

  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (vs[i] == vs[j] || vs[i] == -vs[j] || omega(vs[i], vs[j]) != 1) {
        throw std::logic_error("induction_certificate: invariant failed at pair " + std::to_string(i) + "," +
                               std::to_string(j));
      }
    }
  return {n, std::move(vs)};
}

}  // namespace sympolar
