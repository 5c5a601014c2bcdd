#include <algorithm>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "sympolar/errors.hpp"
#include "sympolar/linalg.hpp"
#include "sympolar/polytope.hpp"

// Facet enumeration by the double description method on the homogenized
// cone. Point p becomes the row a = (1, p); a facet (b, c) of the cone
// {y : <a_i, y> >= 0 for all i} is the halfspace <-c, x> <= b.

namespace sympolar {

namespace {

using Bits = boost::dynamic_bitset<>;
using IntVector = std::vector<mpz_class>;

struct Ray {
  IntVector y;
  Bits zero;  // processed rows on which <a, y> = 0
};

IntVector integer_row(const RationalVector& p) {
  mpz_class lcm = 1;
  for (const auto& c : p) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  IntVector row;
  row.reserve(p.dim() + 1);
  row.push_back(lcm);
  for (const auto& c : p) row.push_back(c.get_num() * (lcm / c.get_den()));
  return row;
}

mpz_class inner(const IntVector& a, const IntVector& b) {
  mpz_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
  return s;
}

void make_primitive(IntVector& y) {
  mpz_class g = 0;
  for (const auto& c : y) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g > 1)
    for (auto& c : y) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// Rows of an initial basis, chosen greedily in input order.
std::vector<std::size_t> choose_basis(const std::vector<IntVector>& rows, std::size_t cols) {
  std::vector<std::size_t> basis;
  std::vector<RationalVector> echelon;  // reduced copies of accepted rows
  std::vector<std::size_t> pivots;
  for (std::size_t i = 0; i < rows.size() && basis.size() < cols; ++i) {
    RationalVector r(cols);
    for (std::size_t c = 0; c < cols; ++c) r[c] = rows[i][c];
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      const std::size_t pc = pivots[k];
      if (r[pc] == 0) continue;
      const Rational f = r[pc] / echelon[k][pc];
      for (std::size_t c = 0; c < cols; ++c) r[c] -= f * echelon[k][c];
    }
    std::size_t pc = 0;
    while (pc < cols && r[pc] == 0) ++pc;
    if (pc == cols) continue;
    echelon.push_back(std::move(r));
    pivots.push_back(pc);
    basis.push_back(i);
  }
  return basis;
}

}  // namespace

Polytope convex_hull(std::span<const RationalVector> input) {
  if (input.empty()) throw DimensionError("convex_hull: empty point set", 0);
  const std::size_t dim = input.front().dim();
  if (dim == 0) throw DimensionError("convex_hull: zero-dimensional ambient space", 0);
  for (const auto& p : input) {
    if (p.dim() != dim) throw PreconditionError("convex_hull: points have mixed dimensions");
  }

  std::vector<RationalVector> points(input.begin(), input.end());
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());

  const std::size_t n = points.size();
  const std::size_t cols = dim + 1;
  std::vector<IntVector> rows;
  rows.reserve(n);
  for (const auto& p : points) rows.push_back(integer_row(p));

  const auto basis = choose_basis(rows, cols);
  if (basis.size() < cols) {
    const std::size_t affine_dim = basis.empty() ? 0 : basis.size() - 1;
    throw DimensionError("convex_hull: points span an affine subspace of dimension " + std::to_string(affine_dim) +
                             " in R^" + std::to_string(dim),
                         affine_dim);
  }

  // Extreme rays of {y : B y >= 0} are the columns of B^{-1}.
  Matrix b(cols, cols);
  for (std::size_t r = 0; r < cols; ++r)
    for (std::size_t c = 0; c < cols; ++c) b(r, c) = rows[basis[r]][c];
  const Matrix binv = *inverse(b);

  Bits processed(n);
  for (std::size_t r : basis) processed.set(r);

  std::vector<Ray> rays;
  rays.reserve(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    mpz_class lcm = 1;
    for (std::size_t r = 0; r < cols; ++r) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), binv(r, j).get_den_mpz_t());
    Ray ray{IntVector(cols), Bits(n)};
    for (std::size_t r = 0; r < cols; ++r) ray.y[r] = binv(r, j).get_num() * (lcm / binv(r, j).get_den());
    make_primitive(ray.y);
    for (std::size_t k = 0; k < cols; ++k)
      if (k != j) ray.zero.set(basis[k]);
    rays.push_back(std::move(ray));
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (processed.test(i)) continue;
    const IntVector& a = rows[i];

    std::vector<int> sign(rays.size());
    std::vector<mpz_class> value(rays.size());
    bool any_negative = false;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = inner(a, rays[r].y);
      sign[r] = sgn(value[r]);
      any_negative |= sign[r] < 0;
    }

    if (!any_negative) {
      for (std::size_t r = 0; r < rays.size(); ++r)
        if (sign[r] == 0) rays[r].zero.set(i);
      processed.set(i);
      continue;
    }

    std::vector<Ray> next;
    next.reserve(rays.size());
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (sign[p] <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (sign[q] >= 0) continue;
        Bits common = rays[p].zero & rays[q].zero;
        if (common.count() + 2 < cols) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r != p && r != q && common.is_subset_of(rays[r].zero)) adjacent = false;
        }
        if (!adjacent) continue;
        Ray fresh{IntVector(cols), std::move(common)};
        const mpz_class neg_q = -value[q];
        for (std::size_t c = 0; c < cols; ++c) {
          fresh.y[c] = value[p] * rays[q].y[c];
          mpz_addmul(fresh.y[c].get_mpz_t(), neg_q.get_mpz_t(), rays[p].y[c].get_mpz_t());
        }
        make_primitive(fresh.y);
        fresh.zero.set(i);
        next.push_back(std::move(fresh));
      }
    }
    for (std::size_t r = 0; r < rays.size(); ++r) {
      if (sign[r] < 0) continue;
      if (sign[r] == 0) rays[r].zero.set(i);
      next.push_back(std::move(rays[r]));
    }
    rays = std::move(next);
    processed.set(i);
  }

  // A point is a vertex iff it is the only point on all facets through it.
  std::vector<RationalVector> vertices;
  for (std::size_t i = 0; i < n; ++i) {
    Bits meet(n);
    meet.set();
    for (const auto& ray : rays)
      if (ray.zero.test(i)) meet &= ray.zero;
    if (meet.count() == 1) vertices.push_back(points[i]);
  }

  std::vector<HalfSpace> facets;
  facets.reserve(rays.size());
  for (const auto& ray : rays) {
    RationalVector normal(dim);
    for (std::size_t c = 0; c < dim; ++c) normal[c] = -ray.y[c + 1];
    facets.push_back({std::move(normal), Rational(ray.y[0])});
  }
  return detail::make_polytope(dim, std::move(vertices), std::move(facets));
}

}  // namespace sympolar
