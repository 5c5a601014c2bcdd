#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "sympolar/errors.hpp"
#include "sympolar/polytope.hpp"

namespace sympolar::testing {

/// Seeded source of small rationals. Only the raw mt19937_64 stream is used
/// (its output is fixed by the standard), never the std distributions.
class RationalSource {
 public:
  explicit RationalSource(std::uint64_t seed) : engine_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<std::int64_t>(engine_() % span);
  }

  /// p/q with |p| <= bound * q and 1 <= q <= max_den.
  Rational rational(std::int64_t bound, std::int64_t max_den) {
    const std::int64_t q = integer(1, max_den);
    Rational r(static_cast<long>(integer(-bound * q, bound * q)), static_cast<long>(q));
    r.canonicalize();
    return r;
  }

  RationalVector vector(std::size_t dim, std::int64_t bound = 2, std::int64_t max_den = 4) {
    RationalVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = rational(bound, max_den);
    return v;
  }

  bool coin() { return (engine_() & 1u) != 0; }

 private:
  std::mt19937_64 engine_;
};

inline Polytope square() { return convex_hull(std::vector<RationalVector>{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}); }

inline Polytope cube(std::size_t dim) {
  std::vector<RationalVector> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << dim); ++mask) {
    RationalVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = (mask >> i & 1) ? 1 : -1;
    pts.push_back(v);
  }
  return convex_hull(pts);
}

inline Polytope cross_polytope(std::size_t dim) {
  std::vector<RationalVector> pts;
  for (std::size_t i = 0; i < dim; ++i) {
    RationalVector e(dim);
    e[i] = 1;
    pts.push_back(e);
    pts.push_back(-e);
  }
  return convex_hull(pts);
}

/// Hull of k random points and their negatives, redrawn until
/// full-dimensional.
inline Polytope random_symmetric(RationalSource& rng, std::size_t dim, std::size_t k, std::int64_t bound = 2,
                                 std::int64_t max_den = 4) {
  for (;;) {
    std::vector<RationalVector> pts;
    for (std::size_t i = 0; i < k; ++i) {
      auto v = rng.vector(dim, bound, max_den);
      pts.push_back(v);
      pts.push_back(-v);
    }
    try {
      return convex_hull(pts);
    } catch (const DimensionError&) {
    }
  }
}

/// Random convex combination of the vertices of p.
inline RationalVector random_point_in(RationalSource& rng, const Polytope& p) {
  const auto& verts = p.vertices();
  std::vector<Rational> weights(verts.size());
  Rational total = 0;
  for (auto& w : weights) {
    w = rng.integer(0, 5);
    total += w;
  }
  if (total == 0) {
    weights[0] = 1;
    total = 1;
  }
  RationalVector x(p.dim());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    RationalVector term = verts[i];
    term *= weights[i] / total;
    x += term;
  }
  return x;
}

}  // namespace sympolar::testing
