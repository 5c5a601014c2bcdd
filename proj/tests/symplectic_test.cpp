#include <vector>

#include <gtest/gtest.h>

#include "sympolar/errors.hpp"
#include "sympolar/generation.hpp"
#include "sympolar/linalg.hpp"
#include "sympolar/suspension.hpp"
#include "sympolar/symplectic.hpp"
#include "support/fixtures.hpp"

namespace sympolar {
namespace {

using testing::RationalSource;

// omega straight from its coordinate formula, for checking the Gram matrix.
Rational omega_by_formula(const RationalVector& x, const RationalVector& y) {
  Rational s = 0;
  for (std::size_t i = 0; i + 1 < x.dim(); i += 2) s += x[i] * y[i + 1] - x[i + 1] * y[i];
  return s;
}

TEST(Omega, Values) {
  EXPECT_EQ(omega({1, 1}, {1, 0}), -1);
  EXPECT_EQ(omega({1, 0}, {0, 1}), 1);
  EXPECT_EQ(omega({1, 1, 1, 0}, {1, 1, 1, 1}), 1);
  EXPECT_THROW(omega({1, 0, 0}, {0, 1, 0}), PreconditionError);
  EXPECT_THROW(omega({1, 0}, {0, 1, 0, 0}), PreconditionError);
}

TEST(Omega, AntisymmetricBlockAdditiveAndMatchesGram) {
  RationalSource rng(101);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t dim = 2 * static_cast<std::size_t>(rng.integer(1, 3));
    const RationalVector x = rng.vector(dim), y = rng.vector(dim);
    ASSERT_EQ(omega(x, y), -omega(y, x));
    ASSERT_EQ(omega(x, x), 0);
    ASSERT_EQ(omega(x, y), omega_by_formula(x, y));
    ASSERT_EQ(omega(x, y), dot(x, symplectic_gram(dim) * y));
    const RationalVector v = rng.vector(2), w = rng.vector(2);
    ASSERT_EQ(omega(concat(v, x), concat(w, y)), omega(v, w) + omega(x, y));
  }
}

TEST(SymplecticPolar, Examples) {
  EXPECT_EQ(symplectic_polar(testing::square()), testing::cross_polytope(2));
  EXPECT_EQ(symplectic_polar(hexagon()), hexagon());
  const Polytope p2 = power_suspend(2);
  EXPECT_EQ(symplectic_polar(p2), p2);
}

TEST(SymplecticPolar, DefinitionHoldsAtVertices) {
  // y ∈ X^omega iff omega(x, y) <= 1 on the vertices of X, with equality
  // somewhere for boundary points.
  RationalSource rng(102);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t dim = 2 * static_cast<std::size_t>(rng.integer(1, 2));
    const Polytope x = testing::random_symmetric(rng, dim, dim + 1);
    const Polytope polar = symplectic_polar(x);
    for (const auto& y : polar.vertices()) {
      Rational best = omega(x.vertices().front(), y);
      for (const auto& v : x.vertices()) best = std::max(best, omega(v, y));
      ASSERT_EQ(best, 1);
    }
  }
}

TEST(SymplecticPolar, Involution) {
  RationalSource rng(103);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t dim = 2 * static_cast<std::size_t>(rng.integer(1, 2));
    const Polytope x = testing::random_symmetric(rng, dim, dim + 1);
    ASSERT_EQ(symplectic_polar(symplectic_polar(x)), x);
  }
}

TEST(SymplecticPolar, RejectsAsymmetricInput) {
  const Polytope tri = convex_hull(std::vector<RationalVector>{{-1, -1}, {2, -1}, {-1, 2}});
  EXPECT_THROW(symplectic_polar(tri), PreconditionError);
}

TEST(SubsetCheck, Examples) {
  EXPECT_TRUE(check_subset_sympolar(hexagon()).holds);
  EXPECT_TRUE(check_subset_sympolar(testing::cross_polytope(2)).holds);
  const SubsetCheck sq = check_subset_sympolar(testing::square());
  ASSERT_FALSE(sq.holds);
  ASSERT_TRUE(sq.witness.has_value());
  EXPECT_EQ(sq.witness->v, (RationalVector{1, 1}));
  EXPECT_EQ(sq.witness->w, (RationalVector{-1, 1}));
  EXPECT_EQ(sq.witness->value, 2);
}

TEST(SelfPolar, Examples) {
  EXPECT_TRUE(is_self_polar(hexagon()));
  EXPECT_FALSE(is_self_polar(testing::square()));
  EXPECT_FALSE(is_self_polar(testing::cross_polytope(2)));
  for (int n = 1; n <= 3; ++n) EXPECT_TRUE(is_self_polar(power_suspend(n))) << n;
}

TEST(SelfPolar, ConsistentWithSubsetCheckAndCj) {
  for (int n = 1; n <= 2; ++n) {
    const Polytope p = power_suspend(n);
    const SubsetCheck check = check_subset_sympolar(p);
    EXPECT_TRUE(check.holds);
    EXPECT_FALSE(check.witness.has_value());
    EXPECT_EQ(c_j(p), 1);
  }
}

TEST(Cj, Values) {
  EXPECT_EQ(c_j(hexagon()), 1);
  EXPECT_EQ(c_j(power_suspend(2)), 1);
  EXPECT_EQ(c_j(testing::square()), 1);
  // Scaling X by 2 shrinks X^omega by 2 and multiplies c_J by 4.
  EXPECT_EQ(c_j(apply_linear(Matrix::from_rows({{2, 0}, {0, 2}}), hexagon())), 4);
}

TEST(GaugeBound, OmegaBoundedByGaugeProduct) {
  RationalSource rng(104);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t dim = 2 * static_cast<std::size_t>(rng.integer(1, 2));
    const Polytope x_body = testing::random_symmetric(rng, dim, dim + 1);
    const Polytope polar = symplectic_polar(x_body);
    const RationalVector x = rng.vector(dim, 3, 5), y = rng.vector(dim, 3, 5);
    ASSERT_LE(abs(omega(x, y)), gauge_norm(x_body, x) * gauge_norm(polar, y));
    // The bound is attained at a vertex of X^omega (gauge 1 there).
    Rational best = 0;
    for (const auto& v : polar.vertices()) best = std::max(best, abs(omega(x, v)));
    ASSERT_EQ(best, gauge_norm(x_body, x));
  }
}

TEST(HexagonBound, OmegaBoundedOnHexagon) {
  RationalSource rng(105);
  const RationalVector& u = hexagon_apex();
  for (int trial = 0; trial < 1000; ++trial) {
    const RationalVector v = testing::random_point_in(rng, hexagon());
    const RationalVector w = testing::random_point_in(rng, hexagon());
    const Rational t = abs(omega(u, v)), s = abs(omega(u, w));
    ASSERT_LE(abs(omega(v, w)), t + s - t * s) << v << " " << w;
  }
}

TEST(ExpandStep, Examples) {
  const Polytope cross = testing::cross_polytope(2);
  EXPECT_EQ(expand_step(cross, std::vector<RationalVector>{{1, 1}, {-1, -1}}), hexagon());
  EXPECT_EQ(expand_step(hexagon(), std::vector<RationalVector>{}), hexagon());
  EXPECT_EQ(expand_step(hexagon(), hexagon().vertices()), hexagon());
}

TEST(ExpandStep, RejectsInadmissibleSubsets) {
  const Polytope cross = testing::cross_polytope(2);
  // Both diagonals: omega((1,1),(1,-1)) = -2.
  EXPECT_THROW(expand_step(cross, std::vector<RationalVector>{{1, 1}, {-1, -1}, {1, -1}, {-1, 1}}),
               PreconditionError);
  // Not symmetric.
  EXPECT_THROW(expand_step(cross, std::vector<RationalVector>{{1, 1}}), PreconditionError);
  // Not a vertex of K^omega.
  EXPECT_THROW(expand_step(cross, std::vector<RationalVector>{{1, 0}, {-1, 0}}), PreconditionError);
}

TEST(ExpandStep, FuzzKeepsSubsetProperty) {
  RationalSource rng(106);
  int steps = 0;
  for (std::uint64_t seed = 1; steps < 120; ++seed) {
    const std::size_t dim = seed % 3 == 0 ? 4 : 2;
    // Points in the open unit ball satisfy |omega| < 1 pairwise.
    std::vector<RationalVector> pts;
    for (std::size_t i = 0; i < dim; ++i) {
      RationalVector v(dim);
      Rational norm2 = 0;
      do {
        v = rng.vector(dim, 1, 4);
        norm2 = dot(v, v);
      } while (norm2 >= 1 || norm2 == 0);
      pts.push_back(v);
      pts.push_back(-v);
    }
    Polytope k;
    try {
      k = convex_hull(pts);
    } catch (const DimensionError&) {
      continue;
    }
    for (int round = 0; round < 3; ++round) {
      const Polytope polar = symplectic_polar(k);
      std::vector<RationalVector> accepted;
      for (const auto& v : polar.vertices()) {
        if (!is_positive_representative(v) || !rng.coin()) continue;
        bool ok = true;
        for (const auto& a : accepted) ok = ok && abs(omega(a, v)) <= 1;
        if (ok) accepted.push_back(v);
      }
      std::vector<RationalVector> subset;
      for (const auto& a : accepted) {
        subset.push_back(a);
        subset.push_back(-a);
      }
      k = expand_step(k, subset);
      ASSERT_TRUE(check_subset_sympolar(k).holds);
      ++steps;
    }
  }
}

}  // namespace
}  // namespace sympolar
