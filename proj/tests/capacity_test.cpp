#include <vector>

#include <gtest/gtest.h>

#include "sympolar/capacity.hpp"
#include "sympolar/enumeration.hpp"
#include "sympolar/errors.hpp"
#include "sympolar/suspension.hpp"
#include "sympolar/symplectic.hpp"
#include "support/fixtures.hpp"

namespace sympolar {
namespace {

using testing::RationalSource;

Matrix scaled_identity(std::size_t dim, const Rational& lambda) {
  Matrix m = Matrix::identity(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = lambda;
  return m;
}

CapacityCertificate vertex_cert(const Polytope& p, const std::vector<RationalVector>& signed_vertices,
                                const std::vector<Rational>& coeffs) {
  const auto gens = capacity_generators(p, GeneratorKind::Vertices);
  CapacityCertificate cert;
  cert.kind = GeneratorKind::Vertices;
  for (const auto& v : signed_vertices) {
    const bool positive = is_positive_representative(v);
    const RationalVector rep = positive ? v : -v;
    const auto it = std::find(gens.vectors.begin(), gens.vectors.end(), rep);
    EXPECT_NE(it, gens.vectors.end());
    cert.terms.push_back({static_cast<std::size_t>(it - gens.vectors.begin()), positive ? 1 : -1});
  }
  cert.coeffs = coeffs;
  return cert;
}

TEST(Generators, HalfListsAndWeights) {
  const auto v = capacity_generators(hexagon(), GeneratorKind::Vertices);
  EXPECT_EQ(v.vectors, (std::vector<RationalVector>{{0, 1}, {1, 0}, {1, 1}}));
  EXPECT_EQ(v.weights, (std::vector<Rational>(3, 1)));
  const auto f = capacity_generators(testing::square(), GeneratorKind::FacetNormals);
  EXPECT_EQ(f.vectors.size(), 2u);
  for (std::size_t i = 0; i < f.vectors.size(); ++i)
    EXPECT_EQ(f.weights[i], support_value(testing::square(), f.vectors[i]));
  EXPECT_THROW(capacity_generators(testing::square(), GeneratorKind::Vertices), PreconditionError);
}

TEST(EvaluateCertificate, Examples) {
  const Polytope& p = hexagon();
  const Rational third = ratio(1, 3);
  EXPECT_EQ(evaluate_certificate(p, vertex_cert(p, {{1, 0}, {1, 1}, {0, 1}}, {third, third, third})), third);
  EXPECT_EQ(evaluate_certificate(p, vertex_cert(p, {{1, 1}}, {1})), 0);
  EXPECT_THROW(evaluate_certificate(p, vertex_cert(p, {{1, 0}, {0, 1}}, {third, third})), PreconditionError);

  const Polytope p2 = power_suspend(2);
  const auto ind = induction_certificate(2);
  EXPECT_EQ(evaluate_certificate(p2, vertex_cert(p2, ind.vertices, std::vector<Rational>(5, ratio(1, 5)))),
            ratio(2, 5));
}

TEST(EqualWeight, ObjectiveIsNOver2nPlus1) {
  for (int n = 1; n <= 5; ++n) {
    const CapacityCertificate cert = equal_weight_certificate(n);
    EXPECT_EQ(cert.objective, ratio(n, 2 * n + 1)) << n;
    EXPECT_EQ(ordered_objective(cert.generators, cert.coeffs), cert.objective);
  }
  for (int n = 1; n <= 3; ++n)
    EXPECT_EQ(evaluate_certificate(power_suspend(n), equal_weight_certificate(n)), ratio(n, 2 * n + 1));
}

TEST(BruteForce, HexagonAndSquare) {
  const CapacityResult hex = ehz_brute_force(hexagon(), GeneratorKind::Vertices);
  EXPECT_EQ(hex.capacity, 3);
  EXPECT_EQ(hex.generator_count, 3u);
  EXPECT_EQ(evaluate_certificate(hexagon(), hex.certificate), ratio(1, 3));
  EXPECT_EQ(ehz_brute_force(hexagon(), GeneratorKind::FacetNormals).capacity, 3);
  const CapacityResult sq = ehz_brute_force(testing::square(), GeneratorKind::FacetNormals);
  EXPECT_EQ(sq.capacity, 4);
  EXPECT_EQ(evaluate_certificate(testing::square(), sq.certificate), ratio(1, 4));
}

TEST(BruteForce, SecondSuspensionBoundedAndFull) {
  const Polytope p2 = power_suspend(2);
  const CapacityResult bounded = ehz_brute_force(p2, GeneratorKind::Vertices);
  EXPECT_EQ(bounded.capacity, ratio(5, 2));
  EXPECT_EQ(bounded.support_bound, 5u);
  CapacitySearchOptions full;
  full.support_bound = 8;
  const CapacityResult all = ehz_brute_force(p2, GeneratorKind::Vertices, full);
  EXPECT_EQ(all.capacity, ratio(5, 2));
  EXPECT_EQ(all.configurations, search_configuration_count(8, 8));
  EXPECT_EQ(evaluate_certificate(p2, all.certificate), ratio(2, 5));
  EXPECT_EQ(ehz_brute_force(p2, GeneratorKind::FacetNormals).capacity, ratio(5, 2));
}

TEST(BruteForce, ExactPathAgreesWithPrepass) {
  CapacitySearchOptions exact;
  exact.float_prepass = false;
  const Polytope p2 = power_suspend(2);
  const auto a = ehz_brute_force(p2, GeneratorKind::Vertices);
  const auto b = ehz_brute_force(p2, GeneratorKind::Vertices, exact);
  EXPECT_EQ(a.capacity, b.capacity);
  EXPECT_EQ(a.certificate.terms, b.certificate.terms);
  EXPECT_EQ(a.certificate.coeffs, b.certificate.coeffs);
}

TEST(BruteForce, ThreadCountInvariant) {
  const Polytope p2 = power_suspend(2);
  CapacitySearchOptions many;
  many.threads = 3;
  const auto a = ehz_brute_force(p2, GeneratorKind::Vertices);
  const auto b = ehz_brute_force(p2, GeneratorKind::Vertices, many);
  EXPECT_EQ(a.capacity, b.capacity);
  EXPECT_EQ(a.certificate.terms, b.certificate.terms);
  EXPECT_EQ(a.certificate.coeffs, b.certificate.coeffs);
}

TEST(BruteForce, BudgetIsExplicit) {
  CapacitySearchOptions tight;
  tight.budget = 10;
  EXPECT_THROW(ehz_brute_force(power_suspend(2), GeneratorKind::Vertices, tight), BudgetExceeded);
  EXPECT_EQ(search_configuration_count(3, 3), 3u + 3u * 2u + 1u * 2u * 4u);
}

TEST(BruteForce, AreaLawInThePlane) {
  RationalSource rng(301);
  for (int trial = 0; trial < 40; ++trial) {
    const Polytope p = testing::random_symmetric(rng, 2, 3);
    CapacitySearchOptions full;
    full.support_bound = p.facets().size() / 2;
    EXPECT_EQ(ehz_brute_force(p, GeneratorKind::FacetNormals, full).capacity, volume(p));
  }
}

TEST(BruteForce, QuadraticScaling) {
  for (const Polytope& p : {hexagon(), testing::square()}) {
    const Rational c = ehz_brute_force(p, GeneratorKind::FacetNormals).capacity;
    for (const Rational& lambda : {Rational(2), ratio(1, 2), ratio(3, 5)}) {
      const Polytope scaled = apply_linear(scaled_identity(2, lambda), p);
      EXPECT_EQ(ehz_brute_force(scaled, GeneratorKind::FacetNormals).capacity, lambda * lambda * c);
    }
  }
  const Polytope big = apply_linear(scaled_identity(4, 2), power_suspend(2));
  EXPECT_EQ(ehz_brute_force(big, GeneratorKind::FacetNormals).capacity, 10);
}

TEST(BruteForce, LinearSymplecticInvariance) {
  const Matrix shear = Matrix::from_rows({{1, 1}, {0, 1}});
  const Matrix other = Matrix::from_rows({{2, 1}, {1, 1}});
  for (const Matrix& m : {shear, other}) {
    const Polytope img = apply_linear(m, hexagon());
    EXPECT_TRUE(is_self_polar(img));
    EXPECT_EQ(ehz_brute_force(img, GeneratorKind::Vertices).capacity, 3);
    EXPECT_EQ(ehz_brute_force(img, GeneratorKind::FacetNormals).capacity, 3);
  }
  // Block shear on the first plane, block swap of the two planes.
  const Matrix block = Matrix::from_rows({{1, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, -1, 1}});
  const Matrix swap = Matrix::from_rows({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  RationalSource rng(302);
  for (const Matrix& m : {block, swap}) {
    for (int trial = 0; trial < 100; ++trial) {
      const RationalVector x = rng.vector(4), y = rng.vector(4);
      ASSERT_EQ(omega(m * x, m * y), omega(x, y));
    }
    const Polytope img = apply_linear(m, power_suspend(2));
    EXPECT_EQ(ehz_brute_force(img, GeneratorKind::Vertices).capacity, ratio(5, 2));
  }
  const Polytope sq = apply_linear(shear, testing::square());
  EXPECT_EQ(ehz_brute_force(sq, GeneratorKind::FacetNormals).capacity, 4);
}

TEST(BruteForce, LowerBoundOnSelfPolarBodies) {
  // Every self-polar body in R^{2n} has capacity at least 2 + 1/n.
  EXPECT_GE(ehz_brute_force(hexagon(), GeneratorKind::Vertices).capacity, 3);
  Pm1Options opt;
  const Pm1Enumeration table = enumerate_pm1(4, opt);
  for (const auto& cls : table.classes) {
    const auto r = ehz_brute_force(cls.representative, GeneratorKind::Vertices);
    EXPECT_GE(r.capacity, ratio(5, 2)) << cls.vertex_count << " " << to_string(cls.volume);
    EXPECT_EQ(evaluate_certificate(cls.representative, r.certificate), 1 / r.capacity);
  }
}

TEST(SuspensionCertificate, ChainReproducesBounds) {
  const CapacityResult base = ehz_brute_force(hexagon(), GeneratorKind::Vertices);
  ASSERT_EQ(base.capacity, 3);
  const CapacityCertificate lift2 = make_suspension_certificate(hexagon(), base.certificate, base.capacity);
  EXPECT_EQ(lift2.objective, ratio(2, 5));
  const Polytope p2 = power_suspend(2);
  EXPECT_EQ(evaluate_certificate(p2, lift2), ratio(2, 5));

  const CapacityResult second = ehz_brute_force(p2, GeneratorKind::Vertices);
  ASSERT_EQ(second.capacity, ratio(5, 2));
  const CapacityCertificate lift3 = make_suspension_certificate(p2, second.certificate, second.capacity);
  EXPECT_EQ(lift3.objective, ratio(3, 7));
  EXPECT_EQ(evaluate_certificate(power_suspend(3), lift3), ratio(3, 7));
  EXPECT_EQ(1 / lift3.objective, ratio(7, 3));
}

TEST(SuspensionCertificate, RejectsBadInput) {
  const CapacityResult base = ehz_brute_force(hexagon(), GeneratorKind::Vertices);
  EXPECT_THROW(make_suspension_certificate(hexagon(), base.certificate, 2), PreconditionError);
  EXPECT_THROW(make_suspension_certificate(hexagon(), base.certificate, 4), PreconditionError);
}

TEST(CertificateJson, RoundTrip) {
  const CapacityResult r = ehz_brute_force(power_suspend(2), GeneratorKind::Vertices);
  const CapacityCertificate back = certificate_from_json(certificate_to_json(r.certificate));
  EXPECT_EQ(back.kind, r.certificate.kind);
  EXPECT_EQ(back.terms, r.certificate.terms);
  EXPECT_EQ(back.coeffs, r.certificate.coeffs);
  EXPECT_EQ(back.objective, r.certificate.objective);
  EXPECT_EQ(evaluate_certificate(power_suspend(2), back), ratio(2, 5));
  EXPECT_THROW(certificate_from_json(R"({"kind":"vertices","indices":[],"coeffs":[0.5],"objective":"1"})"),
               ParseError);
  EXPECT_THROW(certificate_from_json("[]"), ParseError);
}

}  // namespace
}  // namespace sympolar
