#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sympolar/polytope.hpp"

namespace sympolar {

/// Which half-list the EHZ maximization runs over: one outer normal per
/// antipodal facet pair, or (for self-polar bodies) one vertex per antipodal
/// vertex pair.
enum class GeneratorKind { FacetNormals, Vertices };

std::string_view to_string(GeneratorKind kind);
GeneratorKind parse_generator_kind(std::string_view text);

/// One representative per antipodal pair (first nonzero coordinate
/// positive), sorted, together with the normalization weights: support
/// values h_K(n_i) for normals, 1 for vertices.
struct CapacityGenerators {
  std::vector<RationalVector> vectors;
  std::vector<Rational> weights;
};

CapacityGenerators capacity_generators(const Polytope& p, GeneratorKind kind);

struct SignedIndex {
  std::size_t index = 0;
  int sign = 1;
  friend bool operator==(const SignedIndex&, const SignedIndex&) = default;
};

/// An ordered, signed generator sequence with nonnegative coefficients.
/// Its objective  sum_{i<j} c_i c_j omega(g_i, g_j)  bounds the capacity:
/// c_EHZ <= 1 / objective.
struct CapacityCertificate {
  GeneratorKind kind = GeneratorKind::Vertices;
  std::vector<SignedIndex> terms;
  std::vector<Rational> coeffs;
  Rational objective;
  /// Signed generator vectors aligned with terms; empty when read from JSON.
  std::vector<RationalVector> generators;
};

/// sum_{i<j} c_i c_j omega(g_i, g_j) in the given order.
Rational ordered_objective(std::span<const RationalVector> generators, std::span<const Rational> coeffs);

/// Resolves the certificate against P, checks the normalization
/// sum c_i w_i = 1, and returns the objective. Throws PreconditionError on
/// any mismatch.
Rational evaluate_certificate(const Polytope& p, const CapacityCertificate& cert);

/// Uniform weights 1/(2n+1) on the induction certificate of P^{⋉n};
/// objective n/(2n+1). Indices refer to power_suspension_vertex_list(n).
CapacityCertificate equal_weight_certificate(int n);

struct CapacitySearchOptions {
  /// Largest support size tried; nullopt means min(m, dim + 1).
  std::optional<std::size_t> support_bound;
  /// Upper limit on (subset, order, signs) configurations.
  std::uint64_t budget = 50'000'000;
  unsigned threads = 1;
  /// Screen candidates in double precision before the exact solve.
  bool float_prepass = true;
};

struct CapacityResult {
  Rational capacity;
  CapacityCertificate certificate;
  std::size_t generator_count = 0;
  std::size_t support_bound = 0;
  std::uint64_t configurations = 0;
  std::uint64_t exact_solves = 0;
  std::uint64_t degenerate_skipped = 0;
};

/// Number of configurations examined for m generators and support bound k.
std::uint64_t search_configuration_count(std::size_t m, std::size_t bound);

/// Exact EHZ capacity of a centrally symmetric polytope by exhaustive
/// maximization of the ordered quadratic form. Throws BudgetExceeded before
/// starting when the search is too large.
CapacityResult ehz_brute_force(const Polytope& p, GeneratorKind kind, const CapacitySearchOptions& options = {});

/// Lifts an optimal vertex certificate of a self-polar K (objective 1/c_K,
/// c_K > 2) to P ⋉ K with alpha = (c_K - 2)/(3c_K - 4); the lifted objective
/// is (c_K - 1)/(3c_K - 4).
CapacityCertificate make_suspension_certificate(const Polytope& k, const CapacityCertificate& cert_k,
                                                const Rational& c_k);

/// {"kind", "indices":[{"index","sign"}], "coeffs":["p/q"], "objective":"p/q"}
std::string certificate_to_json(const CapacityCertificate& cert);
CapacityCertificate certificate_from_json(std::string_view text);

}  // namespace sympolar
