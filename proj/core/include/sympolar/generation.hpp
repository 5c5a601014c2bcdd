#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "sympolar/polytope.hpp"

namespace sympolar {

struct IterationTrace {
  std::size_t vertices = 0;        ///< |V(K)| at the start of the iteration
  std::size_t polar_vertices = 0;  ///< |V(K^omega)|
  std::size_t added = 0;           ///< |S| minus the points already in K
};

/// One run of the expansion loop.
struct ExperimentRecord {
  std::uint64_t seed = 0;
  std::size_t dim = 0;
  std::size_t k = 0;
  std::size_t iterations = 0;
  Polytope final;
  Rational volume;
  std::size_t vertex_count = 0;
  bool self_polar = false;
  std::vector<IterationTrace> trace;
  /// Set when the run threw; the remaining fields are then meaningless.
  std::optional<std::string> error;
};

struct GenerationOptions {
  std::size_t max_iter = 64;
};

/// k points drawn uniformly in the open unit ball of R^dim, rounded to
/// dyadic rationals with denominator 2^16, re-drawn until every dim-subset
/// is linearly independent.
std::vector<RationalVector> sample_ball_points(std::size_t dim, std::size_t k, std::uint64_t seed);

/// Starting from the symmetrized hull of the sampled points, repeatedly adds
/// a greedy maximal compatible subset of V(K^omega) until K^omega's vertices
/// are all compatible (K is then self-polar) or max_iter is reached.
/// Throws PreconditionError when k < dim or dim is not in {2, 4, 6}.
ExperimentRecord random_selfpolar(std::size_t dim, std::size_t k, std::uint64_t seed,
                                  const GenerationOptions& options = {});

struct BatchOptions {
  GenerationOptions generation;
  unsigned threads = 1;
  std::optional<std::filesystem::path> csv_path;
  std::optional<std::filesystem::path> svg_path;
};

/// Runs with seeds base_seed .. base_seed + runs - 1. Failed runs carry
/// their error message instead of throwing.
std::vector<ExperimentRecord> batch_generate(std::size_t dim, std::size_t k, std::size_t runs, std::uint64_t base_seed,
                                             const BatchOptions& options = {});

/// seed,k,iterations,volume_exact,volume_float,vertex_count,self_polar
std::string records_to_csv(const std::vector<ExperimentRecord>& records);

/// Volume histogram with bin width 1/20; empty string for fewer than two
/// successful runs.
std::string volume_histogram_svg(const std::vector<ExperimentRecord>& records, const std::string& title);

}  // namespace sympolar
