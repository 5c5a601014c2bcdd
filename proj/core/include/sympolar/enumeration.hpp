#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sympolar/polytope.hpp"

namespace sympolar {

/// Self-polar -1/0/1 polytopes sharing a vertex count and volume.
struct CliqueClass {
  std::size_t vertex_count = 0;
  Rational volume;
  std::size_t count = 0;  ///< maximal cliques producing this class
  Polytope representative;
};

struct Pm1Enumeration {
  std::size_t dim = 0;
  std::vector<CliqueClass> classes;  ///< sorted by (volume, vertex_count)
  std::size_t cliques = 0;           ///< maximal cliques examined
  std::size_t rejected = 0;          ///< K_R strictly inside K_R^omega
  std::size_t degenerate = 0;        ///< K_R not full-dimensional
  bool partial = false;              ///< stopped at the budget
};

/// Antipodal-pair representatives of {-1,0,1}^dim \ {0}, sorted.
std::vector<RationalVector> pm1_pair_representatives(std::size_t dim);

/// Enumerates maximal cliques of the |omega| <= 1 compatibility graph on the
/// pair representatives (Bron-Kerbosch with pivoting), in a deterministic
/// order. The callback receives representative indices and returns false to
/// stop. Returns the number of cliques reported.
std::size_t enumerate_maximal_cliques(const std::vector<RationalVector>& reps,
                                      const std::function<bool(const std::vector<std::size_t>&)>& visit,
                                      std::optional<std::size_t> limit = std::nullopt);

struct Pm1Options {
  /// Maximum number of cliques to examine; required for dim 6.
  std::optional<std::size_t> budget;
  unsigned threads = 1;
};

/// Classifies every K_R = conv(R ∪ -R) over maximal cliques R that is
/// symplectically self-polar. Throws PreconditionError for dim not in
/// {2, 4, 6} or a missing dim-6 budget.
Pm1Enumeration enumerate_pm1(std::size_t dim, const Pm1Options& options = {});

/// [{"vertices", "volume", "count", "representative_file"}]; representatives
/// are written next to the report as class_<i>.json.
std::string write_clique_report(const Pm1Enumeration& result, const std::filesystem::path& out_dir);

}  // namespace sympolar
