#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include <gtest/gtest.h>

#include "sympolar/enumeration.hpp"
#include "sympolar/errors.hpp"
#include "sympolar/generation.hpp"
#include "sympolar/io.hpp"
#include "sympolar/sequences.hpp"
#include "sympolar/suspension.hpp"
#include "sympolar/symplectic.hpp"

namespace sympolar {
namespace {

namespace fs = std::filesystem;

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("sympolar_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

TEST(Sampling, PointsInsideBallAndIndependent) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto pts = sample_ball_points(4, 6, seed);
    ASSERT_EQ(pts.size(), 6u);
    for (const auto& p : pts) {
      EXPECT_LT(dot(p, p), 1);
      for (std::size_t i = 0; i < p.dim(); ++i) EXPECT_EQ(65536 % p[i].get_den(), 0);
    }
    EXPECT_EQ(sample_ball_points(4, 6, seed), pts);
  }
}

TEST(Generation, PlaneRunsReachHexagonVolume) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const ExperimentRecord r = random_selfpolar(2, 3, seed);
    EXPECT_TRUE(r.self_polar) << seed;
    EXPECT_TRUE(is_self_polar(r.final)) << seed;
    EXPECT_GE(r.volume, 3) << seed;
  }
}

TEST(Generation, FourDimensionalRunIsSelfPolar) {
  const ExperimentRecord r = random_selfpolar(4, 4, 7);
  EXPECT_TRUE(r.self_polar);
  EXPECT_TRUE(is_self_polar(r.final));
  EXPECT_EQ(r.volume, volume(r.final));
  EXPECT_EQ(r.vertex_count, r.final.vertices().size());
  EXPECT_GT(r.volume, ratio(7, 2));
  EXPECT_EQ(r.trace.size(), r.iterations);
}

TEST(Generation, Reproducible) {
  const ExperimentRecord a = random_selfpolar(4, 5, 42);
  const ExperimentRecord b = random_selfpolar(4, 5, 42);
  EXPECT_EQ(a.final, b.final);
  EXPECT_EQ(a.volume, b.volume);
  EXPECT_EQ(a.iterations, b.iterations);
}

TEST(Generation, ParameterErrors) {
  EXPECT_THROW(random_selfpolar(4, 3, 1), PreconditionError);
  EXPECT_THROW(random_selfpolar(3, 5, 1), PreconditionError);
  EXPECT_THROW(random_selfpolar(8, 9, 1), PreconditionError);
  EXPECT_THROW(batch_generate(4, 4, 0, 1), PreconditionError);
}

TEST(Generation, MaxIterIsRecordedNotThrown) {
  GenerationOptions opt;
  opt.max_iter = 0;
  const ExperimentRecord r = random_selfpolar(4, 4, 3, opt);
  EXPECT_EQ(r.iterations, 0u);
  EXPECT_FALSE(r.self_polar);
  EXPECT_FALSE(r.error.has_value());
}

TEST(Batch, CsvAndHistogram) {
  const fs::path dir = scratch_dir("batch");
  BatchOptions opt;
  opt.csv_path = dir / "runs.csv";
  opt.svg_path = dir / "runs.svg";
  opt.threads = 2;
  const auto records = batch_generate(2, 4, 5, 100, opt);
  ASSERT_EQ(records.size(), 5u);
  for (std::size_t i = 0; i < records.size(); ++i) EXPECT_EQ(records[i].seed, 100 + i);

  std::istringstream csv(read_text_file(dir / "runs.csv"));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "seed,k,iterations,volume_exact,volume_float,vertex_count,self_polar");
  std::size_t rows = 0;
  while (std::getline(csv, line)) ++rows;
  EXPECT_EQ(rows, 5u);
  EXPECT_NE(read_text_file(dir / "runs.svg").find("<svg"), std::string::npos);

  // Same records with one thread.
  const auto serial = batch_generate(2, 4, 5, 100);
  for (std::size_t i = 0; i < records.size(); ++i) EXPECT_EQ(serial[i].final, records[i].final);
  fs::remove_all(dir);
}

TEST(Batch, SingleRunHasNoHistogram) {
  const fs::path dir = scratch_dir("single");
  BatchOptions opt;
  opt.csv_path = dir / "one.csv";
  opt.svg_path = dir / "one.svg";
  batch_generate(2, 3, 1, 5, opt);
  EXPECT_TRUE(fs::exists(dir / "one.csv"));
  EXPECT_FALSE(fs::exists(dir / "one.svg"));
  fs::remove_all(dir);
}

TEST(Batch, FailedRunsAreMarked) {
  ExperimentRecord failed;
  failed.seed = 9;
  failed.k = 4;
  failed.error = "boom";
  EXPECT_EQ(records_to_csv({failed}),
            "seed,k,iterations,volume_exact,volume_float,vertex_count,self_polar\n9,4,,,,,failed\n");
}

TEST(Enumeration, PairRepresentatives) {
  EXPECT_EQ(pm1_pair_representatives(2).size(), 4u);
  EXPECT_EQ(pm1_pair_representatives(4).size(), 40u);
  EXPECT_EQ(pm1_pair_representatives(6).size(), 364u);
}

TEST(Enumeration, FourDimensionalClasses) {
  const Pm1Enumeration result = enumerate_pm1(4);
  EXPECT_FALSE(result.partial);
  EXPECT_EQ(result.rejected, 0u);
  EXPECT_EQ(result.degenerate, 0u);
  std::vector<std::pair<std::size_t, Rational>> classes;
  for (const auto& c : result.classes) {
    classes.emplace_back(c.vertex_count, c.volume);
    EXPECT_TRUE(is_self_polar(c.representative));
    EXPECT_EQ(c.representative.vertices().size(), c.vertex_count);
    EXPECT_EQ(volume(c.representative), c.volume);
  }
  const std::vector<std::pair<std::size_t, Rational>> expected{
      {16, ratio(7, 2)}, {20, ratio(11, 3)}, {24, ratio(23, 6)}, {24, 4}};
  EXPECT_EQ(classes, expected);
}

TEST(Enumeration, ThreadCountInvariant) {
  Pm1Options opt;
  opt.threads = 3;
  const auto a = enumerate_pm1(4, opt);
  const auto b = enumerate_pm1(4);
  ASSERT_EQ(a.classes.size(), b.classes.size());
  for (std::size_t i = 0; i < a.classes.size(); ++i) {
    EXPECT_EQ(a.classes[i].count, b.classes[i].count);
    EXPECT_EQ(a.classes[i].representative, b.classes[i].representative);
  }
}

TEST(Enumeration, PlaneCompletenessAgainstAllSymmetricSubsets) {
  // Every self-polar polygon with vertices in {-1,0,1}^2 must be some K_R.
  const auto reps = pm1_pair_representatives(2);
  std::set<std::vector<RationalVector>> all_cliques;
  std::size_t self_polar_cliques = 0;
  enumerate_maximal_cliques(reps, [&](const std::vector<std::size_t>& clique) {
    std::vector<RationalVector> pts;
    for (auto i : clique) {
      pts.push_back(reps[i]);
      pts.push_back(-reps[i]);
    }
    try {
      const Polytope k = convex_hull(pts);
      if (is_self_polar(k)) {
        all_cliques.insert(k.vertices());
        ++self_polar_cliques;
      }
    } catch (const DimensionError&) {
    }
    return true;
  });
  std::size_t self_polar = 0;
  for (unsigned mask = 1; mask < (1u << reps.size()); ++mask) {
    std::vector<RationalVector> pts;
    for (std::size_t i = 0; i < reps.size(); ++i)
      if (mask >> i & 1) {
        pts.push_back(reps[i]);
        pts.push_back(-reps[i]);
      }
    Polytope k;
    try {
      k = convex_hull(pts);
    } catch (const DimensionError&) {
      continue;
    }
    if (!is_self_polar(k)) continue;
    ++self_polar;
    EXPECT_TRUE(all_cliques.count(k.vertices())) << "missing " << polytope_to_json(k);
  }
  EXPECT_GT(self_polar, 0u);
  std::size_t counted = 0;
  for (const auto& c : enumerate_pm1(2).classes) counted += c.count;
  EXPECT_EQ(counted, self_polar_cliques);
}

TEST(Enumeration, SixDimensionalNeedsBudgetAndMarksPartial) {
  EXPECT_THROW(enumerate_pm1(6), PreconditionError);
  EXPECT_THROW(enumerate_pm1(5), PreconditionError);
  Pm1Options opt;
  opt.budget = 30;
  const auto r = enumerate_pm1(6, opt);
  EXPECT_TRUE(r.partial);
  EXPECT_EQ(r.cliques, 30u);
}

TEST(Enumeration, ReportJson) {
  const fs::path dir = scratch_dir("report");
  const auto result = enumerate_pm1(4);
  const std::string text = write_clique_report(result, dir);
  EXPECT_NE(text.find("\"volume\": \"7/2\""), std::string::npos);
  EXPECT_NE(text.find("\"representative_file\""), std::string::npos);
  EXPECT_EQ(read_polytope_file(dir / "class_0.json"), result.classes[0].representative);
  fs::remove_all(dir);
}

TEST(Sequences, CompareValues) {
  EXPECT_EQ(sequence_compare(1), (SequenceValue{ratio(1, 3), 1}));
  EXPECT_EQ(sequence_compare(2), (SequenceValue{ratio(8, 7), 0}));
  for (int n = 1; n <= 100; ++n) {
    const SequenceValue a = sequence_compare(n), b = sequence_compare(n + 2);
    ASSERT_EQ(a.pi_power, b.pi_power);
    EXPECT_EQ(b.coefficient / a.coefficient, compare_step_ratio(n)) << n;
  }
}

TEST(Sequences, ViterboValues) {
  EXPECT_EQ(sequence_viterbo_ratio(1), 1);
  EXPECT_EQ(sequence_viterbo_ratio(2), ratio(28, 25));
  EXPECT_EQ(sequence_viterbo_ratio(3), ratio(297, 245));
  for (int n = 1; n <= 50; ++n) {
    EXPECT_EQ(sequence_viterbo_ratio(n), sequence_viterbo_product(n)) << n;
    Rational base = ratio(2 * n + 1, n), pow = 1;
    for (int i = 0; i < n; ++i) pow *= base;
    mpz_class fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
    EXPECT_EQ(sequence_viterbo_ratio(n) * pow / Rational(fact), volume_closed_form(n)) << n;
  }
}

TEST(Sequences, Monotonicity) {
  const auto v = monotonicity_check(SequenceKind::Viterbo, 1000);
  EXPECT_TRUE(v.holds);
  const auto c = monotonicity_check(SequenceKind::Compare, 1000);
  EXPECT_TRUE(c.holds);
  EXPECT_THROW(monotonicity_check(SequenceKind::Compare, 1), PreconditionError);
}

TEST(Sequences, AsymptoticConstants) {
  for (SequenceKind kind : {SequenceKind::Compare, SequenceKind::Viterbo}) {
    const double n = 1e6;
    const double normalized = std::exp(sequence_log_value(kind, n) - 0.25 * std::log(n));
    EXPECT_NEAR(normalized / sequence_asymptotic_constant(kind), 1.0, 0.01);
  }
  // Float path agrees with the exact values at small n.
  for (int n = 1; n <= 30; ++n) {
    EXPECT_NEAR(std::exp(sequence_log_value(SequenceKind::Compare, n)), sequence_compare(n).to_double(), 1e-9);
    EXPECT_NEAR(std::exp(sequence_log_value(SequenceKind::Viterbo, n)), to_double(sequence_viterbo_ratio(n)),
                1e-9);
  }
}

}  // namespace
}  // namespace sympolar
