#include "sympolar/generation.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <sstream>

#include <boost/random/mersenne_twister.hpp>
#include <boost/random/normal_distribution.hpp>
#include <boost/random/uniform_01.hpp>
#include <boost/random/uniform_int_distribution.hpp>

#include "sympolar/errors.hpp"
#include "sympolar/io.hpp"
#include "sympolar/linalg.hpp"
#include "sympolar/parallel.hpp"
#include "sympolar/symplectic.hpp"

namespace sympolar {

namespace {

using Engine = boost::random::mt19937_64;

constexpr long kDyadicDenominator = 1L << 16;

RationalVector draw_ball_point(std::size_t dim, Engine& rng) {
  boost::random::normal_distribution<double> gauss;
  boost::random::uniform_01<double> uniform;
  for (;;) {
    std::vector<double> g(dim);
    double norm2 = 0;
    for (auto& x : g) {
      x = gauss(rng);
      norm2 += x * x;
    }
    if (norm2 == 0) continue;
    const double radius = std::pow(uniform(rng), 1.0 / static_cast<double>(dim));
    const double scale = radius / std::sqrt(norm2);
    RationalVector p(dim);
    Rational len2 = 0;
    for (std::size_t i = 0; i < dim; ++i) {
      p[i] = ratio(std::lround(g[i] * scale * kDyadicDenominator), kDyadicDenominator);
      len2 += p[i] * p[i];
    }
    if (len2 < 1) return p;
  }
}

bool subsets_independent(const std::vector<RationalVector>& pts, std::size_t dim) {
  std::vector<std::size_t> idx(dim);
  std::iota(idx.begin(), idx.end(), 0);
  const std::size_t n = pts.size();
  for (;;) {
    std::vector<RationalVector> rows;
    rows.reserve(dim);
    for (auto i : idx) rows.push_back(pts[i]);
    if (determinant(Matrix::from_rows(rows)) == 0) return false;
    // next combination
    std::size_t i = dim;
    while (i > 0 && idx[i - 1] == n - dim + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < dim; ++j) idx[j] = idx[j - 1] + 1;
  }
}

template <class T>
void seeded_shuffle(std::vector<T>& items, Engine& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    boost::random::uniform_int_distribution<std::size_t> pick(0, i - 1);
    std::swap(items[i - 1], items[pick(rng)]);
  }
}

void require_parameters(std::size_t dim, std::size_t k) {
  if (dim != 2 && dim != 4 && dim != 6) {
    throw PreconditionError("random_selfpolar: dim must be 2, 4 or 6, got " + std::to_string(dim));
  }
  if (k < dim) {
    throw PreconditionError("random_selfpolar: need k >= dim points, got k=" + std::to_string(k) +
                            " for dim=" + std::to_string(dim));
  }
}

}  // namespace

std::vector<RationalVector> sample_ball_points(std::size_t dim, std::size_t k, std::uint64_t seed) {
  Engine rng(seed);
  for (;;) {
    std::vector<RationalVector> pts;
    pts.reserve(k);
    for (std::size_t i = 0; i < k; ++i) pts.push_back(draw_ball_point(dim, rng));
    if (subsets_independent(pts, dim)) return pts;
  }
}

ExperimentRecord random_selfpolar(std::size_t dim, std::size_t k, std::uint64_t seed, const GenerationOptions& options) {
  require_parameters(dim, k);
  ExperimentRecord rec;
  rec.seed = seed;
  rec.dim = dim;
  rec.k = k;

  // The shuffle stream is separate from the sampling stream so the initial
  // body depends on the seed alone.
  Engine shuffle_rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<RationalVector> start = sample_ball_points(dim, k, seed);
  const std::size_t sampled = start.size();
  for (std::size_t i = 0; i < sampled; ++i) start.push_back(-start[i]);
  Polytope body = convex_hull(start);

  for (;;) {
    const Polytope polar = symplectic_polar(body);
    std::vector<RationalVector> pairs;
    for (const auto& v : polar.vertices())
      if (is_positive_representative(v)) pairs.push_back(v);
    seeded_shuffle(pairs, shuffle_rng);

    std::vector<RationalVector> accepted;
    for (const auto& p : pairs) {
      const bool compatible = std::all_of(accepted.begin(), accepted.end(),
                                          [&](const RationalVector& q) { return abs(omega(p, q)) <= 1; });
      if (compatible) accepted.push_back(p);
    }

    if (accepted.size() == pairs.size()) {
      rec.self_polar = true;
      break;
    }
    if (rec.iterations == options.max_iter) break;

    std::vector<RationalVector> subset;
    std::size_t fresh = 0;
    for (const auto& p : accepted) {
      subset.push_back(p);
      subset.push_back(-p);
      if (body.vertex_index(p) < 0) fresh += 2;
    }
    rec.trace.push_back({body.vertices().size(), polar.vertices().size(), fresh});
    body = expand_step(body, subset);
    ++rec.iterations;
  }

  rec.final = std::move(body);
  rec.self_polar = rec.self_polar && is_self_polar(rec.final);
  rec.volume = volume(rec.final);
  rec.vertex_count = rec.final.vertices().size();
  return rec;
}

std::vector<ExperimentRecord> batch_generate(std::size_t dim, std::size_t k, std::size_t runs, std::uint64_t base_seed,
                                             const BatchOptions& options) {
  if (runs == 0) throw PreconditionError("batch_generate: runs must be at least 1");
  require_parameters(dim, k);
  std::vector<ExperimentRecord> records(runs);
  parallel_for(runs, options.threads, [&](std::size_t i, unsigned) {
    const std::uint64_t seed = base_seed + i;
    try {
      records[i] = random_selfpolar(dim, k, seed, options.generation);
    } catch (const std::exception& e) {
      records[i] = ExperimentRecord{};
      records[i].seed = seed;
      records[i].dim = dim;
      records[i].k = k;
      records[i].error = e.what();
    }
  });
  if (options.csv_path) write_file_atomically(*options.csv_path, records_to_csv(records));
  if (options.svg_path) {
    const std::string svg =
        volume_histogram_svg(records, "dim " + std::to_string(dim) + ", k = " + std::to_string(k));
    if (!svg.empty()) write_file_atomically(*options.svg_path, svg);
  }
  return records;
}

std::string records_to_csv(const std::vector<ExperimentRecord>& records) {
  std::ostringstream os;
  os << "seed,k,iterations,volume_exact,volume_float,vertex_count,self_polar\n";
  for (const auto& r : records) {
    os << r.seed << ',' << r.k << ',';
    if (r.error) {
      os << ",,,," << "failed\n";
      continue;
    }
    os << r.iterations << ',' << to_string(r.volume) << ',' << std::setprecision(17) << to_double(r.volume) << ','
       << r.vertex_count << ',' << (r.self_polar ? "true" : "false") << '\n';
  }
  return os.str();
}

std::string volume_histogram_svg(const std::vector<ExperimentRecord>& records, const std::string& title) {
  std::vector<double> vols;
  for (const auto& r : records)
    if (!r.error) vols.push_back(to_double(r.volume));
  if (vols.size() < 2) return {};

  constexpr double kBin = 1.0 / 20.0;
  const double lo = std::floor(*std::min_element(vols.begin(), vols.end()) / kBin) * kBin;
  const double hi = std::max(lo + kBin, std::ceil(*std::max_element(vols.begin(), vols.end()) / kBin) * kBin);
  const auto bins = static_cast<std::size_t>(std::lround((hi - lo) / kBin));
  std::vector<std::size_t> counts(std::max<std::size_t>(bins, 1), 0);
  for (double v : vols) {
    auto b = static_cast<std::size_t>((v - lo) / kBin);
    counts[std::min(b, counts.size() - 1)]++;
  }
  const std::size_t peak = *std::max_element(counts.begin(), counts.end());

  const double width = 640, height = 360, margin = 48;
  const double bar_w = (width - 2 * margin) / static_cast<double>(counts.size());
  std::ostringstream os;
  os << std::fixed << std::setprecision(2);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
  os << "<text x=\"" << width / 2 << "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" << title << "</text>\n";
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double h = (height - 2 * margin) * static_cast<double>(counts[i]) / static_cast<double>(peak);
    os << "<rect x=\"" << margin + bar_w * static_cast<double>(i) << "\" y=\"" << height - margin - h << "\" width=\""
       << bar_w * 0.9 << "\" height=\"" << h << "\" fill=\"steelblue\"/>\n";
  }
  os << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin << "\" y2=\""
     << height - margin << "\" stroke=\"black\"/>\n";
  const std::size_t label_every = std::max<std::size_t>(1, counts.size() / 8);
  for (std::size_t i = 0; i <= counts.size(); i += label_every) {
    os << "<text x=\"" << margin + bar_w * static_cast<double>(i) << "\" y=\"" << height - margin + 16
       << "\" text-anchor=\"middle\" font-size=\"10\">" << lo + kBin * static_cast<double>(i) << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace sympolar
