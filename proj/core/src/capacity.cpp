#include "sympolar/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <tuple>

#include <json.hpp>

#include "sympolar/errors.hpp"
#include "sympolar/linalg.hpp"
#include "sympolar/parallel.hpp"
#include "sympolar/suspension.hpp"
#include "sympolar/symplectic.hpp"

namespace sympolar {

std::string_view to_string(GeneratorKind kind) {
  return kind == GeneratorKind::Vertices ? "vertices" : "facet-normals";
}

GeneratorKind parse_generator_kind(std::string_view text) {
  if (text == "vertices") return GeneratorKind::Vertices;
  if (text == "facet-normals" || text == "normals") return GeneratorKind::FacetNormals;
  throw ParseError("unknown generator kind \"" + std::string(text) + "\"");
}

namespace {

std::vector<RationalVector> positive_representatives(const std::vector<RationalVector>& all) {
  std::vector<RationalVector> half;
  for (const auto& v : all)
    if (is_positive_representative(v)) half.push_back(v);
  std::sort(half.begin(), half.end());
  return half;
}

}  // namespace

CapacityGenerators capacity_generators(const Polytope& p, GeneratorKind kind) {
  if (p.dim() % 2 != 0 || !p.symmetric() || !p.contains_origin_in_interior()) {
    throw PreconditionError("capacity: polytope must be centrally symmetric, even-dimensional, with 0 interior");
  }
  CapacityGenerators g;
  if (kind == GeneratorKind::Vertices) {
    if (!is_self_polar(p)) throw PreconditionError("capacity: vertex generators require a self-polar polytope");
    g.vectors = positive_representatives(p.vertices());
    g.weights.assign(g.vectors.size(), Rational(1));
  } else {
    std::vector<RationalVector> normals;
    for (const auto& f : p.facets()) normals.push_back(f.normal);
    g.vectors = positive_representatives(normals);
    for (const auto& n : g.vectors) g.weights.push_back(support_value(p, n));
  }
  return g;
}

Rational ordered_objective(std::span<const RationalVector> generators, std::span<const Rational> coeffs) {
  Rational sum = 0;
  for (std::size_t i = 0; i < generators.size(); ++i)
    for (std::size_t j = i + 1; j < generators.size(); ++j) sum += coeffs[i] * coeffs[j] * omega(generators[i], generators[j]);
  return sum;
}

namespace {

struct Resolved {
  std::vector<RationalVector> generators;
  Rational normalization;
};

Resolved resolve(const CapacityGenerators& g, const CapacityCertificate& cert) {
  if (cert.terms.size() != cert.coeffs.size()) throw PreconditionError("certificate: terms and coeffs differ in length");
  Resolved r;
  r.normalization = 0;
  for (std::size_t i = 0; i < cert.terms.size(); ++i) {
    const auto& t = cert.terms[i];
    if (t.index >= g.vectors.size()) {
      throw PreconditionError("certificate: generator index " + std::to_string(t.index) + " out of range");
    }
    if (t.sign != 1 && t.sign != -1) throw PreconditionError("certificate: sign must be +1 or -1");
    if (cert.coeffs[i] < 0) throw PreconditionError("certificate: negative coefficient");
    r.generators.push_back(t.sign > 0 ? g.vectors[t.index] : -g.vectors[t.index]);
    r.normalization += cert.coeffs[i] * g.weights[t.index];
  }
  return r;
}

}  // namespace

Rational evaluate_certificate(const Polytope& p, const CapacityCertificate& cert) {
  const auto g = capacity_generators(p, cert.kind);
  const auto r = resolve(g, cert);
  if (r.normalization != 1) {
    throw PreconditionError("certificate: normalization is " + to_string(r.normalization) + ", expected 1");
  }
  if (!cert.generators.empty() && cert.generators != r.generators) {
    throw PreconditionError("certificate: stored generators do not match the polytope");
  }
  return ordered_objective(r.generators, cert.coeffs);
}

namespace {

CapacityCertificate vertex_certificate(const std::vector<RationalVector>& half, std::vector<RationalVector> signed_gens,
                                       std::vector<Rational> coeffs) {
  CapacityCertificate cert;
  cert.kind = GeneratorKind::Vertices;
  for (const auto& g : signed_gens) {
    const bool positive = is_positive_representative(g);
    const RationalVector rep = positive ? g : -g;
    auto it = std::lower_bound(half.begin(), half.end(), rep);
    if (it == half.end() || !(*it == rep)) {
      throw std::logic_error("certificate: " + to_string(g) + " is not a vertex of the target polytope");
    }
    cert.terms.push_back({static_cast<std::size_t>(it - half.begin()), positive ? 1 : -1});
  }
  cert.objective = ordered_objective(signed_gens, coeffs);
  cert.coeffs = std::move(coeffs);
  cert.generators = std::move(signed_gens);
  return cert;
}

}  // namespace

CapacityCertificate equal_weight_certificate(int n) {
  const auto half = positive_representatives(power_suspension_vertex_list(n));
  auto ind = induction_certificate(n);
  std::vector<Rational> coeffs(ind.vertices.size(), ratio(1, 2 * n + 1));
  return vertex_certificate(half, std::move(ind.vertices), std::move(coeffs));
}

std::uint64_t search_configuration_count(std::size_t m, std::size_t bound) {
  // sum_k C(m,k) (k-1)! 2^{k-1}, saturating.
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  long double total = 0;
  long double binom = 1;
  for (std::size_t k = 1; k <= std::min(m, bound); ++k) {
    binom = binom * static_cast<long double>(m - k + 1) / static_cast<long double>(k);
    long double per = 1;
    for (std::size_t i = 2; i < k; ++i) per *= static_cast<long double>(i);
    per *= std::pow(2.0L, static_cast<long double>(k - 1));
    total += binom * per;
  }
  return total >= static_cast<long double>(cap) ? cap : static_cast<std::uint64_t>(std::llround(total));
}

namespace {

// Ordering key for exact ties: (subset, order, signs) lexicographically.
struct SearchKey {
  std::vector<std::size_t> subset;
  std::vector<std::size_t> order;
  std::vector<int> signs;
  friend bool operator<(const SearchKey& a, const SearchKey& b) {
    return std::tie(a.subset, a.order, a.signs) < std::tie(b.subset, b.order, b.signs);
  }
};

struct Candidate {
  bool found = false;
  Rational value;
  SearchKey key;
  std::vector<Rational> coeffs;

  void offer(Rational v, SearchKey k, std::vector<Rational> c) {
    if (found && (v < value || (v == value && !(k < key)))) return;
    found = true;
    value = std::move(v);
    key = std::move(k);
    coeffs = std::move(c);
  }
};

struct WorkerStats {
  std::uint64_t configurations = 0;
  std::uint64_t exact_solves = 0;
  std::uint64_t degenerate = 0;
};

constexpr double kPivotFloor = 1e-10;
constexpr double kScreenTolerance = 1e-7;

// Stationary point of the quadratic form on {sum w_i b_i = 1} in doubles.
// Returns false when the system looks singular (caller falls back to exact).
bool float_stationary(std::size_t k, const std::vector<double>& a, const std::vector<double>& w,
                      std::vector<double>& beta, double& lambda) {
  const std::size_t n = k + 1;
  double m[10][11];
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t c = 0; c < k; ++c) m[r][c] = a[r * k + c];
    m[r][k] = -w[r];
    m[r][n] = 0;
  }
  for (std::size_t c = 0; c < k; ++c) m[k][c] = w[c];
  m[k][k] = 0;
  m[k][n] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::fabs(m[r][col]) > std::fabs(m[piv][col])) piv = r;
    if (std::fabs(m[piv][col]) < kPivotFloor) return false;
    if (piv != col)
      for (std::size_t c = 0; c <= n; ++c) std::swap(m[piv][c], m[col][c]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = m[r][col] / m[col][col];
      for (std::size_t c = col; c <= n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  double x[10];
  for (std::size_t i = n; i-- > 0;) {
    double s = m[i][n];
    for (std::size_t c = i + 1; c < n; ++c) s -= m[i][c] * x[c];
    x[i] = s / m[i][i];
  }
  beta.assign(x, x + k);
  lambda = x[k];
  return true;
}

class Searcher {
 public:
  Searcher(const CapacityGenerators& g, bool float_prepass) : g_(g), prepass_(float_prepass) {
    const std::size_t m = g.vectors.size();
    omega_exact_.resize(m * m);
    omega_float_.resize(m * m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        omega_exact_[i * m + j] = omega(g.vectors[i], g.vectors[j]);
        omega_float_[i * m + j] = to_double(omega_exact_[i * m + j]);
      }
    for (const auto& w : g.weights) weights_float_.push_back(to_double(w));
  }

  // All orders starting with subset[0] and all sign patterns with a leading
  // +1. Rotating the first generator to the back while negating it leaves
  // the objective unchanged, and so does negating every sign; together these
  // generate a group of order 2k acting freely on (order, signs).
  void search_subset(const std::vector<std::size_t>& subset, Candidate& best, WorkerStats& stats) const {
    const std::size_t k = subset.size();
    std::vector<std::size_t> order(subset);
    std::vector<int> signs(k, 1);
    std::vector<double> a(k * k), w(k), beta;
    do {
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
        for (std::size_t i = 1; i < k; ++i) signs[i] = (mask >> (i - 1)) & 1 ? -1 : 1;
        ++stats.configurations;
        evaluate(order, signs, best, stats, a, w, beta);
      }
    } while (std::next_permutation(order.begin() + 1, order.end()));
  }

 private:
  void evaluate(const std::vector<std::size_t>& order, const std::vector<int>& signs, Candidate& best,
                WorkerStats& stats, std::vector<double>& a, std::vector<double>& w, std::vector<double>& beta) const {
    const std::size_t k = order.size();
    const std::size_t m = g_.vectors.size();
    if (prepass_) {
      for (std::size_t i = 0; i < k; ++i) {
        a[i * k + i] = 0;
        w[i] = weights_float_[order[i]];
        for (std::size_t j = i + 1; j < k; ++j) {
          const double v = signs[i] * signs[j] * omega_float_[order[i] * m + order[j]];
          a[i * k + j] = v;
          a[j * k + i] = v;
        }
      }
      double lambda = 0;
      if (float_stationary(k, a, w, beta, lambda)) {
        for (double b : beta)
          if (b < -kScreenTolerance) return;
        if (best.found && lambda / 2 < to_double(best.value) - kScreenTolerance) return;
      }
    }

    ++stats.exact_solves;
    Matrix sys(k + 1, k + 1);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        Rational v = omega_exact_[order[i] * m + order[j]];
        if (signs[i] * signs[j] < 0) v = -v;
        sys(i, j) = v;
        sys(j, i) = v;
      }
      sys(i, k) = -g_.weights[order[i]];
      sys(k, i) = g_.weights[order[i]];
    }
    RationalVector rhs(k + 1);
    rhs[k] = 1;
    auto sol = solve(std::move(sys), std::move(rhs));
    if (!sol) {
      ++stats.degenerate;
      return;
    }
    std::vector<Rational> coeffs(k);
    for (std::size_t i = 0; i < k; ++i) {
      if ((*sol)[i] <= 0) return;
      coeffs[i] = (*sol)[i];
    }
    Rational value = (*sol)[k] / 2;
    if (best.found && value < best.value) return;
    std::vector<std::size_t> subset(order);
    std::sort(subset.begin(), subset.end());
    best.offer(std::move(value), SearchKey{std::move(subset), order, signs}, std::move(coeffs));
  }

  const CapacityGenerators& g_;
  bool prepass_;
  std::vector<Rational> omega_exact_;
  std::vector<double> omega_float_;
  std::vector<double> weights_float_;
};

void enumerate_subsets(std::size_t m, std::size_t bound, std::vector<std::size_t>& current, std::size_t start,
                       std::vector<std::vector<std::size_t>>& out) {
  if (!current.empty()) out.push_back(current);
  if (current.size() == bound) return;
  for (std::size_t i = start; i < m; ++i) {
    current.push_back(i);
    enumerate_subsets(m, bound, current, i + 1, out);
    current.pop_back();
  }
}

}  // namespace

CapacityResult ehz_brute_force(const Polytope& p, GeneratorKind kind, const CapacitySearchOptions& options) {
  const auto gens = capacity_generators(p, kind);
  const std::size_t m = gens.vectors.size();
  const std::size_t bound = std::min(m, options.support_bound.value_or(p.dim() + 1));
  if (bound == 0) throw PreconditionError("ehz_brute_force: support bound must be positive");
  if (bound > 9) throw BudgetExceeded("ehz_brute_force: support bound above 9 is not supported");

  const std::uint64_t planned = search_configuration_count(m, bound);
  if (planned > options.budget) {
    throw BudgetExceeded("ehz_brute_force: " + std::to_string(planned) + " configurations for m=" + std::to_string(m) +
                         ", support bound " + std::to_string(bound) + " exceeds budget " +
                         std::to_string(options.budget));
  }

  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::size_t> current;
  enumerate_subsets(m, bound, current, 0, subsets);

  const unsigned threads = std::max(1u, options.threads);
  std::vector<Candidate> best(threads);
  std::vector<WorkerStats> stats(threads);
  const Searcher searcher(gens, options.float_prepass);
  parallel_for(subsets.size(), threads,
               [&](std::size_t i, unsigned w) { searcher.search_subset(subsets[i], best[w], stats[w]); });

  Candidate winner;
  CapacityResult result;
  for (unsigned w = 0; w < threads; ++w) {
    if (best[w].found) winner.offer(best[w].value, best[w].key, best[w].coeffs);
    result.configurations += stats[w].configurations;
    result.exact_solves += stats[w].exact_solves;
    result.degenerate_skipped += stats[w].degenerate;
  }
  if (!winner.found || winner.value <= 0) {
    throw std::logic_error("ehz_brute_force: no positive stationary value found");
  }

  CapacityCertificate cert;
  cert.kind = kind;
  for (std::size_t i = 0; i < winner.key.order.size(); ++i) {
    const std::size_t idx = winner.key.order[i];
    const int sign = winner.key.signs[i];
    cert.terms.push_back({idx, sign});
    cert.generators.push_back(sign > 0 ? gens.vectors[idx] : -gens.vectors[idx]);
  }
  cert.coeffs = winner.coeffs;
  cert.objective = ordered_objective(cert.generators, cert.coeffs);
  if (cert.objective != winner.value) throw std::logic_error("ehz_brute_force: certificate objective mismatch");

  result.capacity = 1 / winner.value;
  result.certificate = std::move(cert);
  result.generator_count = m;
  result.support_bound = bound;
  return result;
}

CapacityCertificate make_suspension_certificate(const Polytope& k, const CapacityCertificate& cert_k,
                                                const Rational& c_k) {
  if (cert_k.kind != GeneratorKind::Vertices) {
    throw PreconditionError("make_suspension_certificate: needs a vertex-mode certificate");
  }
  if (c_k <= 2) throw PreconditionError("make_suspension_certificate: c_K must exceed 2, got " + to_string(c_k));
  if (cert_k.objective * c_k != 1) {
    throw PreconditionError("make_suspension_certificate: certificate objective is not 1/c_K");
  }
  const auto base = capacity_generators(k, GeneratorKind::Vertices);
  const auto resolved = resolve(base, cert_k);
  if (resolved.normalization != 1) throw PreconditionError("make_suspension_certificate: coefficients do not sum to 1");

  const Rational alpha = (c_k - 2) / (3 * c_k - 4);
  const RationalVector zero(k.dim());
  std::vector<RationalVector> gens;
  std::vector<Rational> coeffs;
  for (std::size_t i = 0; i < resolved.generators.size(); ++i) {
    gens.push_back(concat(hexagon_apex(), resolved.generators[i]));
    coeffs.push_back((1 - 2 * alpha) * cert_k.coeffs[i]);
  }
  gens.push_back(concat(RationalVector{0, 1}, zero));
  gens.push_back(concat(RationalVector{-1, 0}, zero));
  coeffs.push_back(alpha);
  coeffs.push_back(alpha);

  const auto half = positive_representatives(suspension_vertex_list(k.vertices()));
  auto cert = vertex_certificate(half, std::move(gens), std::move(coeffs));
  if (cert.objective != (c_k - 1) / (3 * c_k - 4)) {
    throw std::logic_error("make_suspension_certificate: lifted objective differs from (c-1)/(3c-4)");
  }
  return cert;
}

std::string certificate_to_json(const CapacityCertificate& cert) {
  using nlohmann::json;
  json indices = json::array();
  for (const auto& t : cert.terms) indices.push_back({{"index", t.index}, {"sign", t.sign}});
  json coeffs = json::array();
  for (const auto& c : cert.coeffs) coeffs.push_back(to_string(c));
  json doc = {{"kind", std::string(to_string(cert.kind))},
              {"indices", std::move(indices)},
              {"coeffs", std::move(coeffs)},
              {"objective", to_string(cert.objective)}};
  return doc.dump(2) + "\n";
}

CapacityCertificate certificate_from_json(std::string_view text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("certificate JSON: ") + e.what());
  }
  try {
    CapacityCertificate cert;
    cert.kind = parse_generator_kind(doc.at("kind").get<std::string>());
    for (const auto& t : doc.at("indices")) {
      cert.terms.push_back({t.at("index").get<std::size_t>(), t.at("sign").get<int>()});
    }
    for (const auto& c : doc.at("coeffs")) {
      if (!c.is_string()) throw ParseError("certificate JSON: coefficients must be \"p/q\" strings");
      cert.coeffs.push_back(parse_rational(c.get<std::string>()));
    }
    if (!doc.at("objective").is_string()) throw ParseError("certificate JSON: objective must be a \"p/q\" string");
    cert.objective = parse_rational(doc.at("objective").get<std::string>());
    return cert;
  } catch (const json::exception& e) {
    throw ParseError(std::string("certificate JSON: ") + e.what());
  }
}

}  // namespace sympolar
