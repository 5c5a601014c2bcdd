#include "sympolar/enumeration.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include <boost/dynamic_bitset.hpp>
#include <json.hpp>

#include "sympolar/errors.hpp"
#include "sympolar/io.hpp"
#include "sympolar/parallel.hpp"
#include "sympolar/symplectic.hpp"

namespace sympolar {

std::vector<RationalVector> pm1_pair_representatives(std::size_t dim) {
  std::vector<RationalVector> reps;
  std::vector<int> digits(dim, -1);
  for (;;) {
    RationalVector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = digits[i];
    if (is_positive_representative(v)) reps.push_back(std::move(v));
    std::size_t i = dim;
    while (i > 0 && digits[i - 1] == 1) digits[--i] = -1;
    if (i == 0) break;
    ++digits[i - 1];
  }
  std::sort(reps.begin(), reps.end());
  return reps;
}

namespace {

using Bits = boost::dynamic_bitset<>;

class BronKerbosch {
 public:
  BronKerbosch(std::vector<Bits> adjacency, const std::function<bool(const std::vector<std::size_t>&)>& visit,
               std::optional<std::size_t> limit)
      : adj_(std::move(adjacency)), visit_(visit), limit_(limit) {}

  std::size_t run() {
    const std::size_t n = adj_.size();
    Bits p(n), x(n);
    p.set();
    expand(p, x);
    return reported_;
  }

 private:
  // Returns false once enumeration must stop.
  bool expand(Bits p, Bits x) {
    if (p.none()) {
      if (x.none()) {
        if (limit_ && reported_ >= *limit_) return false;
        ++reported_;
        if (!visit_(clique_)) return false;
      }
      return true;
    }
    // Pivot maximizing |P ∩ N(u)| over P ∪ X.
    const Bits px = p | x;
    std::size_t pivot = px.find_first();
    std::size_t best = 0;
    for (auto u = px.find_first(); u != Bits::npos; u = px.find_next(u)) {
      const std::size_t c = (p & adj_[u]).count();
      if (c > best || u == px.find_first()) {
        best = c;
        pivot = u;
      }
    }
    const Bits candidates = p - adj_[pivot];
    for (auto v = candidates.find_first(); v != Bits::npos; v = candidates.find_next(v)) {
      clique_.push_back(v);
      const bool go_on = expand(p & adj_[v], x & adj_[v]);
      clique_.pop_back();
      if (!go_on) return false;
      p.reset(v);
      x.set(v);
    }
    return true;
  }

  std::vector<Bits> adj_;
  const std::function<bool(const std::vector<std::size_t>&)>& visit_;
  std::optional<std::size_t> limit_;
  std::vector<std::size_t> clique_;
  std::size_t reported_ = 0;
};

struct CliqueOutcome {
  enum class Kind { SelfPolar, Rejected, Degenerate } kind = Kind::Degenerate;
  std::size_t vertex_count = 0;
  Rational volume;
  Polytope body;
};

CliqueOutcome classify_clique(const std::vector<RationalVector>& reps, const std::vector<std::size_t>& clique) {
  std::vector<RationalVector> pts;
  for (auto i : clique) {
    pts.push_back(reps[i]);
    pts.push_back(-reps[i]);
  }
  CliqueOutcome out;
  try {
    out.body = convex_hull(pts);
  } catch (const DimensionError&) {
    return out;
  }
  // K_R ⊆ K_R^omega holds by construction; self-polarity reduces to the
  // pairwise test on the vertices of K_R^omega.
  if (!check_pairwise_omega(symplectic_polar(out.body).vertices()).holds) {
    out.kind = CliqueOutcome::Kind::Rejected;
    return out;
  }
  out.kind = CliqueOutcome::Kind::SelfPolar;
  out.vertex_count = out.body.vertices().size();
  out.volume = volume(out.body);
  return out;
}

}  // namespace

std::size_t enumerate_maximal_cliques(const std::vector<RationalVector>& reps,
                                      const std::function<bool(const std::vector<std::size_t>&)>& visit,
                                      std::optional<std::size_t> limit) {
  const std::size_t n = reps.size();
  std::vector<Bits> adj(n, Bits(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (abs(omega(reps[i], reps[j])) <= 1) {
        adj[i].set(j);
        adj[j].set(i);
      }
  BronKerbosch bk(std::move(adj), visit, limit);
  return bk.run();
}

Pm1Enumeration enumerate_pm1(std::size_t dim, const Pm1Options& options) {
  if (dim != 2 && dim != 4 && dim != 6) {
    throw PreconditionError("enumerate_pm1: dim must be 2, 4 or 6, got " + std::to_string(dim));
  }
  if (dim == 6 && !options.budget) throw PreconditionError("enumerate_pm1: a clique budget is required in dimension 6");

  const auto reps = pm1_pair_representatives(dim);
  std::vector<std::vector<std::size_t>> cliques;
  bool stopped = false;
  enumerate_maximal_cliques(
      reps,
      [&](const std::vector<std::size_t>& c) {
        std::vector<std::size_t> sorted(c);
        std::sort(sorted.begin(), sorted.end());
        cliques.push_back(std::move(sorted));
        return true;
      },
      options.budget ? std::optional<std::size_t>(*options.budget + 1) : std::nullopt);
  if (options.budget && cliques.size() > *options.budget) {
    cliques.resize(*options.budget);
    stopped = true;
  }

  std::vector<CliqueOutcome> outcomes(cliques.size());
  parallel_for(cliques.size(), options.threads,
               [&](std::size_t i, unsigned) { outcomes[i] = classify_clique(reps, cliques[i]); });

  Pm1Enumeration result;
  result.dim = dim;
  result.cliques = cliques.size();
  result.partial = stopped;
  std::map<std::pair<Rational, std::size_t>, CliqueClass> classes;
  for (auto& o : outcomes) {
    switch (o.kind) {
      case CliqueOutcome::Kind::Degenerate:
        ++result.degenerate;
        break;
      case CliqueOutcome::Kind::Rejected:
        ++result.rejected;
        break;
      case CliqueOutcome::Kind::SelfPolar: {
        auto [it, inserted] = classes.try_emplace({o.volume, o.vertex_count});
        if (inserted) {
          it->second.vertex_count = o.vertex_count;
          it->second.volume = o.volume;
          it->second.representative = std::move(o.body);
        }
        ++it->second.count;
        break;
      }
    }
  }
  for (auto& [key, cls] : classes) result.classes.push_back(std::move(cls));
  return result;
}

std::string write_clique_report(const Pm1Enumeration& result, const std::filesystem::path& out_dir) {
  using nlohmann::json;
  json report = json::array();
  for (std::size_t i = 0; i < result.classes.size(); ++i) {
    const auto& c = result.classes[i];
    const auto file = out_dir / ("class_" + std::to_string(i) + ".json");
    write_polytope_file(file, c.representative);
    report.push_back({{"vertices", c.vertex_count},
                      {"volume", to_string(c.volume)},
                      {"count", c.count},
                      {"representative_file", file.string()}});
  }
  const std::string text = report.dump(2) + "\n";
  write_file_atomically(out_dir / "classes.json", text);
  return text;
}

}  // namespace sympolar
