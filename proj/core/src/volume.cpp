#include <algorithm>
#include <set>

#include "face_lattice.hpp"
#include "sympolar/errors.hpp"
#include "sympolar/linalg.hpp"
#include "sympolar/polytope.hpp"

namespace sympolar {

namespace detail {

std::vector<VertexSet> facet_incidence(const Polytope& p) {
  const auto& verts = p.vertices();
  std::vector<VertexSet> incidence;
  incidence.reserve(p.facets().size());
  for (const auto& f : p.facets()) {
    VertexSet s(verts.size());
    for (std::size_t v = 0; v < verts.size(); ++v)
      if (f.slack(verts[v]) == 0) s.set(v);
    incidence.push_back(std::move(s));
  }
  return incidence;
}

std::vector<VertexSet> facets_of_face(const VertexSet& face, const std::vector<VertexSet>& incidence) {
  std::vector<VertexSet> candidates;
  for (const auto& f : incidence) {
    VertexSet meet = face & f;
    if (meet.none() || meet == face) continue;
    candidates.push_back(std::move(meet));
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::vector<VertexSet> maximal;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < candidates.size() && !dominated; ++j)
      dominated = j != i && candidates[i].is_proper_subset_of(candidates[j]);
    if (!dominated) maximal.push_back(candidates[i]);
  }
  return maximal;
}

}  // namespace detail

namespace {

using detail::VertexSet;

struct PullingTriangulation {
  const std::vector<RationalVector>& vertices;
  const std::vector<VertexSet>& incidence;
  std::vector<std::size_t> apexes;
  Rational total = 0;

  void pull(const VertexSet& face, std::size_t face_dim) {
    const std::size_t apex = face.find_first();
    if (face_dim == 0) {
      add_simplex(apex);
      return;
    }
    apexes.push_back(apex);
    for (const auto& sub : detail::facets_of_face(face, incidence)) {
      if (!sub.test(apex)) pull(sub, face_dim - 1);
    }
    apexes.pop_back();
  }

  void add_simplex(std::size_t last) {
    const auto& origin = vertices[apexes.front()];
    const std::size_t d = origin.dim();
    Matrix m(d, d);
    for (std::size_t r = 0; r < d; ++r) {
      const auto& v = vertices[r + 1 < apexes.size() ? apexes[r + 1] : last];
      for (std::size_t c = 0; c < d; ++c) m(r, c) = v[c] - origin[c];
    }
    total += abs(determinant(std::move(m)));
  }
};

}  // namespace

Rational volume(const Polytope& p) {
  if (p.dim() == 0 || p.vertices().size() <= p.dim()) {
    throw DimensionError("volume: polytope is not full-dimensional", 0);
  }
  const auto incidence = detail::facet_incidence(p);
  VertexSet all(p.vertices().size());
  all.set();
  PullingTriangulation tri{p.vertices(), incidence, {}, 0};
  tri.pull(all, p.dim());
  mpz_class factorial;
  mpz_fac_ui(factorial.get_mpz_t(), p.dim());
  return tri.total / Rational(factorial);
}

std::vector<std::size_t> face_counts(const Polytope& p) {
  const std::size_t d = p.dim();
  std::vector<std::size_t> counts(d, 0);
  if (d == 0) return counts;
  const auto incidence = detail::facet_incidence(p);
  std::set<VertexSet> level(incidence.begin(), incidence.end());
  counts[d - 1] = level.size();
  for (std::size_t k = d - 1; k-- > 0;) {
    std::set<VertexSet> below;
    for (const auto& face : level)
      for (auto& sub : detail::facets_of_face(face, incidence)) below.insert(std::move(sub));
    counts[k] = below.size();
    level = std::move(below);
  }
  return counts;
}

}  // namespace sympolar
