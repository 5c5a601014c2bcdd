#pragma once

#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "sympolar/polytope.hpp"

namespace sympolar::detail {

using VertexSet = boost::dynamic_bitset<>;

/// For each facet, the set of vertex indices lying on it.
std::vector<VertexSet> facet_incidence(const Polytope& p);

/// Facets of a face: the inclusion-maximal proper nonempty intersections of
/// the face with facets of the polytope.
std::vector<VertexSet> facets_of_face(const VertexSet& face, const std::vector<VertexSet>& incidence);

}  // namespace sympolar::detail
