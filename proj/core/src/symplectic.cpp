#include "sympolar/symplectic.hpp"

#include <algorithm>
#include <string>

#include "sympolar/errors.hpp"
#include "sympolar/linalg.hpp"

namespace sympolar {

Rational omega(const RationalVector& x, const RationalVector& y) {
  if (x.dim() != y.dim() || x.dim() % 2 != 0) {
    throw PreconditionError("omega: dimensions " + std::to_string(x.dim()) + " and " + std::to_string(y.dim()) +
                            " are not equal and even");
  }
  Rational s = 0;
  for (std::size_t i = 0; i < x.dim(); i += 2) s += x[i] * y[i + 1] - x[i + 1] * y[i];
  return s;
}

Matrix symplectic_gram(std::size_t dim) {
  Matrix l(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    RationalVector ei(dim);
    ei[i] = 1;
    for (std::size_t j = 0; j < dim; ++j) {
      RationalVector ej(dim);
      ej[j] = 1;
      l(i, j) = omega(ei, ej);
    }
  }
  return l;
}

Matrix symplectic_polar_map(std::size_t dim) {
  if (dim == 0 || dim % 2 != 0) throw PreconditionError("symplectic space needs a positive even dimension");
  return *inverse(symplectic_gram(dim));
}

namespace {

void require_symmetric_body(const Polytope& p, const char* who) {
  if (p.dim() % 2 != 0) throw PreconditionError(std::string(who) + ": odd dimension " + std::to_string(p.dim()));
  if (!p.symmetric()) throw PreconditionError(std::string(who) + ": polytope is not centrally symmetric");
  if (!p.contains_origin_in_interior()) {
    throw PolarityDomainError(std::string(who) + ": the origin is not an interior point");
  }
}

}  // namespace

Polytope symplectic_polar(const Polytope& p) {
  require_symmetric_body(p, "symplectic_polar");
  return apply_linear(symplectic_polar_map(p.dim()), polar_dual(p));
}

SubsetCheck check_pairwise_omega(std::span<const RationalVector> points) {
  SubsetCheck result;
  // Reverse scan with strict improvement: ties go to the lexicographically
  // largest pair.
  for (std::size_t i = points.size(); i-- > 0;) {
    for (std::size_t j = points.size(); j-- > 0;) {
      Rational value = omega(points[i], points[j]);
      if (value <= 1) continue;
      if (!result.witness || value > result.witness->value) {
        result.witness = OmegaWitness{points[i], points[j], std::move(value)};
      }
    }
  }
  result.holds = !result.witness.has_value();
  return result;
}

SubsetCheck check_subset_sympolar(const Polytope& p) {
  if (!p.symmetric()) throw PreconditionError("check_subset_sympolar: polytope is not centrally symmetric");
  return check_pairwise_omega(p.vertices());
}

bool is_self_polar(const Polytope& p) { return symplectic_polar(p) == p; }

Rational c_j(const Polytope& p) {
  const Polytope polar = symplectic_polar(p);
  const auto& v = polar.vertices();
  Rational best = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      Rational value = abs(omega(v[i], v[j]));
      if (value > best) best = std::move(value);
    }
  return 1 / best;
}

Polytope expand_step(const Polytope& k, std::span<const RationalVector> subset) {
  const auto base = check_subset_sympolar(k);
  if (!base.holds) {
    throw PreconditionError("expand_step: K is not contained in K^omega; omega" + to_string(base.witness->v) +
                            to_string(base.witness->w) + " = " + to_string(base.witness->value));
  }
  if (subset.empty()) return k;

  const Polytope polar = symplectic_polar(k);
  std::vector<RationalVector> sorted(subset.begin(), subset.end());
  std::sort(sorted.begin(), sorted.end());
  for (const auto& s : sorted) {
    if (polar.vertex_index(s) < 0) {
      throw PreconditionError("expand_step: " + to_string(s) + " is not a vertex of K^omega");
    }
    if (!std::binary_search(sorted.begin(), sorted.end(), -s)) {
      throw PreconditionError("expand_step: subset is not centrally symmetric, missing -" + to_string(s));
    }
  }
  const auto pairwise = check_pairwise_omega(sorted);
  if (!pairwise.holds) {
    throw PreconditionError("expand_step: subset violates omega <= 1 at omega" + to_string(pairwise.witness->v) +
                            to_string(pairwise.witness->w) + " = " + to_string(pairwise.witness->value));
  }

  std::vector<RationalVector> points = k.vertices();
  points.insert(points.end(), sorted.begin(), sorted.end());
  Polytope m = convex_hull(points);
  if (!check_subset_sympolar(m).holds) {
    throw std::logic_error("expand_step: conv(K ∪ S) is not contained in its symplectic polar");
  }
  return m;
}

}  // namespace sympolar
