#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sympolar {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input points do not span the ambient space.
class DimensionError : public Error {
 public:
  DimensionError(const std::string& what, std::size_t affine_dim)
      : Error(what), affine_dim_(affine_dim) {}
  std::size_t affine_dim() const noexcept { return affine_dim_; }

 private:
  std::size_t affine_dim_;
};

/// Polarity requested for a body without the origin in its interior.
class PolarityDomainError : public Error {
 public:
  using Error::Error;
};

/// A caller-side precondition failed (bad parameters, non-symmetric input,
/// incompatible vertex subsets, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive search would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed polytope/certificate text.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace sympolar
