#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "sympolar/rational.hpp"

namespace sympolar {

/// Exact point/normal in R^d. Ordering is lexicographic on coordinates.
class RationalVector {
 public:
  RationalVector() = default;
  explicit RationalVector(std::size_t dim) : coords_(dim) {}
  RationalVector(std::initializer_list<Rational> coords) : coords_(coords) {}
  explicit RationalVector(std::vector<Rational> coords) : coords_(std::move(coords)) {}

  std::size_t dim() const noexcept { return coords_.size(); }
  std::span<const Rational> coords() const noexcept { return coords_; }

  Rational& operator[](std::size_t i) { return coords_[i]; }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }

  auto begin() const noexcept { return coords_.begin(); }
  auto end() const noexcept { return coords_.end(); }

  bool is_zero() const;

  RationalVector& operator+=(const RationalVector& rhs);
  RationalVector& operator-=(const RationalVector& rhs);
  RationalVector& operator*=(const Rational& s);

  friend bool operator==(const RationalVector& a, const RationalVector& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator<(const RationalVector& a, const RationalVector& b);

 private:
  std::vector<Rational> coords_;
};

RationalVector operator+(RationalVector a, const RationalVector& b);
RationalVector operator-(RationalVector a, const RationalVector& b);
RationalVector operator-(RationalVector a);
RationalVector operator*(const Rational& s, RationalVector a);

Rational dot(const RationalVector& a, const RationalVector& b);

/// Direct sum a ⊕ b.
RationalVector concat(const RationalVector& a, const RationalVector& b);

/// True when the first nonzero coordinate is positive; picks one
/// representative out of each antipodal pair {v, -v}.
bool is_positive_representative(const RationalVector& v);

/// Rescales to a primitive integer vector with the same direction.
RationalVector primitive_direction(const RationalVector& v);

std::string to_string(const RationalVector& v);
std::ostream& operator<<(std::ostream& os, const RationalVector& v);

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::span<const RationalVector> rows);
  static Matrix from_rows(std::initializer_list<RationalVector> rows) {
    return from_rows(std::span<const RationalVector>(rows.begin(), rows.size()));
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RationalVector operator*(const Matrix& m, const RationalVector& v);
Matrix operator*(const Matrix& a, const Matrix& b);

}  // namespace sympolar
