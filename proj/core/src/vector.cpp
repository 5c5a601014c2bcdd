#include "sympolar/vector.hpp"

#include <algorithm>
#include <cassert>
#include <ostream>
#include <sstream>

namespace sympolar {

bool RationalVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Rational& c) { return c == 0; });
}

RationalVector& RationalVector::operator+=(const RationalVector& rhs) {
  assert(dim() == rhs.dim());
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

RationalVector& RationalVector::operator-=(const RationalVector& rhs) {
  assert(dim() == rhs.dim());
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

RationalVector& RationalVector::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

bool operator<(const RationalVector& a, const RationalVector& b) {
  return std::lexicographical_compare(a.coords_.begin(), a.coords_.end(), b.coords_.begin(), b.coords_.end());
}

RationalVector operator+(RationalVector a, const RationalVector& b) { return a += b; }
RationalVector operator-(RationalVector a, const RationalVector& b) { return a -= b; }
RationalVector operator-(RationalVector a) { return a *= Rational(-1); }
RationalVector operator*(const Rational& s, RationalVector a) { return a *= s; }

Rational dot(const RationalVector& a, const RationalVector& b) {
  assert(a.dim() == b.dim());
  Rational sum = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) sum += a[i] * b[i];
  return sum;
}

RationalVector concat(const RationalVector& a, const RationalVector& b) {
  std::vector<Rational> c(a.begin(), a.end());
  c.insert(c.end(), b.begin(), b.end());
  return RationalVector(std::move(c));
}

bool is_positive_representative(const RationalVector& v) {
  for (const auto& c : v) {
    if (c != 0) return c > 0;
  }
  return false;
}

RationalVector primitive_direction(const RationalVector& v) {
  mpz_class lcm = 1;
  for (const auto& c : v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  mpz_class g = 0;
  std::vector<mpz_class> ints;
  ints.reserve(v.dim());
  for (const auto& c : v) {
    mpz_class x = c.get_num() * (lcm / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    ints.push_back(std::move(x));
  }
  if (g == 0) return v;
  std::vector<Rational> out;
  out.reserve(v.dim());
  for (auto& x : ints) out.emplace_back(mpz_class(x / g));
  return RationalVector(std::move(out));
}

std::string to_string(const RationalVector& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RationalVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? "," : "") << v[i].get_str();
  return os << ')';
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(std::span<const RationalVector> rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().dim();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    assert(rows[r].dim() == cols);
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RationalVector operator*(const Matrix& m, const RationalVector& v) {
  assert(m.cols() == v.dim());
  RationalVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Rational sum = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m(r, c) != 0) sum += m(r, c) * v[c];
    }
    out[r] = sum;
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  assert(a.cols() == b.rows());
  Matrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(r, k) == 0) continue;
      for (std::size_t c = 0; c < b.cols(); ++c) out(r, c) += a(r, k) * b(k, c);
    }
  return out;
}

}  // namespace sympolar
