#pragma once

// Exact rational scalars, vectors and small dense matrices.
//
// Everything in the library is computed over Q with GMP-backed rationals.
// Vectors are small (ambient dimension <= 9) so a std::vector backing store
// is used throughout.

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace liefix {

using Rational = mpq_class;
using Integer = mpz_class;

/// Canonical "p/q" rendering; integers render without a denominator.
std::string to_string(const Rational& q);

/// Parses "p", "p/q" or "-p/q". Throws std::invalid_argument on bad input.
Rational parse_rational(std::string_view text);

/// num/den in canonical form. mpq_class(num, den) does not reduce, and GMP
/// arithmetic on unreduced operands is undefined.
Rational make_rational(long num, long den);

bool is_integer(const Rational& q);
Integer floor(const Rational& q);
Integer ceil(const Rational& q);

class RatVector {
public:
  RatVector() = default;
  explicit RatVector(std::size_t n) : c_(n) {}
  RatVector(std::initializer_list<Rational> init) : c_(init) {}
  explicit RatVector(std::vector<Rational> c) : c_(std::move(c)) {}

  /// Builds a vector from integer entries scaled by 1/den.
  static RatVector from_ints(std::initializer_list<long> nums, long den = 1);
  static RatVector unit(std::size_t n, std::size_t i);

  std::size_t size() const { return c_.size(); }
  bool empty() const { return c_.empty(); }
  Rational& operator[](std::size_t i) { return c_[i]; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }
  auto begin() { return c_.begin(); }
  auto end() { return c_.end(); }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;

  RatVector& operator+=(const RatVector& o);
  RatVector& operator-=(const RatVector& o);
  RatVector& operator*=(const Rational& s);

  friend RatVector operator+(RatVector a, const RatVector& b) { return a += b; }
  friend RatVector operator-(RatVector a, const RatVector& b) { return a -= b; }
  friend RatVector operator*(const Rational& s, RatVector a) { return a *= s; }
  friend RatVector operator*(RatVector a, const Rational& s) { return a *= s; }
  friend RatVector operator-(RatVector a);

  friend bool operator==(const RatVector& a, const RatVector& b) { return a.c_ == b.c_; }
  friend bool operator<(const RatVector& a, const RatVector& b) { return a.c_ < b.c_; }

private:
  std::vector<Rational> c_;
};

Rational dot(const RatVector& a, const RatVector& b);
Rational norm_sq(const RatVector& v);
std::ostream& operator<<(std::ostream& os, const RatVector& v);
std::string to_string(const RatVector& v);

struct RatVectorHash {
  std::size_t operator()(const RatVector& v) const noexcept;
};

/// Row-major dense rational matrix.
class RatMatrix {
public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RatMatrix identity(std::size_t n);
  /// Gram matrix of pairwise inner products.
  static RatMatrix gram(std::span<const RatVector> vs);
  /// Matrix whose rows are the given vectors.
  static RatMatrix from_rows(std::span<const RatVector> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RatVector row(std::size_t i) const;
  RatMatrix transpose() const;

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

/// Row vector times matrix: returns x^T M.
RatVector row_times(const RatVector& x, const RatMatrix& m);
/// Matrix times column vector.
RatVector times_col(const RatMatrix& m, const RatVector& x);

Rational determinant(RatMatrix m);
/// Inverse of a square matrix; throws std::domain_error when singular.
RatMatrix inverse(RatMatrix m);

}  // namespace liefix
