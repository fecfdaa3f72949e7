#pragma once

// Hot loops of the library, each in a serial reference form and an OpenMP
// form. The serial kernels are the correctness baseline; the parallel ones
// must return identical results (same elements, same order).
//
//  * short-vector enumeration over a positive definite Gram matrix
//    (Fincke-Pohst bounding, exact rational arithmetic)
//  * search for a lattice vector v with 2(u,v) > (v,v) (Voronoi violator)
//  * Weyl-orbit closure in fundamental-weight coordinates

#include <cstddef>
#include <optional>
#include <vector>

#include "liefix/rational.hpp"

namespace liefix {

enum class Exec { serial, parallel };

struct ComputeOptions {
  std::size_t orbit_cap = 1'000'000;
  std::size_t enumeration_cap = 20'000'000;
  Exec exec = Exec::parallel;
};

/// Number of OpenMP threads available (1 when built without OpenMP).
int max_threads();

struct ShortVector {
  std::vector<long> coords;  // coefficients in the lattice basis
  Rational norm;             // x^T G x
};

/// Upper-triangular factorisation G = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2.
class QuadraticForm {
public:
  explicit QuadraticForm(const RatMatrix& gram);
  std::size_t dim() const { return q_.rows(); }
  const Rational& diag(std::size_t i) const { return q_(i, i); }
  const Rational& mu(std::size_t i, std::size_t j) const { return q_(i, j); }

private:
  RatMatrix q_;
};

namespace kernels {

namespace serial {

/// All nonzero x with x^T G x <= bound, in enumeration order.
/// Throws CapExceeded once more than `cap` vectors are found.
std::vector<ShortVector> short_vectors(const QuadraticForm& q, const Rational& bound, std::size_t cap);

/// Some x with x^T G x <= bound and 2 * sum_i x_i ub_i > x^T G x, if any.
std::optional<std::vector<long>> voronoi_violator(const QuadraticForm& q, const Rational& bound,
                                                  const RatVector& ub);

/// Orbit of `start` (fundamental-weight coordinates) under the simple
/// reflections c -> c - c_i * rows[i]. Result sorted ascending.
std::vector<RatVector> weight_orbit(const std::vector<RatVector>& rows, const RatVector& start, std::size_t cap);

}  // namespace serial

namespace omp {

std::vector<ShortVector> short_vectors(const QuadraticForm& q, const Rational& bound, std::size_t cap);
std::optional<std::vector<long>> voronoi_violator(const QuadraticForm& q, const Rational& bound,
                                                  const RatVector& ub);
std::vector<RatVector> weight_orbit(const std::vector<RatVector>& rows, const RatVector& start, std::size_t cap);

}  // namespace omp

}  // namespace kernels

}  // namespace liefix
