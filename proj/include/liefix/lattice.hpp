#pragma once

// Full-rank lattices in the Cartan subalgebra: membership, bounded
// enumeration of short vectors, and the Voronoi-cell test.

#include <optional>
#include <vector>

#include "liefix/kernels.hpp"
#include "liefix/rational.hpp"
#include "liefix/root_system.hpp"

namespace liefix {

class LatticeBasis {
public:
  LatticeBasis() = default;
  /// Throws InvalidArgument when the vectors are linearly dependent.
  static LatticeBasis from_basis(std::vector<RatVector> basis);

  std::size_t rank() const { return basis_.size(); }
  std::size_t ambient_dim() const { return basis_.empty() ? 0 : basis_.front().size(); }
  const std::vector<RatVector>& basis() const { return basis_; }
  const RatMatrix& gram() const { return gram_; }
  const QuadraticForm& form() const { return *form_; }

  /// Coefficients of v in the basis, or nullopt when v is outside the span.
  std::optional<RatVector> coordinates(const RatVector& v) const;
  RatVector combine(const std::vector<long>& coords) const;

private:
  std::vector<RatVector> basis_;
  RatMatrix gram_;
  RatMatrix gram_inv_;
  std::optional<QuadraticForm> form_;
};

bool member(const LatticeBasis& lattice, const RatVector& v);

/// Index [outer : inner] for nested full-rank lattices of the same span.
Integer lattice_index(const LatticeBasis& outer, const LatticeBasis& inner);

/// Basis = fundamental weights.
LatticeBasis weight_lattice(const RootSystem& rs);
/// Basis = simple roots.
LatticeBasis root_lattice(const RootSystem& rs);

/// All v in L with 0 < (v, v) <= bound. Throws CapExceeded past
/// options.enumeration_cap vectors.
std::vector<RatVector> short_vectors(const LatticeBasis& lattice, const Rational& bound,
                                     const ComputeOptions& options = {});

/// True iff (u, u) <= (u - v, u - v) for every v in L.
///
/// A violator v has |v| <= |u| + |u - v| < 2|u|, so only vectors with
/// (v, v) < 4(u, u) need to be examined.
bool voronoi_contains(const LatticeBasis& lattice, const RatVector& u, const ComputeOptions& options = {});

}  // namespace liefix
