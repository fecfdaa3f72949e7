#pragma once

// Small dense integer matrices with Hermite and Smith normal forms, used for
// lattice bases given by generating sets and for finite quotients of lattices.

#include <vector>

#include "liefix/rational.hpp"

namespace liefix {

using IntRow = std::vector<Integer>;
using IntMatrix = std::vector<IntRow>;

/// Row-style Hermite normal form of the row lattice spanned by `gens`.
/// Returns a basis (rows) of that lattice, upper triangular with positive
/// pivots and reduced entries above each pivot.
IntMatrix hermite_basis(IntMatrix gens);

/// Nonzero invariant factors d_1 | d_2 | ... of the Smith normal form.
std::vector<Integer> smith_invariants(IntMatrix a);

/// Converts a rational vector with integral entries; throws InvalidArgument otherwise.
IntRow to_int_row(const RatVector& v);
RatVector to_rat_vector(const IntRow& r);

}  // namespace liefix
