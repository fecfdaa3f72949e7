#pragma once

// The fixed set of g -> g^{-1}: the identity together with one adjoint
// orbit through exp(u) for each u in F_G.
//
//   K'_G  candidates of the form 1/2 omega_k or 1/2 (omega_k + pi), cut to the cell
//   K_G   those u with d(e, exp(u)) = |u|  (Voronoi test against Lambda_e)
//   F_G   one representative per conjugacy class of exp(u)
//
// All points are in fundamental-weight coordinates.

#include <optional>
#include <string>
#include <vector>

#include "liefix/centralizer.hpp"
#include "liefix/group.hpp"

namespace liefix {

struct FixOrbit {
  RatVector u;
  Rational norm_sq;
  CentralizerDescriptor descriptor;
  std::vector<int> covering;               // Pi_u, 0-based indices
  std::optional<std::string> orbit_name;   // from the name dictionary
  std::vector<RatVector> merged;           // other points of K_G conjugate to u
};

struct FixDecomposition {
  std::string group;
  std::vector<RatVector> k_prime;
  std::vector<RatVector> k;
  std::vector<FixOrbit> orbits;
  bool includes_identity = true;
};

/// Sorting used for all point lists: lexicographically descending
/// coefficient tuples (so 1/2 omega_1 precedes 1/2 omega_6).
bool point_order(const RatVector& a, const RatVector& b);

/// K'_G. Each candidate is checked against the cell directly.
std::vector<RatVector> candidate_set(const SimpleGroup& group);

/// K_G: the candidates inside the Voronoi cell of Lambda_e.
std::vector<RatVector> voronoi_filter(const SimpleGroup& group, const std::vector<RatVector>& candidates);

struct OrbitClass {
  RatVector rep;                  // first member in point_order
  std::vector<RatVector> members; // including rep
};

/// Partition by conjugacy of exp(u): u ~ v iff w(u) - v in Lambda_e.
std::vector<OrbitClass> orbit_classes(const SimpleGroup& group, const std::vector<RatVector>& points);

/// F_G: one representative per class.
std::vector<RatVector> dedupe_orbits(const SimpleGroup& group, const std::vector<RatVector>& kset);

FixDecomposition fix_set(const SimpleGroup& group);

struct ProductOrbit {
  std::vector<RatVector> u;  // one entry per factor; zero for the identity
  Rational norm_sq;
  CentralizerDescriptor descriptor;
  std::optional<std::string> orbit_name;
};

struct ProductFixDecomposition {
  std::vector<std::string> factors;
  std::vector<ProductOrbit> orbits;
  bool includes_identity = true;
};

/// Orbits of a product: tuples over (F_{G_i} u {0}) except the all-zero
/// tuple, with factorwise descriptors. Throws InvalidArgument when empty.
ProductFixDecomposition product_fix_set(const std::vector<SimpleGroup>& groups);
ProductFixDecomposition product_fix_set(const std::vector<FixDecomposition>& factors,
                                        const std::vector<SimpleGroup>& groups);

/// Points of the closed cell inside 1/2 Lambda_e.
std::vector<RatVector> cell_half_lattice_points(const SimpleGroup& group);

/// For each class of the involution oracle, the number of cell points of
/// 1/2 Lambda_e that fall in it.
std::vector<int> cell_intersection_counts(const SimpleGroup& group);

/// Every order-two conjugacy class meets the cell in exactly one point.
/// Throws InvalidArgument unless the group is simply connected.
bool verify_unique_cell_intersection(const SimpleGroup& group);

}  // namespace liefix
