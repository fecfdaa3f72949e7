#pragma once

// Weyl group actions: reflections, orbits, dominant representatives,
// conjugacy modulo a lattice and the order-two class oracle.
//
// Orbits are computed in fundamental-weight coordinates, where the simple
// reflection r_i acts as c -> c - c_i * (row i of the Cartan matrix).

#include <cstdint>
#include <vector>

#include "liefix/group.hpp"
#include "liefix/kernels.hpp"
#include "liefix/lattice.hpp"
#include "liefix/root_system.hpp"

namespace liefix {

/// r_alpha(v) = v - alpha^*(v) alpha.
RatVector reflect(const RootSystem& rs, const RatVector& alpha, const RatVector& v);

struct WeylOrbit {
  RatVector base;
  std::vector<RatVector> elements;  // sorted ascending

  std::size_t size() const { return elements.size(); }
  bool contains(const RatVector& v) const;
};

/// Orbit of an ambient vector. Throws CapExceeded past options.orbit_cap.
WeylOrbit orbit(const RootSystem& rs, const RatVector& v, const ComputeOptions& options = {});
/// Orbit in fundamental-weight coordinates (sorted ascending).
std::vector<RatVector> orbit_weights(const RootSystem& rs, const RatVector& c, const ComputeOptions& options = {});

RatVector dominant_rep(const RootSystem& rs, const RatVector& v);
RatVector dominant_rep_weights(const RootSystem& rs, const RatVector& c);

/// Reduced word of the longest element w0, as 0-based simple reflection
/// indices: w0 = r_{word[0]} r_{word[1]} ...
std::vector<int> longest_word(const RootSystem& rs);
/// Applies r_{word[0]} r_{word[1]} ... to v (last letter acts first).
RatVector apply_word(const RootSystem& rs, const std::vector<int>& word, const RatVector& v);

/// True iff w(u) - v lies in L for some w in W.
bool conjugate_mod_lattice(const RootSystem& rs, const LatticeBasis& lattice, const RatVector& u, const RatVector& v,
                           const ComputeOptions& options = {});
/// Same test with L = Lambda_e of the group, on fundamental-weight coordinates.
bool conjugate_mod_unit_lattice(const SimpleGroup& group, const RatVector& cu, const RatVector& cv);

/// One W-orbit on (1/2 Lambda_e) / Lambda_e. A coset is a bitmask x with
/// bit i standing for 1/2 e_i, e_i the Lambda_e basis.
struct InvolutionClass {
  std::uint32_t mask = 0;   // least mask in the orbit
  std::size_t size = 0;     // number of cosets in the orbit
  RatVector u;              // 1/2 sum x_i e_i, fundamental-weight coordinates
  RatVector dominant;       // dominant_rep of u
};

struct InvolutionOracle {
  std::vector<InvolutionClass> classes;  // ordered by least mask; class 0 is the identity
  std::vector<int> class_of;             // indexed by mask

  /// Class index of a point c of 1/2 Lambda_e (fundamental-weight coordinates).
  int classify(const SimpleGroup& group, const RatVector& c) const;
};

/// Integer matrices of the simple reflections in the Lambda_e basis
/// (row-vector convention: x -> x M).
std::vector<IntMatrix> reflection_matrices(const SimpleGroup& group);

/// Brute-force classification of elements of order <= 2 in the maximal
/// torus up to conjugacy: orbits of W on the 2^n cosets.
InvolutionOracle involution_class_oracle(const SimpleGroup& group);

}  // namespace liefix
