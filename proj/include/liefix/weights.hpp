#pragma once

// Minimal weights of the simply connected group, the retraction
// r: Omega_2 -> Pi_G (w >- r(w)) and the involution tau on Pi_G
// (w + tau(w) in the root lattice).
//
// Indices are 0-based fundamental-weight indices throughout.

#include <map>
#include <vector>

#include "liefix/root_system.hpp"

namespace liefix {

class SimpleGroup;

struct WeightTable {
  std::vector<int> pi;                  // Pi_G
  std::vector<int> omega2;              // Omega_2 of the simply connected group
  std::map<int, int> retraction;        // Omega_2 -> Pi_G
  std::map<int, int> tau;               // Pi_G -> Pi_G

  int tau_r(int k) const { return tau.at(retraction.at(k)); }
};

/// True iff some dominant weight lambda != omega_k satisfies lambda -< omega_k.
/// Candidates are omega_k - sum c_j alpha_j with 0 <= c_j <= floor of the
/// simple-root coefficients of omega_k.
bool has_dominant_weight_below(const RootSystem& rs, int k);

/// Indices of the nonzero minimal dominant weights (all of them are
/// fundamental weights outside the root lattice).
std::vector<int> minimal_weight_indices(const RootSystem& rs);

/// Throws ConstructionError when r or tau is not well defined.
WeightTable build_weight_table(const RootSystem& rs);

// Vector-valued forms on a group; all refer to its simply connected cover.
std::vector<RatVector> minimal_weights(const SimpleGroup& group);
RatVector retraction(const SimpleGroup& group, const RatVector& omega);
RatVector tau(const SimpleGroup& group, const RatVector& omega);
RatVector tau_r(const SimpleGroup& group, const RatVector& omega);
/// Pi_G, whose exponentials are the nontrivial central elements.
std::vector<RatVector> center_elements(const SimpleGroup& group);

}  // namespace liefix
