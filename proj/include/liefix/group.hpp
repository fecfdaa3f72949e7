#pragma once

// Compact groups as (Cartan type, center selector) pairs and the cached
// lattice data of a simple factor: Lambda_r <= Lambda_e <= Lambda.

#include <string>
#include <string_view>
#include <vector>

#include "liefix/cartan_type.hpp"
#include "liefix/integer_matrix.hpp"
#include "liefix/kernels.hpp"
#include "liefix/lattice.hpp"
#include "liefix/root_system.hpp"
#include "liefix/weights.hpp"

namespace liefix {

enum class CenterKind { simply_connected, adjoint, subgroup };

/// Fixes the unit lattice between the root and weight lattices. For
/// `subgroup`, Lambda_e is generated by Lambda_r and the listed minimal
/// weights (0-based indices).
struct CenterSelector {
  CenterKind kind = CenterKind::simply_connected;
  std::vector<int> generators;

  static CenterSelector simply_connected() { return {}; }
  static CenterSelector adjoint() { return {CenterKind::adjoint, {}}; }
  static CenterSelector subgroup(std::vector<int> generators) { return {CenterKind::subgroup, std::move(generators)}; }

  friend bool operator==(const CenterSelector&, const CenterSelector&) = default;
};

struct GroupFactor {
  SimpleType type;
  CenterSelector center;

  friend bool operator==(const GroupFactor&, const GroupFactor&) = default;
};

struct GroupSpec {
  std::vector<GroupFactor> factors;

  bool is_simple() const { return factors.size() == 1; }
  static GroupSpec simple(SimpleType type, CenterSelector center = {}) { return {{GroupFactor{type, std::move(center)}}}; }
};

/// Grammar: FACTOR ("x" FACTOR)*, FACTOR = TYPE RANK ["*"] [":" SELECTOR],
/// SELECTOR = "sc" | "adj" | "sub=" INDEX ("," INDEX)*, INDEX = ["w"] 1-based
/// integer. "*" is the adjoint form.
/// Throws ParseError for malformed text, InvalidSelector for a selector
/// that conflicts with "*".
GroupSpec parse_group_spec(std::string_view text);
/// Parses a bare selector as accepted by --center.
CenterSelector parse_center_selector(std::string_view text);

/// A simple factor with its lattices and weight table built once.
class SimpleGroup {
public:
  /// Throws InvalidSelector when a subgroup generator is not a minimal weight.
  explicit SimpleGroup(GroupFactor factor, ComputeOptions options = {},
                       Convention convention = Convention::paper_dual);

  const GroupFactor& factor() const { return factor_; }
  const RootSystem& roots() const { return rs_; }
  const WeightTable& weights() const { return table_; }
  const ComputeOptions& options() const { return options_; }
  int rank() const { return rs_.rank(); }

  const LatticeBasis& weight_lattice() const { return weight_lattice_; }
  const LatticeBasis& root_lattice() const { return root_lattice_; }
  const LatticeBasis& unit_lattice() const { return unit_lattice_; }
  /// Basis of Lambda_e in fundamental-weight coordinates (rows).
  const IntMatrix& unit_basis() const { return unit_basis_; }
  /// Invariant factors of Lambda / Lambda_e.
  const std::vector<Integer>& quotient_invariants() const { return invariants_; }
  /// |Z(G)| = [Lambda : Lambda_e].
  Integer center_order() const;
  /// |pi_1(G)| = [Lambda_e : Lambda_r].
  Integer fundamental_group_order() const;
  bool simply_connected() const { return fundamental_group_order() == 1; }
  bool centerless() const { return center_order() == 1; }

  /// "E7", "E7*", "D6:sub=5" (selector normalised from the actual lattice).
  std::string name() const;

  // Membership tests on fundamental-weight coordinates.
  bool in_weight_lattice_w(const RatVector& c) const;
  bool in_root_lattice_w(const RatVector& c) const;
  bool in_unit_lattice_w(const RatVector& c) const;
  /// Coordinates of c in the Lambda_e basis.
  RatVector unit_coords_w(const RatVector& c) const;

private:
  GroupFactor factor_;
  ComputeOptions options_;
  RootSystem rs_;
  WeightTable table_;
  LatticeBasis weight_lattice_;
  LatticeBasis root_lattice_;
  LatticeBasis unit_lattice_;
  IntMatrix unit_basis_;
  RatMatrix unit_basis_inv_;
  std::vector<Integer> invariants_;
};

/// Lambda_e of the factor.
LatticeBasis unit_lattice(const SimpleGroup& group);

/// Least kappa >= 1 with kappa * x in Lambda_e. Throws InvalidArgument when
/// x is not a weight.
int deficiency(const SimpleGroup& group, const RatVector& x);

struct OmegaPartition {
  std::vector<int> omega1;  // kappa = 1
  std::vector<int> omega2;  // kappa >= 2
};

OmegaPartition omega_partition(const SimpleGroup& group);

}  // namespace liefix
