#pragma once

// Centralizers of torus elements exp(u): the root subsystem, its Dynkin
// type, the torus rank and the number of components.
//
// Points u are given in fundamental-weight coordinates.

#include <optional>
#include <string>
#include <vector>

#include "liefix/cartan_type.hpp"
#include "liefix/group.hpp"

namespace liefix {

struct CentralizerDescriptor {
  CartanType semisimple_type;
  int torus_rank = 0;
  int component_count = 1;
  int root_count = 0;
  std::optional<std::string> display_name;
  bool is_central = false;

  /// Dimension of the centralizer: root count plus the rank of the group.
  int dimension() const { return root_count + semisimple_type.rank() + torus_rank; }

  /// Compares the computed fields; display_name is ignored.
  bool same_shape(const CentralizerDescriptor& o) const
  {
    return semisimple_type == o.semisimple_type && torus_rank == o.torus_rank &&
           component_count == o.component_count && root_count == o.root_count && is_central == o.is_central;
  }
};

/// Roots alpha with alpha^*(u) an integer. Returned as ambient vectors in
/// the order of RootSystem::roots().
std::vector<RatVector> centralizer_roots(const SimpleGroup& group, const RatVector& c);

/// Cartan type of a closed root subsystem given as ambient vectors.
/// Throws InvalidArgument when the set is not closed under its own
/// reflections or does not match a connected Dynkin diagram.
CartanType dynkin_classify(const std::vector<RatVector>& roots);

/// Pi_u: minimal weights pi lying in Lambda_e with pi + u - w(u) in Lambda_r
/// for some w in W. Returned as 0-based fundamental-weight indices.
std::vector<int> covering_transformations(const SimpleGroup& group, const RatVector& c);

CentralizerDescriptor descriptor(const SimpleGroup& group, const RatVector& c);

struct DisplayNames {
  std::string centralizer;
  std::string orbit;
};

/// "p/q" coefficients joined by commas, e.g. "1/2,0,0,0".
std::string coefficient_key(const RatVector& c);

/// Looks up the bundled name dictionary by group name ("E7*") and point.
std::optional<DisplayNames> lookup_names(const std::string& group_name, const RatVector& c);

}  // namespace liefix
