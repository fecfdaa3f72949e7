#include "liefix/weights.hpp"

#include <algorithm>

#include "liefix/errors.hpp"
#include "liefix/group.hpp"

namespace liefix {

namespace {

bool integral_nonnegative(const RatVector& v)
{
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return is_integer(x) && x >= 0; });
}

bool in_root_lattice(const RootSystem& rs, const RatVector& weight_coords)
{
  const RatVector c = rs.root_coords_from_weights(weight_coords);
  return std::all_of(c.begin(), c.end(), [](const Rational& x) { return is_integer(x); });
}

RatVector unit(const RootSystem& rs, int k) { return RatVector::unit(rs.rank(), k); }

}  // namespace

bool has_dominant_weight_below(const RootSystem& rs, int k)
{
  const int n = rs.rank();
  const RatVector coeffs = rs.root_coords_from_weights(unit(rs, k));
  std::vector<long> bound(n);
  for (int j = 0; j < n; ++j) bound[j] = floor(coeffs[j]).get_si();
  const auto& cartan = rs.cartan_matrix();

  // odometer over 0 <= c_j <= bound_j, skipping c = 0
  std::vector<long> c(n, 0);
  while (true) {
    int j = 0;
    while (j < n && c[j] == bound[j]) c[j++] = 0;
    if (j == n) return false;
    ++c[j];
    bool dominant = true;
    for (int i = 0; i < n && dominant; ++i) {
      long coord = i == k ? 1 : 0;
      for (int m = 0; m < n; ++m) coord -= c[m] * cartan[m][i];
      dominant = coord >= 0;
    }
    if (dominant) return true;
  }
}

std::vector<int> minimal_weight_indices(const RootSystem& rs)
{
  std::vector<int> out;
  for (int k = 0; k < rs.rank(); ++k) {
    if (in_root_lattice(rs, unit(rs, k))) continue;  // dominates 0
    if (!has_dominant_weight_below(rs, k)) out.push_back(k);
  }
  return out;
}

WeightTable build_weight_table(const RootSystem& rs)
{
  WeightTable t;
  t.pi = minimal_weight_indices(rs);
  for (int k = 0; k < rs.rank(); ++k)
    if (!in_root_lattice(rs, unit(rs, k))) t.omega2.push_back(k);

  for (int k : t.omega2) {
    std::vector<int> below;
    for (int p : t.pi) {
      const RatVector diff = rs.root_coords_from_weights(unit(rs, k) - unit(rs, p));
      if (integral_nonnegative(diff)) below.push_back(p);
    }
    if (below.size() != 1)
      throw ConstructionError("retraction of omega_" + std::to_string(k + 1) + " has " + std::to_string(below.size()) +
                              " candidates");
    t.retraction[k] = below.front();
  }
  for (int p : t.pi) {
    std::vector<int> partner;
    for (int q : t.pi)
      if (in_root_lattice(rs, unit(rs, p) + unit(rs, q))) partner.push_back(q);
    if (partner.size() != 1)
      throw ConstructionError("tau(omega_" + std::to_string(p + 1) + ") has " + std::to_string(partner.size()) +
                              " candidates");
    t.tau[p] = partner.front();
  }
  return t;
}

namespace {

int weight_index(const SimpleGroup& group, const RatVector& omega)
{
  const auto& ws = group.roots().fundamental_weights();
  const auto it = std::find(ws.begin(), ws.end(), omega);
  if (it == ws.end()) throw InvalidArgument("not a fundamental weight: " + to_string(omega));
  return static_cast<int>(it - ws.begin());
}

const RatVector& weight(const SimpleGroup& group, int k) { return group.roots().fundamental_weights()[k]; }

}  // namespace

std::vector<RatVector> minimal_weights(const SimpleGroup& group)
{
  std::vector<RatVector> out;
  for (int k : group.weights().pi) out.push_back(weight(group, k));
  return out;
}

RatVector retraction(const SimpleGroup& group, const RatVector& omega)
{
  const int k = weight_index(group, omega);
  const auto it = group.weights().retraction.find(k);
  if (it == group.weights().retraction.end()) throw InvalidArgument("weight is not in Omega_2");
  return weight(group, it->second);
}

RatVector tau(const SimpleGroup& group, const RatVector& omega)
{
  const int k = weight_index(group, omega);
  const auto it = group.weights().tau.find(k);
  if (it == group.weights().tau.end()) throw InvalidArgument("weight is not minimal");
  return weight(group, it->second);
}

RatVector tau_r(const SimpleGroup& group, const RatVector& omega) { return tau(group, retraction(group, omega)); }

std::vector<RatVector> center_elements(const SimpleGroup& group) { return minimal_weights(group); }

}  // namespace liefix
