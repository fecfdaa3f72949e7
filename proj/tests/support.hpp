#pragma once

// Shared helpers for the unit tests.

#include <string>
#include <vector>

#include "liefix/cartan_type.hpp"
#include "liefix/group.hpp"
#include "liefix/rational.hpp"
#include "liefix/root_system.hpp"

namespace test {

using namespace liefix;

inline SimpleGroup group(const std::string& spec, ComputeOptions opts = {})
{
  return SimpleGroup(parse_group_spec(spec).factors.front(), opts);
}

/// Fundamental-weight coordinates (1/den) * sum nums[i] e_i.
inline RatVector w(std::initializer_list<long> nums, long den = 1) { return RatVector::from_ints(nums, den); }

/// 1/2 omega_k (1-based) in fundamental-weight coordinates of rank n.
inline RatVector half(int n, int k) { return Rational(1, 2) * RatVector::unit(n, k - 1); }

inline RatVector omega(int n, int k) { return RatVector::unit(n, k - 1); }

inline std::vector<SimpleType> all_types(int max_rank = 8)
{
  std::vector<SimpleType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G})
    for (int n = 1; n <= max_rank; ++n)
      if (SimpleType::valid(f, n)) out.push_back(SimpleType::make(f, n));
  return out;
}

inline const std::vector<std::string>& exceptional_groups()
{
  static const std::vector<std::string> g{"G2", "F4", "E6", "E6*", "E7", "E7*", "E8"};
  return g;
}

inline std::vector<std::string> keys(const std::vector<RatVector>& pts)
{
  std::vector<std::string> out;
  for (const auto& p : pts) out.push_back(to_string(p));
  return out;
}

}  // namespace test
