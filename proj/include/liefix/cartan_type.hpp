#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace liefix {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

/// A simple Cartan type such as E7 or B3. Construct through make() so that
/// rank bounds are always respected.
struct SimpleType {
  Family family = Family::A;
  int rank = 1;

  /// Throws InvalidGroup when the rank is out of range for the family.
  static SimpleType make(Family family, int rank);
  static bool valid(Family family, int rank);

  int num_roots() const;
  /// Dimension of the compact group with this root system.
  int group_dimension() const { return num_roots() + rank; }
  /// Order of the Weyl group (product of the degrees).
  std::uint64_t weyl_order() const;

  std::string name() const;

  friend bool operator==(const SimpleType&, const SimpleType&) = default;
};

/// Parses "E7", "b3", ... Throws InvalidGroup.
SimpleType parse_simple_type(std::string_view text);

/// Ordered product of simple types. Factors are kept sorted (rank descending,
/// then family) so that equality is syntactic.
class CartanType {
public:
  CartanType() = default;
  explicit CartanType(std::vector<SimpleType> factors);
  CartanType(SimpleType t) : CartanType(std::vector<SimpleType>{t}) {}

  const std::vector<SimpleType>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  bool is_simple() const { return factors_.size() == 1; }
  int rank() const;
  int num_roots() const;

  /// Replaces low-rank coincidences by one representative (C2 -> B2, D3 -> A3).
  CartanType canonical() const;

  /// "E7+A1", "D5", or "0" for the empty type.
  std::string name() const;
  /// Parses names produced by name().
  static CartanType parse(std::string_view text);

  friend bool operator==(const CartanType&, const CartanType&) = default;

private:
  std::vector<SimpleType> factors_;
};

}  // namespace liefix
