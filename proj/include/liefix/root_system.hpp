#pragma once

// Root systems of simple Cartan types in exact Euclidean coordinates.
//
// Coordinates follow the Bourbaki planches with Humphreys node numbering
// (the two numberings agree for every simple type). Under
// Convention::paper_dual the stored roots are the coroot-side system:
// roots are minimal vectors of the unit lattice along singular lines, so
// the roots of Sp(n) form a B_n system and those of Spin(2n+1) a C_n system.

#include <span>
#include <vector>

#include "liefix/cartan_type.hpp"
#include "liefix/rational.hpp"

namespace liefix {

enum class Convention { standard, paper_dual };

const char* to_string(Convention c);

class RootSystem {
public:
  /// Builds the root system for the simple group labelled `type`.
  /// Throws InvalidGroup for an invalid rank.
  static RootSystem build(SimpleType type, Convention convention = Convention::paper_dual);

  /// Label of the group as requested (e.g. B4 for Spin(9)).
  SimpleType type() const { return type_; }
  /// Cartan type of the stored root system; differs from type() for B/C
  /// under paper_dual.
  SimpleType root_type() const { return root_type_; }
  Convention convention() const { return convention_; }

  int rank() const { return type_.rank; }
  std::size_t ambient_dim() const { return simple_roots_.front().size(); }

  const std::vector<RatVector>& simple_roots() const { return simple_roots_; }
  /// All roots: positive roots by increasing height, then their negatives.
  const std::vector<RatVector>& roots() const { return roots_; }
  std::span<const RatVector> positive_roots() const { return {roots_.data(), roots_.size() / 2}; }
  /// Simple-root coefficients of roots()[k].
  const std::vector<std::vector<int>>& root_coeffs() const { return root_coeffs_; }
  const std::vector<RatVector>& fundamental_weights() const { return weights_; }

  /// cartan_matrix()[i][j] = alpha_j^*(alpha_i).
  const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }

  const RatVector& max_short_root() const { return max_short_; }
  /// m_i with beta = sum m_i alpha_i.
  const std::vector<int>& max_short_coeffs() const { return max_short_coeffs_; }

  /// (omega_i, omega_j).
  const RatMatrix& weight_gram() const { return weight_gram_; }
  /// beta^*(omega_i); beta^*(u) is the dot product of this with weight_coords(u).
  const RatVector& max_short_dual_on_weights() const { return beta_dual_; }
  /// Row i: alpha_i expressed in the fundamental-weight basis.
  const RatVector& simple_root_in_weights(int i) const { return cartan_rows_[i]; }

  /// Fundamental-weight coordinates (alpha_1^*(x), ..., alpha_n^*(x)).
  RatVector weight_coords(const RatVector& x) const;
  /// Ambient vector sum c_i omega_i.
  RatVector from_weight_coords(const RatVector& c) const;
  /// Coefficients in the simple-root basis, from fundamental-weight coordinates.
  RatVector root_coords_from_weights(const RatVector& c) const;
  bool in_span(const RatVector& x) const;

  bool is_root(const RatVector& x) const;
  bool is_short(const RatVector& alpha) const { return norm_sq(alpha) == short_norm_; }
  const Rational& long_norm_sq() const { return long_norm_; }
  const Rational& short_norm_sq() const { return short_norm_; }

private:
  RootSystem() = default;

  SimpleType type_;
  SimpleType root_type_;
  Convention convention_ = Convention::paper_dual;
  std::vector<RatVector> simple_roots_;
  std::vector<RatVector> roots_;
  std::vector<std::vector<int>> root_coeffs_;
  std::vector<RatVector> weights_;
  std::vector<std::vector<int>> cartan_;
  std::vector<RatVector> cartan_rows_;
  RatMatrix cartan_inverse_;
  RatMatrix weight_gram_;
  RatVector max_short_;
  std::vector<int> max_short_coeffs_;
  RatVector beta_dual_;
  Rational long_norm_;
  Rational short_norm_;
};

/// 2(x, alpha)/(alpha, alpha). Throws InvalidArgument for alpha = 0.
Rational inverse_root_apply(const RootSystem& rs, const RatVector& alpha, const RatVector& x);

const RatVector& maximal_short_root(const RootSystem& rs);

/// alpha_i^*(u) >= 0 for all simple roots.
bool is_dominant(const RootSystem& rs, const RatVector& u);

/// u in the closed fundamental cell: dominant and beta^*(u) <= 1.
bool in_weyl_cell(const RootSystem& rs, const RatVector& u);
/// Same test on fundamental-weight coordinates.
bool in_weyl_cell_weights(const RootSystem& rs, const RatVector& c);

/// v precedes u: u - v is a nonnegative integer combination of simple roots.
bool dominance_leq(const RootSystem& rs, const RatVector& v, const RatVector& u);

}  // namespace liefix
