#include "liefix/lattice.hpp"

#include "liefix/errors.hpp"

namespace liefix {

LatticeBasis LatticeBasis::from_basis(std::vector<RatVector> basis)
{
  if (basis.empty()) throw InvalidArgument("empty lattice basis");
  LatticeBasis l;
  l.basis_ = std::move(basis);
  l.gram_ = RatMatrix::gram(l.basis_);
  if (determinant(l.gram_) == 0) throw InvalidArgument("lattice basis vectors are linearly dependent");
  l.gram_inv_ = inverse(l.gram_);
  l.form_.emplace(l.gram_);
  return l;
}

std::optional<RatVector> LatticeBasis::coordinates(const RatVector& v) const
{
  if (v.size() != ambient_dim()) throw InvalidArgument("ambient dimension mismatch");
  RatVector pairings(rank());
  for (std::size_t i = 0; i < rank(); ++i) pairings[i] = dot(basis_[i], v);
  RatVector c = times_col(gram_inv_, pairings);
  RatVector back(ambient_dim());
  for (std::size_t i = 0; i < rank(); ++i)
    if (c[i] != 0) back += c[i] * basis_[i];
  if (!(back == v)) return std::nullopt;
  return c;
}

RatVector LatticeBasis::combine(const std::vector<long>& coords) const
{
  RatVector v(ambient_dim());
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) v += Rational(coords[i]) * basis_[i];
  return v;
}

bool member(const LatticeBasis& lattice, const RatVector& v)
{
  const auto c = lattice.coordinates(v);
  if (!c) return false;
  for (const auto& x : *c)
    if (!is_integer(x)) return false;
  return true;
}

Integer lattice_index(const LatticeBasis& outer, const LatticeBasis& inner)
{
  const Rational ratio = determinant(inner.gram()) / determinant(outer.gram());
  if (!is_integer(ratio)) throw InvalidArgument("lattices are not nested");
  Integer root;
  mpz_sqrt(root.get_mpz_t(), ratio.get_num_mpz_t());
  if (root * root != ratio.get_num()) throw InvalidArgument("lattices are not nested");
  return root;
}

LatticeBasis weight_lattice(const RootSystem& rs) { return LatticeBasis::from_basis(rs.fundamental_weights()); }

LatticeBasis root_lattice(const RootSystem& rs) { return LatticeBasis::from_basis(rs.simple_roots()); }

std::vector<RatVector> short_vectors(const LatticeBasis& lattice, const Rational& bound, const ComputeOptions& options)
{
  if (bound < 0) throw InvalidArgument("negative enumeration bound");
  const auto found = options.exec == Exec::serial
                         ? kernels::serial::short_vectors(lattice.form(), bound, options.enumeration_cap)
                         : kernels::omp::short_vectors(lattice.form(), bound, options.enumeration_cap);
  std::vector<RatVector> out;
  out.reserve(found.size());
  for (const auto& s : found) out.push_back(lattice.combine(s.coords));
  return out;
}

bool voronoi_contains(const LatticeBasis& lattice, const RatVector& u, const ComputeOptions& options)
{
  if (u.size() != lattice.ambient_dim()) throw InvalidArgument("ambient dimension mismatch");
  RatVector ub(lattice.rank());
  for (std::size_t i = 0; i < lattice.rank(); ++i) ub[i] = dot(u, lattice.basis()[i]);
  const Rational bound = 4 * norm_sq(u);
  const auto violator = options.exec == Exec::serial ? kernels::serial::voronoi_violator(lattice.form(), bound, ub)
                                                     : kernels::omp::voronoi_violator(lattice.form(), bound, ub);
  return !violator.has_value();
}

}  // namespace liefix
