#include "liefix/weyl.hpp"

#include <algorithm>

#include "liefix/errors.hpp"

namespace liefix {

namespace {

std::vector<RatVector> cartan_rows(const RootSystem& rs)
{
  std::vector<RatVector> rows;
  for (int i = 0; i < rs.rank(); ++i) rows.push_back(rs.simple_root_in_weights(i));
  return rows;
}

bool all_integral(const RatVector& v)
{
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return is_integer(x); });
}

}  // namespace

RatVector reflect(const RootSystem& rs, const RatVector& alpha, const RatVector& v)
{
  return v - inverse_root_apply(rs, alpha, v) * alpha;
}

bool WeylOrbit::contains(const RatVector& v) const { return std::binary_search(elements.begin(), elements.end(), v); }

std::vector<RatVector> orbit_weights(const RootSystem& rs, const RatVector& c, const ComputeOptions& options)
{
  if (c.size() != static_cast<std::size_t>(rs.rank())) throw InvalidArgument("weight coordinate length mismatch");
  const auto rows = cartan_rows(rs);
  return options.exec == Exec::serial ? kernels::serial::weight_orbit(rows, c, options.orbit_cap)
                                      : kernels::omp::weight_orbit(rows, c, options.orbit_cap);
}

WeylOrbit orbit(const RootSystem& rs, const RatVector& v, const ComputeOptions& options)
{
  if (!rs.in_span(v)) throw InvalidArgument("vector is outside the Cartan subalgebra");
  WeylOrbit o{v, {}};
  for (const auto& c : orbit_weights(rs, rs.weight_coords(v), options)) o.elements.push_back(rs.from_weight_coords(c));
  std::sort(o.elements.begin(), o.elements.end());
  return o;
}

RatVector dominant_rep_weights(const RootSystem& rs, const RatVector& c)
{
  RatVector x = c;
  // each step raises the pairing with rho by -x_i > 0, so this terminates
  while (true) {
    const auto it = std::find_if(x.begin(), x.end(), [](const Rational& v) { return v < 0; });
    if (it == x.end()) return x;
    const auto i = static_cast<int>(it - x.begin());
    x -= x[i] * rs.simple_root_in_weights(i);
  }
}

RatVector dominant_rep(const RootSystem& rs, const RatVector& v)
{
  if (!rs.in_span(v)) throw InvalidArgument("vector is outside the Cartan subalgebra");
  return rs.from_weight_coords(dominant_rep_weights(rs, rs.weight_coords(v)));
}

std::vector<int> longest_word(const RootSystem& rs)
{
  // drive rho to -rho through simple reflections at positive coordinates
  RatVector x(rs.rank());
  for (auto& v : x) v = 1;
  std::vector<int> word;
  while (true) {
    const auto it = std::find_if(x.begin(), x.end(), [](const Rational& v) { return v > 0; });
    if (it == x.end()) break;
    const auto i = static_cast<int>(it - x.begin());
    x -= x[i] * rs.simple_root_in_weights(i);
    word.push_back(i);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

RatVector apply_word(const RootSystem& rs, const std::vector<int>& word, const RatVector& v)
{
  RatVector x = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = reflect(rs, rs.simple_roots()[*it], x);
  return x;
}

bool conjugate_mod_lattice(const RootSystem& rs, const LatticeBasis& lattice, const RatVector& u, const RatVector& v,
                           const ComputeOptions& options)
{
  for (const auto& w : orbit(rs, u, options).elements)
    if (member(lattice, w - v)) return true;
  return false;
}

bool conjugate_mod_unit_lattice(const SimpleGroup& group, const RatVector& cu, const RatVector& cv)
{
  for (const auto& w : orbit_weights(group.roots(), cu, group.options()))
    if (group.in_unit_lattice_w(w - cv)) return true;
  return false;
}

std::vector<IntMatrix> reflection_matrices(const SimpleGroup& group)
{
  const int n = group.rank();
  std::vector<RatVector> basis;
  for (const auto& r : group.unit_basis()) basis.push_back(to_rat_vector(r));
  std::vector<IntMatrix> out;
  for (int i = 0; i < n; ++i) {
    IntMatrix m;
    for (const auto& b : basis) {
      const RatVector img = b - b[i] * group.roots().simple_root_in_weights(i);
      const RatVector coords = group.unit_coords_w(img);
      if (!all_integral(coords)) throw ConstructionError("Weyl group does not preserve the unit lattice");
      m.push_back(to_int_row(coords));
    }
    out.push_back(std::move(m));
  }
  return out;
}

InvolutionOracle involution_class_oracle(const SimpleGroup& group)
{
  const int n = group.rank();
  if (n > 20) throw InvalidArgument("rank too large for the involution oracle");
  const std::uint32_t states = 1u << n;

  // reflection action on F_2^n
  std::vector<std::vector<std::uint32_t>> rows_mod2;
  for (const auto& m : reflection_matrices(group)) {
    std::vector<std::uint32_t> rows;
    for (const auto& row : m) {
      std::uint32_t bits = 0;
      for (int j = 0; j < n; ++j)
        if (mpz_odd_p(row[j].get_mpz_t())) bits |= 1u << j;
      rows.push_back(bits);
    }
    rows_mod2.push_back(std::move(rows));
  }
  auto act = [&](int r, std::uint32_t x) {
    std::uint32_t y = 0;
    for (int i = 0; i < n; ++i)
      if (x >> i & 1u) y ^= rows_mod2[r][i];
    return y;
  };

  InvolutionOracle oracle;
  oracle.class_of.assign(states, -1);
  for (std::uint32_t start = 0; start < states; ++start) {
    if (oracle.class_of[start] >= 0) continue;
    const int id = static_cast<int>(oracle.classes.size());
    std::vector<std::uint32_t> stack{start};
    oracle.class_of[start] = id;
    std::size_t size = 0;
    while (!stack.empty()) {
      const std::uint32_t x = stack.back();
      stack.pop_back();
      ++size;
      for (int r = 0; r < n; ++r) {
        const std::uint32_t y = act(r, x);
        if (oracle.class_of[y] < 0) {
          oracle.class_of[y] = id;
          stack.push_back(y);
        }
      }
    }
    InvolutionClass cls;
    cls.mask = start;
    cls.size = size;
    cls.u = RatVector(n);
    for (int i = 0; i < n; ++i)
      if (start >> i & 1u) cls.u += Rational(1, 2) * to_rat_vector(group.unit_basis()[i]);
    cls.dominant = dominant_rep_weights(group.roots(), cls.u);
    oracle.classes.push_back(std::move(cls));
  }
  return oracle;
}

int InvolutionOracle::classify(const SimpleGroup& group, const RatVector& c) const
{
  const RatVector e = group.unit_coords_w(Rational(2) * c);
  if (!all_integral(e)) throw InvalidArgument("point is not in half the unit lattice");
  std::uint32_t mask = 0;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (mpz_odd_p(e[i].get_num_mpz_t())) mask |= 1u << i;
  return class_of.at(mask);
}

}  // namespace liefix
