#include "liefix/fixset.hpp"

#include <algorithm>

#include "liefix/errors.hpp"
#include "liefix/weyl.hpp"

namespace liefix {

namespace {

RatVector unit(const SimpleGroup& group, int k) { return RatVector::unit(group.rank(), k); }

void sort_points(std::vector<RatVector>& pts)
{
  std::sort(pts.begin(), pts.end(), point_order);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

}  // namespace

bool point_order(const RatVector& a, const RatVector& b) { return b < a; }

std::vector<RatVector> candidate_set(const SimpleGroup& group)
{
  const RootSystem& rs = group.roots();
  const Rational half(1, 2);
  std::vector<RatVector> out;
  for (int k = 0; k < group.rank(); ++k) {
    if (deficiency(group, rs.fundamental_weights()[k]) == 1) {
      out.push_back(half * unit(group, k));
      continue;
    }
    // partners pi with omega_k + pi in Lambda_e; for a simply connected
    // group this is the single weight tau(r(omega_k))
    for (int p : group.weights().pi)
      if (group.in_unit_lattice_w(unit(group, k) + unit(group, p)))
        out.push_back(half * (unit(group, k) + unit(group, p)));
  }
  std::erase_if(out, [&](const RatVector& c) { return !in_weyl_cell_weights(rs, c); });
  sort_points(out);
  return out;
}

std::vector<RatVector> voronoi_filter(const SimpleGroup& group, const std::vector<RatVector>& candidates)
{
  std::vector<RatVector> out;
  for (const auto& c : candidates)
    if (voronoi_contains(group.unit_lattice(), group.roots().from_weight_coords(c), group.options()))
      out.push_back(c);
  return out;
}

std::vector<OrbitClass> orbit_classes(const SimpleGroup& group, const std::vector<RatVector>& points)
{
  std::vector<RatVector> pts = points;
  sort_points(pts);
  const RootSystem& rs = group.roots();
  std::vector<bool> used(pts.size(), false);
  std::vector<OrbitClass> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    OrbitClass cls{pts[i], {pts[i]}};
    const Rational norm = norm_sq(rs.from_weight_coords(pts[i]));
    std::vector<RatVector> orbit;
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      // conjugate points have equal norms, so most pairs are skipped here
      if (used[j] || norm_sq(rs.from_weight_coords(pts[j])) != norm) continue;
      if (orbit.empty()) orbit = orbit_weights(rs, pts[i], group.options());
      for (const auto& w : orbit)
        if (group.in_unit_lattice_w(w - pts[j])) {
          used[j] = true;
          cls.members.push_back(pts[j]);
          break;
        }
    }
    out.push_back(std::move(cls));
  }
  return out;
}

std::vector<RatVector> dedupe_orbits(const SimpleGroup& group, const std::vector<RatVector>& kset)
{
  std::vector<RatVector> out;
  for (auto& cls : orbit_classes(group, kset)) out.push_back(std::move(cls.rep));
  return out;
}

FixDecomposition fix_set(const SimpleGroup& group)
{
  FixDecomposition fd;
  fd.group = group.name();
  fd.k_prime = candidate_set(group);
  fd.k = voronoi_filter(group, fd.k_prime);
  for (auto& cls : orbit_classes(group, fd.k)) {
    FixOrbit o;
    o.u = cls.rep;
    o.norm_sq = norm_sq(group.roots().from_weight_coords(o.u));
    o.descriptor = descriptor(group, o.u);
    o.covering = covering_transformations(group, o.u);
    if (auto names = lookup_names(fd.group, o.u)) o.orbit_name = names->orbit;
    o.merged.assign(cls.members.begin() + 1, cls.members.end());
    fd.orbits.push_back(std::move(o));
  }
  return fd;
}

ProductFixDecomposition product_fix_set(const std::vector<SimpleGroup>& groups)
{
  std::vector<FixDecomposition> factors;
  for (const auto& g : groups) factors.push_back(fix_set(g));
  return product_fix_set(factors, groups);
}

ProductFixDecomposition product_fix_set(const std::vector<FixDecomposition>& factors,
                                        const std::vector<SimpleGroup>& groups)
{
  if (factors.empty()) throw InvalidArgument("product of no groups");
  if (factors.size() != groups.size()) throw InvalidArgument("factor and group lists differ in length");
  const std::size_t k = factors.size();

  ProductFixDecomposition out;
  for (const auto& f : factors) out.factors.push_back(f.group);
  if (k == 1) {
    for (const auto& o : factors[0].orbits)
      out.orbits.push_back({{o.u}, o.norm_sq, o.descriptor, o.orbit_name});
    return out;
  }

  // mixed radix over (F_i u {0}); digit 0 is the identity, first factor slowest
  std::vector<std::size_t> digit(k, 0);
  while (true) {
    std::size_t pos = k;
    while (pos > 0 && digit[pos - 1] == factors[pos - 1].orbits.size()) digit[--pos] = 0;
    if (pos == 0) break;
    ++digit[pos - 1];

    ProductOrbit po;
    std::vector<SimpleType> types;
    std::vector<std::string> cnames;
    std::vector<std::string> onames;
    bool named = true;
    po.descriptor.component_count = 1;
    po.descriptor.is_central = true;
    for (std::size_t i = 0; i < k; ++i) {
      const SimpleGroup& g = groups[i];
      if (digit[i] == 0) {
        po.u.push_back(RatVector(g.rank()));
        types.push_back(g.factor().type);
        po.descriptor.root_count += static_cast<int>(g.roots().roots().size());
        cnames.push_back(factors[i].group);
        continue;
      }
      const FixOrbit& o = factors[i].orbits[digit[i] - 1];
      po.u.push_back(o.u);
      po.norm_sq += o.norm_sq;
      const auto& d = o.descriptor;
      for (const auto& t : d.semisimple_type.factors()) types.push_back(t);
      po.descriptor.torus_rank += d.torus_rank;
      po.descriptor.component_count *= d.component_count;
      po.descriptor.root_count += d.root_count;
      po.descriptor.is_central = po.descriptor.is_central && d.is_central;
      if (d.display_name) cnames.push_back(*d.display_name);
      else named = false;
      if (o.orbit_name) onames.push_back(*o.orbit_name);
      else named = false;
    }
    po.descriptor.semisimple_type = CartanType(std::move(types)).canonical();
    if (named) {
      std::string c, m;
      for (const auto& s : cnames) c += (c.empty() ? "" : " x ") + s;
      for (const auto& s : onames) m += (m.empty() ? "" : " x ") + s;
      po.descriptor.display_name = c;
      po.orbit_name = m;
    }
    out.orbits.push_back(std::move(po));
  }
  return out;
}

std::vector<RatVector> cell_half_lattice_points(const SimpleGroup& group)
{
  const RootSystem& rs = group.roots();
  const int n = group.rank();
  const RatVector& beta = rs.max_short_dual_on_weights();
  std::vector<long> bound(n);
  for (int j = 0; j < n; ++j) bound[j] = floor(Rational(2) / beta[j]).get_si();

  std::vector<RatVector> out;
  std::vector<long> twice(n, 0);
  while (true) {
    RatVector c(n);
    for (int j = 0; j < n; ++j) c[j] = make_rational(twice[j], 2);
    if (in_weyl_cell_weights(rs, c) && group.in_unit_lattice_w(Rational(2) * c)) out.push_back(std::move(c));
    int j = 0;
    while (j < n && twice[j] == bound[j]) twice[j++] = 0;
    if (j == n) break;
    ++twice[j];
  }
  sort_points(out);
  return out;
}

std::vector<int> cell_intersection_counts(const SimpleGroup& group)
{
  const InvolutionOracle oracle = involution_class_oracle(group);
  std::vector<int> hits(oracle.classes.size(), 0);
  for (const auto& c : cell_half_lattice_points(group)) ++hits[oracle.classify(group, c)];
  return hits;
}

bool verify_unique_cell_intersection(const SimpleGroup& group)
{
  if (!group.simply_connected()) throw InvalidArgument("unique cell intersection needs a simply connected group");
  const auto hits = cell_intersection_counts(group);
  return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

}  // namespace liefix
