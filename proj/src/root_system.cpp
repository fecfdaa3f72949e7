#include "liefix/root_system.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "liefix/errors.hpp"

namespace liefix {

const char* to_string(Convention c) { return c == Convention::standard ? "standard" : "paper_dual"; }

namespace {

RatVector e(std::size_t dim, std::size_t i, long scale = 1)
{
  RatVector v(dim);
  v[i] = scale;
  return v;
}

// Bourbaki simple roots. Node numbering agrees with Humphreys for every type.
std::vector<RatVector> bourbaki_simple_roots(SimpleType t)
{
  const int n = t.rank;
  std::vector<RatVector> s;
  switch (t.family) {
    case Family::A:
      for (int i = 0; i < n; ++i) s.push_back(e(n + 1, i) - e(n + 1, i + 1));
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) s.push_back(e(n, i) - e(n, i + 1));
      s.push_back(e(n, n - 1));
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) s.push_back(e(n, i) - e(n, i + 1));
      s.push_back(e(n, n - 1, 2));
      break;
    case Family::D:
      for (int i = 0; i + 1 < n; ++i) s.push_back(e(n, i) - e(n, i + 1));
      s.push_back(e(n, n - 2) + e(n, n - 1));
      break;
    case Family::E: {
      std::vector<RatVector> e8;
      e8.push_back(RatVector::from_ints({1, -1, -1, -1, -1, -1, -1, 1}, 2));
      e8.push_back(e(8, 0) + e(8, 1));
      for (int i = 0; i < 6; ++i) e8.push_back(e(8, i + 1) - e(8, i));
      s.assign(e8.begin(), e8.begin() + n);
      break;
    }
    case Family::F:
      s.push_back(e(4, 1) - e(4, 2));
      s.push_back(e(4, 2) - e(4, 3));
      s.push_back(e(4, 3));
      s.push_back(RatVector::from_ints({1, -1, -1, -1}, 2));
      break;
    case Family::G:
      s.push_back(RatVector::from_ints({1, -1, 0}));
      s.push_back(RatVector::from_ints({-2, 1, 1}));
      break;
  }
  return s;
}

RatVector coroot(const RatVector& a) { return Rational(2) / norm_sq(a) * a; }

// Coroot-side simple system. B and C exchange with labels unchanged. For F4
// and G2 the coroot system is again of the same type but with long and short
// exchanged, so nodes are relabelled (reversed) to restore Humphreys order;
// F4 is additionally rescaled by a rational similarity of ratio 1/sqrt 2 so
// that long roots have squared norm 2.
std::vector<RatVector> paper_dual_simple_roots(SimpleType t)
{
  auto std_roots = bourbaki_simple_roots(t);
  std::vector<RatVector> out;
  for (const auto& a : std_roots) out.push_back(coroot(a));
  if (t.family == Family::G || t.family == Family::F) std::reverse(out.begin(), out.end());
  if (t.family == Family::F) {
    for (auto& v : out) {
      RatVector w(4);
      w[0] = (v[0] + v[1]) / 2;
      w[1] = (v[0] - v[1]) / 2;
      w[2] = (v[2] + v[3]) / 2;
      w[3] = (v[2] - v[3]) / 2;
      v = w;
    }
  }
  return out;
}

SimpleType dual_type(SimpleType t)
{
  if (t.family == Family::B) return SimpleType::make(Family::C, t.rank);
  if (t.family == Family::C) return SimpleType::make(Family::B, t.rank);
  return t;
}

}  // namespace

RootSystem RootSystem::build(SimpleType type, Convention convention)
{
  type = SimpleType::make(type.family, type.rank);
  RootSystem rs;
  rs.type_ = type;
  rs.convention_ = convention;
  rs.root_type_ = convention == Convention::paper_dual ? dual_type(type) : type;
  rs.simple_roots_ = convention == Convention::paper_dual ? paper_dual_simple_roots(type) : bourbaki_simple_roots(type);

  const int n = type.rank;
  std::vector<RatVector> simple_coroots;
  for (const auto& a : rs.simple_roots_) simple_coroots.push_back(coroot(a));

  rs.cartan_.assign(n, std::vector<int>(n));
  rs.cartan_rows_.assign(n, RatVector(n));
  RatMatrix cm(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Rational v = dot(rs.simple_roots_[i], simple_coroots[j]);
      if (!is_integer(v)) throw ConstructionError("non-integral Cartan entry");
      rs.cartan_[i][j] = static_cast<int>(v.get_num().get_si());
      rs.cartan_rows_[i][j] = v;
      cm(i, j) = v;
    }
  rs.cartan_inverse_ = inverse(cm);

  // omega_i = sum_j (C^{-1})_{ij} alpha_j
  for (int i = 0; i < n; ++i) {
    RatVector w(rs.simple_roots_[0].size());
    for (int j = 0; j < n; ++j)
      if (rs.cartan_inverse_(i, j) != 0) w += rs.cartan_inverse_(i, j) * rs.simple_roots_[j];
    rs.weights_.push_back(std::move(w));
  }
  rs.weight_gram_ = RatMatrix::gram(rs.weights_);

  // Closure of the simple roots under simple reflections gives every root.
  std::unordered_set<RatVector, RatVectorHash> seen(rs.simple_roots_.begin(), rs.simple_roots_.end());
  std::deque<RatVector> queue(rs.simple_roots_.begin(), rs.simple_roots_.end());
  while (!queue.empty()) {
    RatVector v = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < n; ++i) {
      const Rational k = dot(v, simple_coroots[i]);
      if (k == 0) continue;
      RatVector r = v - k * rs.simple_roots_[i];
      if (seen.insert(r).second) queue.push_back(std::move(r));
    }
  }

  struct Entry {
    std::vector<int> coeffs;
    RatVector root;
    int height;
  };
  std::vector<Entry> positive;
  for (const auto& r : seen) {
    const RatVector c = rs.root_coords_from_weights(rs.weight_coords(r));
    std::vector<int> ci(n);
    int height = 0;
    for (int j = 0; j < n; ++j) {
      if (!is_integer(c[j])) throw ConstructionError("root with non-integral simple-root coordinates");
      ci[j] = static_cast<int>(c[j].get_num().get_si());
      height += ci[j];
    }
    if (height > 0) positive.push_back({std::move(ci), r, height});
  }
  if (2 * positive.size() != seen.size()) throw ConstructionError("root system is not symmetric");
  std::sort(positive.begin(), positive.end(), [](const Entry& a, const Entry& b) {
    if (a.height != b.height) return a.height < b.height;
    return a.coeffs > b.coeffs;
  });
  for (const auto& p : positive) {
    rs.roots_.push_back(p.root);
    rs.root_coeffs_.push_back(p.coeffs);
  }
  for (const auto& p : positive) {
    rs.roots_.push_back(-p.root);
    std::vector<int> neg(p.coeffs);
    for (auto& x : neg) x = -x;
    rs.root_coeffs_.push_back(std::move(neg));
  }

  rs.short_norm_ = norm_sq(rs.roots_.front());
  rs.long_norm_ = rs.short_norm_;
  for (const auto& r : rs.roots_) {
    const Rational q = norm_sq(r);
    if (q < rs.short_norm_) rs.short_norm_ = q;
    if (q > rs.long_norm_) rs.long_norm_ = q;
  }

  // Maximal short root: the short positive root of largest height; checked
  // below to dominate every short root.
  std::size_t best = 0;
  bool found = false;
  for (std::size_t k = 0; k < positive.size(); ++k)
    if (norm_sq(rs.roots_[k]) == rs.short_norm_) {
      best = k;
      found = true;
    }
  if (!found) throw ConstructionError("no short root found");
  rs.max_short_ = rs.roots_[best];
  rs.max_short_coeffs_ = rs.root_coeffs_[best];
  for (std::size_t k = 0; k < rs.roots_.size(); ++k) {
    if (norm_sq(rs.roots_[k]) != rs.short_norm_) continue;
    for (int j = 0; j < n; ++j)
      if (rs.max_short_coeffs_[j] < rs.root_coeffs_[k][j])
        throw ConstructionError("maximal short root is not unique");
  }
  rs.beta_dual_ = RatVector(n);
  const Rational beta_norm = norm_sq(rs.max_short_);
  for (int j = 0; j < n; ++j)
    rs.beta_dual_[j] = Rational(2) * dot(rs.weights_[j], rs.max_short_) / beta_norm;
  return rs;
}

RatVector RootSystem::weight_coords(const RatVector& x) const
{
  if (x.size() != ambient_dim()) throw InvalidArgument("ambient dimension mismatch");
  RatVector c(rank());
  for (int i = 0; i < rank(); ++i) {
    const auto& a = simple_roots_[i];
    c[i] = Rational(2) * dot(x, a) / norm_sq(a);
  }
  return c;
}

RatVector RootSystem::from_weight_coords(const RatVector& c) const
{
  if (c.size() != static_cast<std::size_t>(rank())) throw InvalidArgument("weight coordinate length mismatch");
  RatVector x(ambient_dim());
  for (int i = 0; i < rank(); ++i)
    if (c[i] != 0) x += c[i] * weights_[i];
  return x;
}

RatVector RootSystem::root_coords_from_weights(const RatVector& c) const { return row_times(c, cartan_inverse_); }

bool RootSystem::in_span(const RatVector& x) const { return from_weight_coords(weight_coords(x)) == x; }

bool RootSystem::is_root(const RatVector& x) const { return std::find(roots_.begin(), roots_.end(), x) != roots_.end(); }

Rational inverse_root_apply(const RootSystem& rs, const RatVector& alpha, const RatVector& x)
{
  if (alpha.size() != rs.ambient_dim() || x.size() != rs.ambient_dim())
    throw InvalidArgument("ambient dimension mismatch");
  if (alpha.is_zero()) throw InvalidArgument("inverse root of the zero vector");
  return Rational(2) * dot(x, alpha) / norm_sq(alpha);
}

const RatVector& maximal_short_root(const RootSystem& rs) { return rs.max_short_root(); }

bool is_dominant(const RootSystem& rs, const RatVector& u)
{
  for (const auto& c : rs.weight_coords(u))
    if (c < 0) return false;
  return true;
}

bool in_weyl_cell_weights(const RootSystem& rs, const RatVector& c)
{
  for (const auto& x : c)
    if (x < 0) return false;
  return dot(c, rs.max_short_dual_on_weights()) <= 1;
}

bool in_weyl_cell(const RootSystem& rs, const RatVector& u)
{
  if (!rs.in_span(u)) return false;
  return in_weyl_cell_weights(rs, rs.weight_coords(u));
}

bool dominance_leq(const RootSystem& rs, const RatVector& v, const RatVector& u)
{
  const RatVector d = u - v;
  if (!rs.in_span(d)) return false;
  for (const auto& k : rs.root_coords_from_weights(rs.weight_coords(d)))
    if (!is_integer(k) || k < 0) return false;
  return true;
}

}  // namespace liefix
