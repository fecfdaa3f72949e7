#include "liefix/centralizer.hpp"

#include <algorithm>
#include <unordered_set>

#include <json.hpp>

#include "liefix/data_files.hpp"
#include "liefix/errors.hpp"
#include "liefix/weyl.hpp"

namespace liefix {

namespace {

bool lex_positive(const RatVector& v)
{
  for (const auto& x : v)
    if (x != 0) return x > 0;
  return false;
}

Rational cartan_entry(const RatVector& a, const RatVector& b) { return Rational(2) * dot(a, b) / norm_sq(b); }

SimpleType classify_component(const std::vector<RatVector>& simple, const std::vector<int>& nodes)
{
  const int r = static_cast<int>(nodes.size());
  if (r == 1) return SimpleType::make(Family::A, 1);

  std::vector<int> degree(r, 0);
  int max_mult = 1;
  int edges = 0;
  for (int i = 0; i < r; ++i)
    for (int j = i + 1; j < r; ++j) {
      const Rational m = cartan_entry(simple[nodes[i]], simple[nodes[j]]) *
                         cartan_entry(simple[nodes[j]], simple[nodes[i]]);
      if (m == 0) continue;
      ++degree[i];
      ++degree[j];
      ++edges;
      max_mult = std::max(max_mult, static_cast<int>(m.get_num().get_si()));
    }
  if (edges != r - 1) throw InvalidArgument("Dynkin diagram component is not a tree");

  if (max_mult == 3) {
    if (r != 2) throw InvalidArgument("triple edge outside G2");
    return SimpleType::make(Family::G, 2);
  }
  if (max_mult == 2) {
    Rational longest = 0;
    for (int v : nodes) longest = std::max(longest, norm_sq(simple[v]));
    int shorts = 0;
    for (int v : nodes) shorts += norm_sq(simple[v]) < longest ? 1 : 0;
    if (r == 2) return SimpleType::make(Family::B, 2);
    if (r == 4 && shorts == 2) return SimpleType::make(Family::F, 4);
    if (shorts == 1) return SimpleType::make(Family::B, r);
    if (shorts == r - 1) return SimpleType::make(Family::C, r);
    throw InvalidArgument("unrecognised doubly laced diagram");
  }

  const auto branch = std::find(degree.begin(), degree.end(), 3);
  if (std::any_of(degree.begin(), degree.end(), [](int d) { return d > 3; }) ||
      std::count(degree.begin(), degree.end(), 3) > 1)
    throw InvalidArgument("unrecognised simply laced diagram");
  if (branch == degree.end()) return SimpleType::make(Family::A, r);

  // arm lengths from the branch node
  const int b = static_cast<int>(branch - degree.begin());
  std::vector<int> arms;
  for (int start = 0; start < r; ++start) {
    if (start == b || cartan_entry(simple[nodes[b]], simple[nodes[start]]) == 0) continue;
    int prev = b, cur = start, len = 1;
    while (true) {
      int next = -1;
      for (int k = 0; k < r; ++k)
        if (k != prev && k != cur && cartan_entry(simple[nodes[cur]], simple[nodes[k]]) != 0) next = k;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return SimpleType::make(Family::D, r);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return SimpleType::make(Family::E, r);
  throw InvalidArgument("unrecognised simply laced diagram");
}

}  // namespace

std::vector<RatVector> centralizer_roots(const SimpleGroup& group, const RatVector& c)
{
  const RootSystem& rs = group.roots();
  const RatVector u = rs.from_weight_coords(c);
  std::vector<RatVector> out;
  for (const auto& alpha : rs.roots())
    if (is_integer(inverse_root_apply(rs, alpha, u))) out.push_back(alpha);
  return out;
}

CartanType dynkin_classify(const std::vector<RatVector>& roots)
{
  if (roots.empty()) return {};
  const std::unordered_set<RatVector, RatVectorHash> set(roots.begin(), roots.end());
  for (const auto& a : roots)
    for (const auto& g : roots)
      if (!set.contains(g - cartan_entry(g, a) * a)) throw InvalidArgument("root subsystem is not closed");

  std::vector<RatVector> positive;
  for (const auto& a : roots)
    if (lex_positive(a)) positive.push_back(a);
  const std::unordered_set<RatVector, RatVectorHash> pos_set(positive.begin(), positive.end());

  std::vector<RatVector> simple;
  for (const auto& a : positive) {
    bool decomposable = false;
    for (const auto& b : positive)
      if (pos_set.contains(a - b)) {
        decomposable = true;
        break;
      }
    if (!decomposable) simple.push_back(a);
  }

  const int n = static_cast<int>(simple.size());
  std::vector<int> comp(n, -1);
  std::vector<SimpleType> factors;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> nodes{s};
    comp[s] = s;
    for (std::size_t k = 0; k < nodes.size(); ++k)
      for (int t = 0; t < n; ++t)
        if (comp[t] < 0 && dot(simple[nodes[k]], simple[t]) != 0) {
          comp[t] = s;
          nodes.push_back(t);
        }
    factors.push_back(classify_component(simple, nodes));
  }
  CartanType type(std::move(factors));
  if (type.num_roots() != static_cast<int>(roots.size()))
    throw InvalidArgument("root count does not match the classified type");
  return type.canonical();
}

std::vector<int> covering_transformations(const SimpleGroup& group, const RatVector& c)
{
  std::vector<int> covering;
  for (int p : group.weights().pi)
    if (group.in_unit_lattice_w(RatVector::unit(group.rank(), p))) covering.push_back(p);
  if (covering.empty()) return {};

  const auto orbit = orbit_weights(group.roots(), c, group.options());
  std::vector<int> out;
  for (int p : covering) {
    const RatVector shifted = RatVector::unit(group.rank(), p) + c;
    for (const auto& w : orbit)
      if (group.in_root_lattice_w(shifted - w)) {
        out.push_back(p);
        break;
      }
  }
  return out;
}

CentralizerDescriptor descriptor(const SimpleGroup& group, const RatVector& c)
{
  const auto roots = centralizer_roots(group, c);
  CentralizerDescriptor d;
  d.semisimple_type = dynkin_classify(roots);
  d.torus_rank = group.rank() - d.semisimple_type.rank();
  d.component_count = 1 + static_cast<int>(covering_transformations(group, c).size());
  d.root_count = static_cast<int>(roots.size());
  d.is_central = roots.size() == group.roots().roots().size();
  if (auto names = lookup_names(group.name(), c)) d.display_name = names->centralizer;
  return d;
}

std::string coefficient_key(const RatVector& c)
{
  std::string key;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) key += ',';
    key += to_string(c[i]);
  }
  return key;
}

std::optional<DisplayNames> lookup_names(const std::string& group_name, const RatVector& c)
{
  static const nlohmann::json names = nlohmann::json::parse(data::centralizer_names_json);
  const auto& groups = names.at("groups");
  const auto g = groups.find(group_name);
  if (g == groups.end()) return std::nullopt;
  const auto e = g->find(coefficient_key(c));
  if (e == g->end()) return std::nullopt;
  return DisplayNames{e->at("centralizer").get<std::string>(), e->at("orbit").get<std::string>()};
}

}  // namespace liefix
