#include "liefix/group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "liefix/errors.hpp"

namespace liefix {

namespace {

std::string_view trim(std::string_view s)
{
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

int parse_index(std::string_view tok)
{
  tok = trim(tok);
  if (!tok.empty() && (tok.front() == 'w' || tok.front() == 'W')) tok.remove_prefix(1);
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || value < 1)
    throw ParseError("bad weight index '" + std::string(tok) + "' (expected a 1-based integer)");
  return value - 1;
}

SimpleType parse_type_token(std::string_view tok)
{
  try {
    return parse_simple_type(tok);
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidGroup& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

CenterSelector parse_center_selector(std::string_view text)
{
  text = trim(text);
  if (text == "sc" || text == "simply_connected") return CenterSelector::simply_connected();
  if (text == "adj" || text == "adjoint") return CenterSelector::adjoint();
  if (text.starts_with("sub=")) {
    std::vector<int> gens;
    for (auto tok : split(text.substr(4), ',')) gens.push_back(parse_index(tok));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return CenterSelector::subgroup(std::move(gens));
  }
  throw ParseError("bad center selector '" + std::string(text) + "' (expected sc, adj or sub=i,j,...)");
}

GroupSpec parse_group_spec(std::string_view text)
{
  text = trim(text);
  if (text.empty()) throw ParseError("empty group spec");
  GroupSpec spec;
  for (auto part : split(text, 'x')) {
    part = trim(part);
    if (part.empty()) throw ParseError("empty factor in group spec '" + std::string(text) + "'");
    std::string_view selector;
    if (const auto colon = part.find(':'); colon != std::string_view::npos) {
      selector = part.substr(colon + 1);
      part = part.substr(0, colon);
    }
    bool star = false;
    if (!part.empty() && part.back() == '*') {
      star = true;
      part.remove_suffix(1);
    }
    GroupFactor factor{parse_type_token(part), {}};
    if (!selector.empty()) factor.center = parse_center_selector(selector);
    if (star) {
      if (factor.center.kind != CenterKind::adjoint && !selector.empty())
        throw InvalidSelector("'*' (adjoint) conflicts with selector '" + std::string(selector) + "'");
      factor.center = CenterSelector::adjoint();
    }
    spec.factors.push_back(std::move(factor));
  }
  return spec;
}

SimpleGroup::SimpleGroup(GroupFactor factor, ComputeOptions options, Convention convention)
    : factor_(std::move(factor)),
      options_(options),
      rs_(RootSystem::build(factor_.type, convention)),
      table_(build_weight_table(rs_))
{
  const int n = rs_.rank();
  IntMatrix gens;
  for (int i = 0; i < n; ++i) gens.push_back(to_int_row(rs_.simple_root_in_weights(i)));
  switch (factor_.center.kind) {
    case CenterKind::simply_connected:
      break;
    case CenterKind::adjoint:
      for (int k = 0; k < n; ++k) gens.push_back(to_int_row(RatVector::unit(n, k)));
      break;
    case CenterKind::subgroup:
      for (int g : factor_.center.generators) {
        if (std::find(table_.pi.begin(), table_.pi.end(), g) == table_.pi.end())
          throw InvalidSelector("omega_" + std::to_string(g + 1) + " is not a minimal weight of " +
                                factor_.type.name());
        gens.push_back(to_int_row(RatVector::unit(n, g)));
      }
      break;
  }
  unit_basis_ = hermite_basis(std::move(gens));
  if (static_cast<int>(unit_basis_.size()) != n) throw ConstructionError("unit lattice is not of full rank");

  std::vector<RatVector> rows;
  for (const auto& r : unit_basis_) rows.push_back(to_rat_vector(r));
  unit_basis_inv_ = inverse(RatMatrix::from_rows(rows));

  std::vector<RatVector> ambient;
  for (const auto& r : rows) ambient.push_back(rs_.from_weight_coords(r));
  weight_lattice_ = liefix::weight_lattice(rs_);
  root_lattice_ = liefix::root_lattice(rs_);
  unit_lattice_ = LatticeBasis::from_basis(std::move(ambient));

  for (const auto& d : smith_invariants(unit_basis_))
    if (d != 1) invariants_.push_back(d);
}

Integer SimpleGroup::center_order() const
{
  Integer order = 1;
  for (const auto& d : invariants_) order *= d;
  return order;
}

Integer SimpleGroup::fundamental_group_order() const
{
  return (static_cast<Integer>(table_.pi.size()) + 1) / center_order();
}

std::string SimpleGroup::name() const
{
  const std::string base = factor_.type.name();
  if (simply_connected()) return base;
  if (centerless()) return base + "*";
  std::string out = base + ":sub=";
  bool first = true;
  for (int p : table_.pi) {
    if (!in_unit_lattice_w(RatVector::unit(rank(), p))) continue;
    if (!first) out += ',';
    out += std::to_string(p + 1);
    first = false;
  }
  return out;
}

bool SimpleGroup::in_weight_lattice_w(const RatVector& c) const
{
  return std::all_of(c.begin(), c.end(), [](const Rational& x) { return is_integer(x); });
}

bool SimpleGroup::in_root_lattice_w(const RatVector& c) const
{
  const RatVector r = rs_.root_coords_from_weights(c);
  return std::all_of(r.begin(), r.end(), [](const Rational& x) { return is_integer(x); });
}

bool SimpleGroup::in_unit_lattice_w(const RatVector& c) const
{
  const RatVector e = unit_coords_w(c);
  return std::all_of(e.begin(), e.end(), [](const Rational& x) { return is_integer(x); });
}

RatVector SimpleGroup::unit_coords_w(const RatVector& c) const
{
  if (c.size() != static_cast<std::size_t>(rank())) throw InvalidArgument("weight coordinate dimension mismatch");
  return row_times(c, unit_basis_inv_);
}

LatticeBasis unit_lattice(const SimpleGroup& group) { return group.unit_lattice(); }

int deficiency(const SimpleGroup& group, const RatVector& x)
{
  if (!group.roots().in_span(x)) throw InvalidArgument("vector is outside the Cartan subalgebra");
  const RatVector c = group.roots().weight_coords(x);
  if (!group.in_weight_lattice_w(c)) throw InvalidArgument("vector is not a weight: " + to_string(x));
  Integer exponent = 1;
  for (const auto& d : group.quotient_invariants()) exponent = lcm(exponent, d);
  const long bound = exponent.get_si();
  for (long k = 1; k <= bound; ++k)
    if (group.in_unit_lattice_w(Rational(k) * c)) return static_cast<int>(k);
  throw ConstructionError("deficiency exceeds the exponent of the center");
}

OmegaPartition omega_partition(const SimpleGroup& group)
{
  OmegaPartition out;
  for (int k = 0; k < group.rank(); ++k) {
    if (deficiency(group, group.roots().fundamental_weights()[k]) == 1)
      out.omega1.push_back(k);
    else
      out.omega2.push_back(k);
  }
  return out;
}

}  // namespace liefix
