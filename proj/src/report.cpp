#include "liefix/report.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "liefix/centralizer.hpp"
#include "liefix/data_files.hpp"
#include "liefix/errors.hpp"

namespace liefix {

namespace {

const std::vector<std::string> kExceptional = {"G2", "F4", "E6", "E6*", "E7", "E7*", "E8"};

std::string wname(int k) { return "w" + std::to_string(k + 1); }

int windex(const std::string& s)
{
  if (s.size() < 2 || s[0] != 'w') throw InvalidArgument("bad weight name " + s);
  return std::stoi(s.substr(1)) - 1;
}

Json wnames(const std::vector<int>& ks)
{
  Json a = Json::array();
  for (int k : ks) a.push_back(wname(k));
  return a;
}

Json points(const std::vector<RatVector>& pts)
{
  Json a = Json::array();
  for (const auto& p : pts) a.push_back(to_json(p));
  return a;
}

std::vector<RatVector> points_from_json(const Json& j)
{
  std::vector<RatVector> out;
  for (const auto& p : j) out.push_back(vector_from_json(p));
  return out;
}

Json optional_string(const std::optional<std::string>& s) { return s ? Json(*s) : Json(nullptr); }

SimpleGroup make_group(const std::string& spec, const ComputeOptions& options)
{
  return SimpleGroup(parse_group_spec(spec).factors.at(0), options);
}

std::vector<std::string> classical_groups()
{
  std::vector<std::string> out;
  for (char fam : std::string("ABCD"))
    for (int n = fam == 'D' ? 3 : 2; n <= 8; ++n) out.push_back(std::string(1, fam) + std::to_string(n));
  return out;
}

// --- diffing -------------------------------------------------------------

nlohmann::json canonical(const Json& j) { return nlohmann::json::parse(j.dump()); }

bool keyed_by_u(const Json& a)
{
  return a.is_array() && !a.empty() && a.front().is_object() && a.front().contains("u");
}

void diff_value(const std::string& path, const Json& expected, const Json& computed, std::vector<std::string>& out);

void diff_keyed(const std::string& path, const Json& expected, const Json& computed, std::vector<std::string>& out)
{
  std::map<std::string, Json> e, c;
  for (const auto& r : expected) e[r.at("u").get<std::string>()] = r;
  if (computed.is_array())
    for (const auto& r : computed) c[r.at("u").get<std::string>()] = r;
  for (const auto& [u, row] : e) {
    if (!c.contains(u)) {
      out.push_back(path + ": missing u=" + u);
      continue;
    }
    diff_value(path + "[u=" + u + "]", row, c[u], out);
  }
  for (const auto& [u, row] : c)
    if (!e.contains(u)) out.push_back(path + ": unexpected u=" + u);
}

void diff_value(const std::string& path, const Json& expected, const Json& computed, std::vector<std::string>& out)
{
  if (keyed_by_u(expected) || keyed_by_u(computed)) {
    diff_keyed(path, expected, computed, out);
    return;
  }
  if (expected.is_object() && computed.is_object()) {
    std::set<std::string> keys;
    for (const auto& [k, v] : expected.items()) keys.insert(k);
    for (const auto& [k, v] : computed.items()) keys.insert(k);
    for (const auto& k : keys) {
      if (!expected.contains(k)) out.push_back(path + "." + k + ": unexpected field");
      else if (!computed.contains(k)) out.push_back(path + "." + k + ": missing field");
      else diff_value(path + "." + k, expected.at(k), computed.at(k), out);
    }
    return;
  }
  if (expected.is_array() && computed.is_array()) {
    // point and weight lists are compared as sets
    std::multiset<std::string> e, c;
    for (const auto& v : expected) e.insert(canonical(v).dump());
    for (const auto& v : computed) c.insert(canonical(v).dump());
    if (e != c) out.push_back(path + ": expected " + canonical(expected).dump() + ", got " + canonical(computed).dump());
    return;
  }
  if (canonical(expected) != canonical(computed))
    out.push_back(path + ": expected " + canonical(expected).dump() + ", got " + canonical(computed).dump());
}

// --- markdown ------------------------------------------------------------

std::string cell(const Json& j)
{
  if (j.is_null()) return "-";
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string s = "(";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + cell(j[i]);
    return s + ")";
  }
  if (j.is_object()) {
    std::string s;
    for (const auto& [k, v] : j.items()) s += (s.empty() ? "" : ", ") + k + "->" + cell(v);
    return s.empty() ? "-" : s;
  }
  return j.dump();
}

void md_table(std::ostringstream& os, const std::vector<std::string>& head, const std::vector<std::vector<std::string>>& rows)
{
  os << '|';
  for (const auto& h : head) os << ' ' << h << " |";
  os << "\n|";
  for (std::size_t i = 0; i < head.size(); ++i) os << "---|";
  os << '\n';
  for (const auto& r : rows) {
    os << '|';
    for (const auto& c : r) os << ' ' << c << " |";
    os << '\n';
  }
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const RatVector& v)
{
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

Rational rational_from_json(const Json& j) { return parse_rational(j.get<std::string>()); }

RatVector vector_from_json(const Json& j)
{
  RatVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v[i] = rational_from_json(j[i]);
  return v;
}

Json to_json(const CentralizerDescriptor& d)
{
  return Json{{"semisimple_type", d.semisimple_type.name()},
              {"torus_rank", d.torus_rank},
              {"component_count", d.component_count},
              {"root_count", d.root_count},
              {"dimension", d.dimension()},
              {"is_central", d.is_central},
              {"display_name", optional_string(d.display_name)}};
}

CentralizerDescriptor descriptor_from_json(const Json& j)
{
  CentralizerDescriptor d;
  d.semisimple_type = CartanType::parse(j.at("semisimple_type").get<std::string>());
  d.torus_rank = j.at("torus_rank").get<int>();
  d.component_count = j.at("component_count").get<int>();
  d.root_count = j.at("root_count").get<int>();
  d.is_central = j.at("is_central").get<bool>();
  if (!j.at("display_name").is_null()) d.display_name = j.at("display_name").get<std::string>();
  return d;
}

Json to_json(const FixDecomposition& fd, const SimpleGroup& group)
{
  Json orbits = Json::array();
  for (const auto& o : fd.orbits)
    orbits.push_back(Json{{"u", to_json(o.u)},
                          {"norm_sq", to_json(o.norm_sq)},
                          {"descriptor", to_json(o.descriptor)},
                          {"covering", wnames(o.covering)},
                          {"orbit_name", optional_string(o.orbit_name)},
                          {"merged", points(o.merged)}});
  return Json{{"group", fd.group},
              {"type", group.factor().type.name()},
              {"rank", group.rank()},
              {"center_order", group.center_order().get_si()},
              {"fundamental_group_order", group.fundamental_group_order().get_si()},
              {"k_prime", points(fd.k_prime)},
              {"k", points(fd.k)},
              {"orbits", std::move(orbits)},
              {"includes_identity", fd.includes_identity}};
}

FixDecomposition fix_decomposition_from_json(const Json& j)
{
  FixDecomposition fd;
  fd.group = j.at("group").get<std::string>();
  fd.k_prime = points_from_json(j.at("k_prime"));
  fd.k = points_from_json(j.at("k"));
  fd.includes_identity = j.at("includes_identity").get<bool>();
  for (const auto& o : j.at("orbits")) {
    FixOrbit orbit;
    orbit.u = vector_from_json(o.at("u"));
    orbit.norm_sq = rational_from_json(o.at("norm_sq"));
    orbit.descriptor = descriptor_from_json(o.at("descriptor"));
    for (const auto& w : o.at("covering")) orbit.covering.push_back(windex(w.get<std::string>()));
    if (!o.at("orbit_name").is_null()) orbit.orbit_name = o.at("orbit_name").get<std::string>();
    orbit.merged = points_from_json(o.at("merged"));
    fd.orbits.push_back(std::move(orbit));
  }
  return fd;
}

Json fixset_document(const std::vector<SimpleGroup>& groups)
{
  std::vector<FixDecomposition> fds;
  Json factors = Json::array();
  std::string name;
  for (const auto& g : groups) {
    fds.push_back(fix_set(g));
    factors.push_back(to_json(fds.back(), g));
    name += (name.empty() ? "" : "x") + g.name();
  }
  const ProductFixDecomposition product = product_fix_set(fds, groups);
  Json orbits = Json::array();
  for (const auto& o : product.orbits)
    orbits.push_back(Json{{"u", points(o.u)},
                          {"norm_sq", to_json(o.norm_sq)},
                          {"descriptor", to_json(o.descriptor)},
                          {"orbit_name", optional_string(o.orbit_name)}});
  return Json{{"schema", "liefix.fixset"},
              {"version", kSchemaVersion},
              {"group", name},
              {"convention", to_string(groups.front().roots().convention())},
              {"factors", std::move(factors)},
              {"orbits", std::move(orbits)},
              {"includes_identity", true}};
}

Json roots_document(const SimpleGroup& group)
{
  const RootSystem& rs = group.roots();
  Json cartan = Json::array();
  for (const auto& row : rs.cartan_matrix()) cartan.push_back(row);
  Json positive = Json::array();
  for (const auto& a : rs.positive_roots()) positive.push_back(to_json(a));
  return Json{{"schema", "liefix.roots"},
              {"version", kSchemaVersion},
              {"group", group.name()},
              {"convention", to_string(rs.convention())},
              {"root_type", rs.root_type().name()},
              {"rank", rs.rank()},
              {"ambient_dim", rs.ambient_dim()},
              {"num_roots", rs.roots().size()},
              {"long_norm_sq", to_json(rs.long_norm_sq())},
              {"short_norm_sq", to_json(rs.short_norm_sq())},
              {"cartan_matrix", std::move(cartan)},
              {"simple_roots", points(rs.simple_roots())},
              {"fundamental_weights", points(rs.fundamental_weights())},
              {"max_short_root", to_json(rs.max_short_root())},
              {"max_short_coeffs", rs.max_short_coeffs()},
              {"positive_roots", std::move(positive)}};
}

Json weights_document(const SimpleGroup& group)
{
  const WeightTable& t = group.weights();
  const OmegaPartition part = omega_partition(group);
  Json retraction = Json::object(), tau = Json::object(), tau_r = Json::object();
  for (const auto& [k, v] : t.retraction) retraction[wname(k)] = wname(v);
  for (const auto& [k, v] : t.tau) tau[wname(k)] = wname(v);
  for (const auto& [k, v] : t.retraction) tau_r[wname(k)] = wname(t.tau.at(v));
  Json invariants = Json::array();
  for (const auto& d : group.quotient_invariants()) invariants.push_back(d.get_si());
  Json basis = Json::array();
  for (const auto& row : group.unit_basis()) basis.push_back(to_json(to_rat_vector(row)));
  return Json{{"schema", "liefix.weights"},
              {"version", kSchemaVersion},
              {"group", group.name()},
              {"center_order", group.center_order().get_si()},
              {"fundamental_group_order", group.fundamental_group_order().get_si()},
              {"quotient_invariants", std::move(invariants)},
              {"unit_basis", std::move(basis)},
              {"omega1", wnames(part.omega1)},
              {"omega2", wnames(part.omega2)},
              {"pi", wnames(t.pi)},
              {"retraction", std::move(retraction)},
              {"tau", std::move(tau)},
              {"tau_r", std::move(tau_r)}};
}

Json oracle_document(const SimpleGroup& group)
{
  const InvolutionOracle oracle = involution_class_oracle(group);
  const FixDecomposition fd = fix_set(group);
  Json classes = Json::array();
  for (const auto& c : oracle.classes)
    classes.push_back(Json{{"mask", c.mask}, {"size", c.size}, {"u", to_json(c.u)}, {"dominant", to_json(c.dominant)}});
  Json doc{{"schema", "liefix.oracle"},
           {"version", kSchemaVersion},
           {"group", group.name()},
           {"cosets", oracle.class_of.size()},
           {"classes", std::move(classes)},
           {"class_count", oracle.classes.size()},
           {"fix_orbits", fd.orbits.size()},
           {"match", oracle.classes.size() == fd.orbits.size() + 1}};
  if (group.simply_connected()) {
    const auto hits = cell_intersection_counts(group);
    doc["cell_counts"] = hits;
    doc["unique_cell_intersection"] = std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
  }
  return doc;
}

TableKind parse_table_kind(const std::string& text)
{
  if (text == "table1") return TableKind::table1;
  if (text == "table2") return TableKind::table2;
  if (text == "ex26") return TableKind::ex26;
  if (text == "ex28") return TableKind::ex28;
  throw ParseError("unknown table '" + text + "' (expected table1, table2, ex26 or ex28)");
}

const char* to_string(TableKind kind)
{
  switch (kind) {
    case TableKind::table1: return "table1";
    case TableKind::table2: return "table2";
    case TableKind::ex26: return "ex26";
    case TableKind::ex28: return "ex28";
  }
  return "?";
}

Json compute_table(TableKind kind, const ComputeOptions& options)
{
  Json rows = Json::array();
  switch (kind) {
    case TableKind::table1:
      for (const auto& spec : kExceptional) {
        const SimpleGroup g = make_group(spec, options);
        Json orbits = Json::array();
        for (const auto& o : fix_set(g).orbits)
          orbits.push_back(Json{{"u", coefficient_key(o.u)},
                                {"type", o.descriptor.semisimple_type.name()},
                                {"torus_rank", o.descriptor.torus_rank},
                                {"components", o.descriptor.component_count},
                                {"centralizer", optional_string(o.descriptor.display_name)},
                                {"orbit", optional_string(o.orbit_name)}});
        rows.push_back(Json{{"group", g.name()}, {"orbits", std::move(orbits)}});
      }
      break;
    case TableKind::table2:
      for (const auto& spec : kExceptional) {
        const SimpleGroup g = make_group(spec, options);
        const auto kprime = candidate_set(g);
        const auto k = voronoi_filter(g, kprime);
        Json kp = Json::array(), kk = Json::array(), merges = Json::array();
        for (const auto& u : kprime) {
          const auto d = descriptor(g, u);
          kp.push_back(Json{{"u", coefficient_key(u)},
                            {"type", d.semisimple_type.name()},
                            {"torus_rank", d.torus_rank},
                            {"centralizer", optional_string(d.display_name)}});
        }
        for (const auto& u : k) kk.push_back(coefficient_key(u));
        for (const auto& cls : orbit_classes(g, k))
          for (std::size_t i = 1; i < cls.members.size(); ++i)
            merges.push_back(Json::array({coefficient_key(cls.rep), coefficient_key(cls.members[i])}));
        rows.push_back(Json{{"group", g.name()}, {"k_prime", std::move(kp)}, {"k", std::move(kk)}, {"merges", std::move(merges)}});
      }
      break;
    case TableKind::ex26:
    case TableKind::ex28: {
      auto specs = classical_groups();
      for (const char* s : {"E6", "E7", "G2", "F4", "E8"}) specs.push_back(s);
      for (const auto& spec : specs) {
        const SimpleGroup g = make_group(spec, options);
        if (kind == TableKind::ex26) {
          const auto part = omega_partition(g);
          rows.push_back(Json{{"group", g.name()}, {"omega1", wnames(part.omega1)}, {"omega2", wnames(part.omega2)}});
        } else {
          Json tr = Json::object();
          for (const auto& [k, v] : g.weights().retraction) tr[wname(k)] = wname(g.weights().tau_r(k));
          rows.push_back(Json{{"group", g.name()}, {"pi", wnames(g.weights().pi)}, {"tau_r", std::move(tr)}});
        }
      }
      break;
    }
  }
  return rows;
}

Json expected_table(TableKind kind)
{
  static const Json expected = Json::parse(data::expected_tables_json);
  return expected.at(to_string(kind));
}

std::vector<std::string> diff_table(TableKind kind, const Json& computed, const Json& expected)
{
  std::vector<std::string> out;
  std::map<std::string, Json> e, c;
  for (const auto& r : expected) e[r.at("group").get<std::string>()] = r;
  for (const auto& r : computed) c[r.at("group").get<std::string>()] = r;
  const std::string base = to_string(kind);
  for (const auto& [g, row] : e) {
    if (!c.contains(g)) out.push_back(base + "/" + g + ": missing row");
    else diff_value(base + "/" + g, row, c[g], out);
  }
  for (const auto& [g, row] : c)
    if (!e.contains(g)) out.push_back(base + "/" + g + ": unexpected row");
  return out;
}

Json tables_document(TableKind kind, bool verify, const ComputeOptions& options)
{
  Json doc{{"schema", "liefix.tables"}, {"version", kSchemaVersion}, {"table", to_string(kind)}};
  doc["rows"] = compute_table(kind, options);
  if (verify) {
    const auto diffs = diff_table(kind, doc["rows"], expected_table(kind));
    doc["verify"] = Json{{"ok", diffs.empty()}, {"diffs", diffs}};
  }
  return doc;
}

std::string to_markdown(const Json& doc)
{
  std::ostringstream os;
  const std::string schema = doc.value("schema", "");
  if (schema == "liefix.fixset") {
    os << "## Fixed set of g -> g^-1 on " << doc["group"].get<std::string>() << "\n\n";
    for (const auto& f : doc["factors"]) {
      os << "### " << f["group"].get<std::string>() << "\n\n";
      os << "K' = " << cell(f["k_prime"]) << "\n\nK = " << cell(f["k"]) << "\n\n";
      std::vector<std::vector<std::string>> rows;
      for (const auto& o : f["orbits"]) {
        const auto& d = o["descriptor"];
        rows.push_back({cell(o["u"]), cell(o["norm_sq"]), cell(d["semisimple_type"]), cell(d["torus_rank"]),
                        cell(d["component_count"]), cell(d["display_name"]), cell(o["orbit_name"]),
                        cell(o["covering"])});
      }
      md_table(os, {"u", "norm^2", "type", "torus", "components", "centralizer", "orbit", "Pi_u"}, rows);
      os << '\n';
    }
    if (doc["factors"].size() > 1) {
      os << "### Product orbits\n\n";
      std::vector<std::vector<std::string>> rows;
      for (const auto& o : doc["orbits"])
        rows.push_back({cell(o["u"]), cell(o["norm_sq"]), cell(o["descriptor"]["semisimple_type"]),
                        cell(o["descriptor"]["torus_rank"]), cell(o["descriptor"]["component_count"]),
                        cell(o["orbit_name"])});
      md_table(os, {"u", "norm^2", "type", "torus", "components", "orbit"}, rows);
    }
  } else if (schema == "liefix.tables") {
    os << "## " << doc["table"].get<std::string>() << "\n\n";
    const std::string table = doc["table"];
    std::vector<std::vector<std::string>> rows;
    if (table == "table1") {
      for (const auto& r : doc["rows"])
        for (const auto& o : r["orbits"])
          rows.push_back({cell(r["group"]), cell(o["u"]), cell(o["type"]), cell(o["torus_rank"]), cell(o["components"]),
                          cell(o["orbit"])});
      md_table(os, {"G", "u", "type", "torus", "components", "orbit"}, rows);
    } else if (table == "table2") {
      for (const auto& r : doc["rows"])
        for (const auto& o : r["k_prime"])
          rows.push_back({cell(r["group"]), cell(o["u"]), cell(o["type"]), cell(o["torus_rank"]), cell(o["centralizer"])});
      md_table(os, {"G", "u in K'", "type", "torus", "centralizer"}, rows);
    } else if (table == "ex26") {
      for (const auto& r : doc["rows"]) rows.push_back({cell(r["group"]), cell(r["omega1"]), cell(r["omega2"])});
      md_table(os, {"G", "Omega_1", "Omega_2"}, rows);
    } else {
      for (const auto& r : doc["rows"]) rows.push_back({cell(r["group"]), cell(r["pi"]), cell(r["tau_r"])});
      md_table(os, {"G", "Pi_G", "tau o r"}, rows);
    }
    if (doc.contains("verify")) {
      os << "\nverify: " << (doc["verify"]["ok"].get<bool>() ? "ok" : "MISMATCH") << '\n';
      for (const auto& d : doc["verify"]["diffs"]) os << "- " << d.get<std::string>() << '\n';
    }
  } else if (schema == "liefix.oracle") {
    os << "## Order-two classes of " << doc["group"].get<std::string>() << "\n\n";
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : doc["classes"])
      rows.push_back({cell(c["mask"]), cell(c["size"]), cell(c["u"]), cell(c["dominant"])});
    md_table(os, {"mask", "cosets", "u", "dominant"}, rows);
    os << "\nclasses: " << doc["class_count"].dump() << ", fixed-set orbits + 1: "
       << doc["fix_orbits"].get<std::size_t>() + 1 << ", " << (doc["match"].get<bool>() ? "match" : "MISMATCH") << '\n';
  } else {
    std::vector<std::vector<std::string>> rows;
    for (const auto& [k, v] : doc.items())
      if (k != "schema" && k != "version") rows.push_back({k, cell(v)});
    md_table(os, {"field", "value"}, rows);
  }
  return os.str();
}

}  // namespace liefix
