// liefix: fixed sets of g -> g^-1 on compact Lie groups.
//
// Exit codes: 0 success, 1 verification mismatch, 2 parse error,
// 3 invalid configuration (selector, caps).

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "liefix/errors.hpp"
#include "liefix/report.hpp"

namespace {

using namespace liefix;

struct Common {
  std::string format = "json";
  std::size_t orbit_cap = ComputeOptions{}.orbit_cap;
  bool serial = false;

  ComputeOptions options() const
  {
    ComputeOptions o;
    o.orbit_cap = orbit_cap;
    o.exec = serial ? Exec::serial : Exec::parallel;
    return o;
  }
};

void add_common(CLI::App* app, Common& c)
{
  app->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"json", "markdown"}));
  app->add_option("--orbit-cap", c.orbit_cap, "Largest Weyl orbit to enumerate")->check(CLI::PositiveNumber);
  app->add_flag("--serial", c.serial, "Use the serial reference kernels");
}

void emit(const Json& doc, const Common& c)
{
  if (c.format == "markdown")
    std::cout << to_markdown(doc);
  else
    std::cout << doc.dump(2) << '\n';
}

std::vector<SimpleGroup> build_groups(const std::string& spec_text, const std::string& center, const Common& c)
{
  GroupSpec spec = parse_group_spec(spec_text);
  if (!center.empty()) {
    const CenterSelector sel = parse_center_selector(center);
    std::size_t start = 0;
    for (auto& f : spec.factors) {
      const std::size_t end = spec_text.find('x', start);
      const std::string part = spec_text.substr(start, end == std::string::npos ? std::string::npos : end - start);
      start = end + 1;
      // an explicit selector in the spec must agree with --center
      if (part.find_first_of("*:") != std::string::npos && !(f.center == sel))
        throw InvalidSelector("--center " + center + " conflicts with the selector in '" + spec_text + "'");
      f.center = sel;
    }
  }
  std::vector<SimpleGroup> groups;
  for (const auto& f : spec.factors) groups.emplace_back(f, c.options());
  return groups;
}

SimpleGroup single_group(const std::string& spec_text, const std::string& center, const Common& c)
{
  auto groups = build_groups(spec_text, center, c);
  if (groups.size() != 1) throw ParseError("this command needs a simple group, got '" + spec_text + "'");
  return std::move(groups.front());
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Exact fixed sets of the inverse map on compact Lie groups"};
  app.require_subcommand(1);

  Common common;
  std::string group_text, center, table_name;
  bool verify = false;

  auto* fixset = app.add_subcommand("fixset", "Orbit decomposition of the fixed set");
  fixset->add_option("group", group_text, "Group spec, e.g. E7, E7*, D6:sub=6, G2xE8")->required();
  fixset->add_option("--center", center, "Center selector: sc, adj or sub=i,j");
  add_common(fixset, common);

  auto* tables = app.add_subcommand("tables", "Recompute a reference table");
  tables->add_option("which", table_name, "table1, table2, ex26 or ex28")
      ->required()
      ->check(CLI::IsMember({"table1", "table2", "ex26", "ex28"}));
  tables->add_flag("--verify", verify, "Compare against the bundled expectations");
  add_common(tables, common);

  auto* oracle = app.add_subcommand("oracle", "Brute-force count of order-two classes");
  oracle->add_option("group", group_text, "Simple group spec")->required();
  oracle->add_option("--center", center, "Center selector");
  add_common(oracle, common);

  auto* roots = app.add_subcommand("roots", "Root system data");
  roots->add_option("group", group_text, "Simple group spec")->required();
  add_common(roots, common);

  auto* weights = app.add_subcommand("weights", "Lattices, minimal weights, r and tau");
  weights->add_option("group", group_text, "Simple group spec")->required();
  weights->add_option("--center", center, "Center selector");
  add_common(weights, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (fixset->parsed()) {
      emit(fixset_document(build_groups(group_text, center, common)), common);
      return 0;
    }
    if (tables->parsed()) {
      const Json doc = tables_document(parse_table_kind(table_name), verify, common.options());
      emit(doc, common);
      if (verify && !doc["verify"]["ok"].get<bool>()) return 1;
      return 0;
    }
    if (oracle->parsed()) {
      const Json doc = oracle_document(single_group(group_text, center, common));
      emit(doc, common);
      return doc["match"].get<bool>() ? 0 : 1;
    }
    if (roots->parsed()) {
      emit(roots_document(single_group(group_text, "", common)), common);
      return 0;
    }
    if (weights->parsed()) {
      emit(weights_document(single_group(group_text, center, common)), common);
      return 0;
    }
  } catch (const InvalidSelector& e) {
    std::cerr << "liefix: invalid selector: " << e.what() << '\n';
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "liefix: parse error: " << e.what() << '\n';
    return 2;
  } catch (const CapExceeded& e) {
    std::cerr << "liefix: " << e.what() << '\n';
    return 3;
  } catch (const Error& e) {
    std::cerr << "liefix: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
