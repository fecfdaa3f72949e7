#pragma once

// JSON and markdown renderings of library results, and the recomputed
// reference tables with their comparison against the bundled expectations.
//
// Rationals are written as "p/q" strings; points as arrays of such strings
// in fundamental-weight coordinates.

#include <string>
#include <vector>

#include <json.hpp>

#include "liefix/fixset.hpp"
#include "liefix/group.hpp"
#include "liefix/weyl.hpp"

namespace liefix {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

Json to_json(const Rational& q);
Json to_json(const RatVector& v);
Rational rational_from_json(const Json& j);
RatVector vector_from_json(const Json& j);

Json to_json(const CentralizerDescriptor& d);
CentralizerDescriptor descriptor_from_json(const Json& j);

Json to_json(const FixDecomposition& fd, const SimpleGroup& group);
FixDecomposition fix_decomposition_from_json(const Json& j);

/// Full "liefix.fixset" document for a (possibly product) group.
Json fixset_document(const std::vector<SimpleGroup>& groups);
Json roots_document(const SimpleGroup& group);
Json weights_document(const SimpleGroup& group);
Json oracle_document(const SimpleGroup& group);

enum class TableKind { table1, table2, ex26, ex28 };
TableKind parse_table_kind(const std::string& text);
const char* to_string(TableKind kind);

/// Recomputed rows in the layout of data/expected_tables.json.
Json compute_table(TableKind kind, const ComputeOptions& options = {});
Json expected_table(TableKind kind);
/// Human-readable differences; empty when the tables agree.
std::vector<std::string> diff_table(TableKind kind, const Json& computed, const Json& expected);

Json tables_document(TableKind kind, bool verify, const ComputeOptions& options = {});

/// Markdown rendering of any document produced above.
std::string to_markdown(const Json& document);

}  // namespace liefix
