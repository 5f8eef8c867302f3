#pragma once

// Carrier catalog and file I/O.  Builtins cover the small groups and Clifford
// semigroups used throughout the test suite; files are JSON in one of three
// shapes (carrier table, strong-semilattice spec, brace) plus operator and
// solution documents.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rotabrace/weak_brace.hpp"
#include "rotabrace/ybe.hpp"

namespace rotabrace {

using Json = nlohmann::ordered_json;

enum class EntryKind { Group, Clifford, Spec };

const char* to_string(EntryKind k);

struct CatalogEntry {
  std::string name;
  EntryKind kind = EntryKind::Clifford;
  std::string provenance;  // "builtin" or the source file path
  CarrierPtr carrier;
  /// Populated for kind Spec: the spec plus the vertex-major layout.
  std::optional<SemilatticeCarrier> semilattice;
};

/// Builtin names in canonical catalog order.
const std::vector<std::string>& builtin_names();

/// Z2, Z3, Z4, V4, Z6, S3, CS3, SL2, CHAIN-Z2Z2 (case-insensitive, "/" ignored).
CatalogEntry load_builtin(const std::string& name);

/// Resolves "builtin:NAME", an existing file path, a name found in one of the
/// colon-separated directories of $ROTABRACE_CATALOG, or a bare builtin name,
/// in that order.  Throws ParseError when nothing matches or the file is
/// malformed; verification errors propagate from the builders.
CatalogEntry load_carrier(const std::string& ref);

// ---- JSON documents -----------------------------------------------------------

Json carrier_to_json(const std::string& name, const CayleyTable& table);
Json spec_to_json(const std::string& name, const StrongSemilatticeSpec& spec);
CatalogEntry entry_from_json(const Json& j, const std::string& provenance);

struct OperatorFile {
  std::string carrier;
  ElementMap images;
};
Json operator_to_json(const std::string& carrier, const ElementMap& images);
OperatorFile operator_file_from_json(const Json& j);

struct BraceFile {
  std::string name;
  DualWeakBrace brace;
};
Json brace_to_json(const std::string& name, const DualWeakBrace& B);
BraceFile brace_file_from_json(const Json& j);

Json solution_to_json(const SolutionMap& r);
SolutionMap solution_from_json(const Json& j);

Json load_json_file(const std::string& path);

}  // namespace rotabrace
