// SPDX-License-Identifier: Apache-2.0
#pragma once

// JSON and CSV persistence. Every load rebuilds the objects through their
// validating constructors, so structural invariants are rechecked.

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "aoa/design.hpp"
#include "json.hpp"

namespace aoa {

using Json = nlohmann::ordered_json;

/// Anything that can live in a file. An "oa" with a "partition" loads as a
/// ResolvableOA.
using Object = std::variant<OrthogonalArray, ResolvableOA, AugmentedOA, DifferenceMatrix, GeneratorMatrix>;

std::string_view kind_name(const Object& obj) noexcept;

Json field_to_json(const FieldSpec& spec);
Json group_to_json(const GroupSpec& g);
Json to_json(const Object& obj);

FieldSpec field_from_json(const Json& j, const std::string& path = "field");
GroupSpec group_from_json(const Json& j, const std::string& path = "group");
/// SchemaViolation (with a field path) on missing keys, wrong types or
/// out-of-range symbols; InvariantViolation on shape or count errors.
Object from_json(const Json& j);

/// Deterministic text form: two-space indentation with one matrix row per line.
std::string dump(const Object& obj);
Object parse(std::string_view text);

/// IoError when the file cannot be written or read. load accepts both the JSON
/// form and the CSV form below, telling them apart by a leading '#'.
void save(const Object& obj, const std::filesystem::path& path);
Object load(const std::filesystem::path& path);

/// Header `# kind v t s k` (absent values as "-"), then one comma-separated row
/// per line. Difference matrices append the adder as a last column.
std::string to_csv(const Object& obj);
/// Reads to_csv output back. The header carries no group or modulus, so a
/// difference matrix is read over Z_n and a generator over the canonical GF(q).
Object from_csv(std::string_view text);

}  // namespace aoa
