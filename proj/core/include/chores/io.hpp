#pragma once

#include <nlohmann/json.hpp>

#include <filesystem>
#include <string>

#include "chores/model.hpp"

namespace chores {

/// Instance document:
///   {"agents": n, "chores": m, "entitlements": ["p/q", ...], "costs": [[...], ...]}
/// Rationals may be JSON strings ("3/7", "0.125") or JSON integers.
/// Throws SchemaError for shape/type problems and InstanceError for
/// invariant violations.
ChoreInstance instance_from_json(const nlohmann::json& doc);
nlohmann::json instance_to_json(const ChoreInstance& instance);

/// Throws FileError when the file is missing or is not valid JSON.
ChoreInstance load_instance(const std::filesystem::path& path);
void save_instance(const ChoreInstance& instance, const std::filesystem::path& path);

/// JSON number or string to an exact rational; throws SchemaError.
Rational rational_from_json(const nlohmann::json& value, const std::string& where);
nlohmann::json rational_to_json(const Rational& value);

}  // namespace chores
