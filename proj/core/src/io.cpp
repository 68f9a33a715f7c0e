#include "chores/io.hpp"

#include <fstream>
#include <stdexcept>

#include "chores/error.hpp"

namespace chores {

using nlohmann::json;

Rational rational_from_json(const json& value, const std::string& where) {
  if (value.is_number_integer()) {
    if (value.is_number_unsigned()) return Rational(Integer(std::to_string(value.get<std::uint64_t>())));
    return Rational(Integer(std::to_string(value.get<std::int64_t>())));
  }
  if (value.is_string()) {
    try {
      return parse_rational(value.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw SchemaError(where + ": " + e.what());
    }
  }
  if (value.is_number_float()) {
    // Floats lose exactness; route through their shortest decimal form.
    try {
      return parse_rational(value.dump());
    } catch (const std::invalid_argument& e) {
      throw SchemaError(where + ": " + e.what());
    }
  }
  throw SchemaError(where + ": expected a rational, got " + std::string(value.type_name()));
}

json rational_to_json(const Rational& value) { return to_string(value); }

namespace {

const json& require(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw SchemaError(std::string("missing key \"") + key + "\"");
  return *it;
}

std::size_t require_count(const json& doc, const char* key) {
  const json& v = require(doc, key);
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
    throw SchemaError(std::string("\"") + key + "\" must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

ChoreInstance instance_from_json(const json& doc) {
  if (!doc.is_object()) throw SchemaError("instance document must be a JSON object");
  const std::size_t n = require_count(doc, "agents");
  const std::size_t m = require_count(doc, "chores");
  const json& ents = require(doc, "entitlements");
  const json& costs = require(doc, "costs");
  if (!ents.is_array() || ents.size() != n) {
    throw SchemaError("\"entitlements\" must be an array of " + std::to_string(n) + " rationals");
  }
  if (!costs.is_array() || costs.size() != n) {
    throw SchemaError("\"costs\" must be an array of " + std::to_string(n) + " rows");
  }
  std::vector<Rational> b;
  b.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    b.push_back(rational_from_json(ents[i], "entitlements[" + std::to_string(i) + "]"));
  }
  std::vector<CostRow> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = costs[i];
    if (!row.is_array() || row.size() != m) {
      throw SchemaError("costs[" + std::to_string(i) + "] must be an array of " +
                        std::to_string(m) + " rationals");
    }
    rows[i].reserve(m);
    for (std::size_t j = 0; j < m; ++j) {
      rows[i].push_back(
          rational_from_json(row[j], "costs[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
    }
  }
  return ChoreInstance::create(std::move(b), std::move(rows));
}

json instance_to_json(const ChoreInstance& instance) {
  json ents = json::array();
  for (const auto& b : instance.entitlements()) ents.push_back(rational_to_json(b));
  json costs = json::array();
  for (const auto& row : instance.costs()) {
    json r = json::array();
    for (const auto& c : row) r.push_back(rational_to_json(c));
    costs.push_back(std::move(r));
  }
  return {{"agents", instance.agents()},
          {"chores", instance.chores()},
          {"entitlements", std::move(ents)},
          {"costs", std::move(costs)}};
}

ChoreInstance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FileError("cannot open " + path.string());
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw FileError(path.string() + ": not valid JSON (" + e.what() + ")");
  }
  return instance_from_json(doc);
}

void save_instance(const ChoreInstance& instance, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw FileError("cannot write " + path.string());
  out << instance_to_json(instance).dump(2) << '\n';
  if (!out) throw FileError("write failed for " + path.string());
}

}  // namespace chores
