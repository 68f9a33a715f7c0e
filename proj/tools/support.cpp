#include "support.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "chores/error.hpp"
#include "chores/io.hpp"
#include "chores/ridge.hpp"

namespace chorepick_cli {

using chores::PickingOrder;
using chores::Rational;

json report(const std::string& command) {
  return {{"schema_version", kSchemaVersion}, {"command", command}};
}

json rationals(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(chores::rational_to_json(v));
  return out;
}

json matrix(const std::vector<std::vector<Rational>>& rows) {
  json out = json::array();
  for (const auto& row : rows) out.push_back(rationals(row));
  return out;
}

json one_based(const std::vector<std::size_t>& ids) {
  json out = json::array();
  for (auto id : ids) out.push_back(id + 1);
  return out;
}

json optional_rational(const std::optional<Rational>& value) {
  return value ? chores::rational_to_json(*value) : json(nullptr);
}

Rational rational_flag(const std::string& text, const std::string& flag) {
  try {
    return chores::parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(flag + ": " + e.what());
  }
}

std::vector<Rational> rational_list(const std::vector<std::string>& items, const std::string& flag) {
  std::vector<Rational> out;
  out.reserve(items.size());
  for (const auto& item : items) out.push_back(rational_flag(item, flag));
  return out;
}

namespace {

bool is_stock(const std::string& name) {
  return name == "n2" || name == "n3" || name == "n4" || name == "super8";
}

PickingOrder from_text(const std::string& text) {
  const auto open = text.find('(');
  if (open == std::string::npos) return PickingOrder::finite(chores::parse_agent_string(text));
  const auto close = text.find(')', open);
  if (close == std::string::npos) throw std::invalid_argument("unbalanced '(' in order text");
  return PickingOrder::periodic(chores::parse_agent_string(text.substr(0, open)),
                                chores::parse_agent_string(text.substr(open + 1, close - open - 1)));
}

}  // namespace

NamedOrder resolve_order(const std::string& source) {
  if (is_stock(source)) return {source, chores::fixed_order(source)};
  std::ifstream in(source);
  if (!in) throw chores::FileError("cannot open order file " + source);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
    text.pop_back();
  }
  if (!text.empty() && text.front() == '{') {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::parse_error& e) {
      throw chores::FileError("order file " + source + " is not valid JSON: " + e.what());
    }
    if (!doc.contains("prefix") || !doc["prefix"].is_string()) {
      throw chores::SchemaError("order file needs a string \"prefix\"");
    }
    auto prefix = chores::parse_agent_string(doc["prefix"].get<std::string>());
    if (doc.contains("cycle")) {
      if (!doc["cycle"].is_string()) throw chores::SchemaError("\"cycle\" must be a string");
      return {source, PickingOrder::periodic(std::move(prefix),
                                           chores::parse_agent_string(doc["cycle"].get<std::string>()))};
    }
    return {source, PickingOrder::finite(std::move(prefix))};
  }
  return {source, from_text(text)};
}

json order_json(const PickingOrder& order) {
  json out{{"prefix", chores::agent_string(order.prefix())}};
  out["cycle"] = order.is_periodic() ? json(chores::agent_string(order.cycle())) : json(nullptr);
  return out;
}

std::size_t order_agents(const NamedOrder& named) {
  if (is_stock(named.source)) return chores::fixed_order_agents(named.source);
  return named.order.agent_bound();
}

}  // namespace chorepick_cli
