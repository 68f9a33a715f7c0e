#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "chores/model.hpp"
#include "chores/rational.hpp"

namespace chorepick_cli {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

// Exit codes shared by every subcommand.
enum Exit : int {
  kOk = 0,
  kGuaranteeViolation = 1,
  kUsage = 2,
  kFile = 3,
  kSizeGuard = 4,
  kInstance = 5,
  kComputation = 6,
};

json report(const std::string& command);

json rationals(const std::vector<chores::Rational>& values);
json matrix(const std::vector<std::vector<chores::Rational>>& rows);
json one_based(const std::vector<std::size_t>& ids);
json optional_rational(const std::optional<chores::Rational>& value);

// "p/q" or decimal text; throws std::invalid_argument naming the flag.
chores::Rational rational_flag(const std::string& text, const std::string& flag);
std::vector<chores::Rational> rational_list(const std::vector<std::string>& items,
                                            const std::string& flag);

struct NamedOrder {
  std::string source;  // stock name or file path
  chores::PickingOrder order;
};

// Stock names (n2, n3, n4, super8) or a file. Files hold either a JSON object
// {"prefix": "...", "cycle": "..."} or a line such as "1221(221)" whose
// parenthesized tail repeats forever.
NamedOrder resolve_order(const std::string& source);

json order_json(const chores::PickingOrder& order);

// Agents an order mentions: stock orders know theirs, otherwise the largest label.
std::size_t order_agents(const NamedOrder& named);

}  // namespace chorepick_cli
