#include "chores/model.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "chores/error.hpp"

namespace chores {

ChoreInstance ChoreInstance::create(std::vector<Rational> entitlements,
                                    std::vector<CostRow> costs) {
  using Kind = InstanceError::Kind;
  if (entitlements.empty()) {
    throw InstanceError(Kind::kShape, "instance needs at least one agent");
  }
  if (costs.size() != entitlements.size()) {
    throw InstanceError(Kind::kShape, "cost matrix has " + std::to_string(costs.size()) +
                                          " rows for " + std::to_string(entitlements.size()) +
                                          " agents");
  }
  const std::size_t m = costs.front().size();
  for (std::size_t i = 0; i < costs.size(); ++i) {
    if (costs[i].size() != m) {
      throw InstanceError(Kind::kShape, "cost row " + std::to_string(i + 1) + " has " +
                                            std::to_string(costs[i].size()) + " entries, expected " +
                                            std::to_string(m));
    }
  }
  Rational total = 0;
  for (std::size_t i = 0; i < entitlements.size(); ++i) {
    if (entitlements[i] <= 0) {
      throw InstanceError(Kind::kNonPositiveEntitlement,
                          "entitlement of agent " + std::to_string(i + 1) + " is " +
                              to_string(entitlements[i]) + ", must be positive");
    }
    total += entitlements[i];
  }
  if (total != 1) {
    throw InstanceError(Kind::kEntitlementSum, "entitlements sum to " + to_string(total));
  }
  bool ido = true;
  for (std::size_t i = 0; i < costs.size(); ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (costs[i][j] < 0) {
        throw InstanceError(Kind::kNegativeCost, "cost of chore " + std::to_string(j + 1) +
                                                     " for agent " + std::to_string(i + 1) +
                                                     " is negative (" + to_string(costs[i][j]) +
                                                     ")");
      }
      if (j > 0 && costs[i][j - 1] < costs[i][j]) ido = false;
    }
  }

  ChoreInstance out;
  out.entitlements_ = std::move(entitlements);
  out.costs_ = std::move(costs);
  out.chores_ = m;
  out.is_ido_ = ido;
  return out;
}

ChoreInstance ChoreInstance::with_equal_entitlements(std::vector<CostRow> costs) {
  const std::size_t n = costs.size();
  if (n == 0) throw InstanceError(InstanceError::Kind::kShape, "instance needs at least one agent");
  std::vector<Rational> b(n, ratio(1, static_cast<long>(n)));
  return create(std::move(b), std::move(costs));
}

IdoReduction to_ido(const ChoreInstance& instance) {
  const std::size_t n = instance.agents();
  const std::size_t m = instance.chores();

  // Shared reference ordering: heavier total cost first, then lower index.
  std::vector<Rational> column_total(m, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) column_total[j] += instance.cost(i, j);
  }
  std::vector<ChoreId> reference(m);
  std::iota(reference.begin(), reference.end(), ChoreId{0});
  std::stable_sort(reference.begin(), reference.end(), [&](ChoreId a, ChoreId b) {
    return column_total[a] > column_total[b];
  });
  std::vector<std::size_t> rank(m);
  for (std::size_t r = 0; r < m; ++r) rank[reference[r]] = r;

  std::vector<CostRow> rows(n);
  std::vector<std::vector<ChoreId>> original(n);
  for (std::size_t i = 0; i < n; ++i) {
    const CostRow& row = instance.costs(i);
    std::vector<ChoreId> perm(m);
    std::iota(perm.begin(), perm.end(), ChoreId{0});
    std::sort(perm.begin(), perm.end(), [&](ChoreId a, ChoreId b) {
      if (row[a] != row[b]) return row[a] > row[b];
      return rank[a] < rank[b];
    });
    rows[i].reserve(m);
    for (ChoreId j : perm) rows[i].push_back(row[j]);
    original[i] = std::move(perm);
  }
  return {ChoreInstance::create(instance.entitlements(), std::move(rows)), std::move(original)};
}

PickingOrder PickingOrder::finite(std::vector<AgentId> assignment) {
  PickingOrder order;
  order.prefix_ = std::move(assignment);
  return order;
}

PickingOrder PickingOrder::periodic(std::vector<AgentId> prefix, std::vector<AgentId> cycle) {
  if (cycle.empty()) throw std::invalid_argument("periodic order needs a nonempty cycle");
  PickingOrder order;
  order.prefix_ = std::move(prefix);
  order.cycle_ = std::move(cycle);
  return order;
}

AgentId PickingOrder::at(std::size_t round) const {
  if (round < prefix_.size()) return prefix_[round];
  if (cycle_.empty()) throw std::out_of_range("round beyond finite picking order");
  return cycle_[(round - prefix_.size()) % cycle_.size()];
}

std::vector<AgentId> PickingOrder::expand(std::size_t m) const {
  if (!covers(m)) {
    throw std::out_of_range("finite picking order of length " + std::to_string(prefix_.size()) +
                            " cannot be expanded to " + std::to_string(m) + " rounds");
  }
  std::vector<AgentId> out;
  out.reserve(m);
  for (std::size_t r = 0; r < m; ++r) out.push_back(at(r));
  return out;
}

std::size_t PickingOrder::agent_bound() const {
  std::size_t bound = 0;
  for (AgentId a : prefix_) bound = std::max(bound, a + 1);
  for (AgentId a : cycle_) bound = std::max(bound, a + 1);
  return bound;
}

PickingSequence to_sequence(const std::vector<AgentId>& order_rounds) {
  return {std::vector<AgentId>(order_rounds.rbegin(), order_rounds.rend())};
}

PickingSequence to_sequence(const PickingOrder& order, std::size_t m) {
  return to_sequence(order.expand(m));
}

PickingOrder to_order(const PickingSequence& sequence) {
  return PickingOrder::finite({sequence.pickers.rbegin(), sequence.pickers.rend()});
}

std::vector<std::size_t> positions_of(const std::vector<AgentId>& rounds, AgentId agent) {
  std::vector<std::size_t> out;
  for (std::size_t r = 0; r < rounds.size(); ++r) {
    if (rounds[r] == agent) out.push_back(r);
  }
  return out;
}

bool Allocation::is_partition(std::size_t m) const {
  std::vector<bool> seen(m, false);
  std::size_t count = 0;
  for (const auto& bundle : bundles) {
    for (ChoreId j : bundle) {
      if (j >= m || seen[j]) return false;
      seen[j] = true;
      ++count;
    }
  }
  return count == m;
}

Rational Allocation::cost(AgentId agent, const CostRow& costs) const {
  Rational total = 0;
  for (ChoreId j : bundles.at(agent)) total += costs.at(j);
  return total;
}

Allocation allocation_from_order(const std::vector<AgentId>& order_rounds, std::size_t agents) {
  Allocation out;
  out.bundles.resize(agents);
  for (std::size_t r = 0; r < order_rounds.size(); ++r) {
    out.bundles.at(order_rounds[r]).push_back(r);
  }
  return out;
}

std::vector<AgentId> parse_agent_string(std::string_view text) {
  std::vector<AgentId> out;
  for (char ch : text) {
    if (ch == ' ' || ch == ',' || ch == '(' || ch == ')' || ch == '*') continue;
    if (ch >= '1' && ch <= '9') {
      out.push_back(static_cast<AgentId>(ch - '1'));
    } else if (ch >= 'a' && ch <= 'z') {
      out.push_back(static_cast<AgentId>(ch - 'a'));
    } else {
      throw std::invalid_argument(std::string("unexpected character '") + ch +
                                  "' in agent string");
    }
  }
  return out;
}

std::string agent_string(const std::vector<AgentId>& ids) {
  const bool compact = std::all_of(ids.begin(), ids.end(), [](AgentId a) { return a < 9; });
  std::string out;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    if (compact) {
      out.push_back(static_cast<char>('1' + ids[k]));
    } else {
      if (k > 0) out.push_back(' ');
      out += std::to_string(ids[k] + 1);
    }
  }
  return out;
}

}  // namespace chores
