#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "chores/rational.hpp"

namespace chores {

/// Zero-based agent (or picker label) index. Textual formats are one-based.
using AgentId = std::size_t;
/// Zero-based chore index.
using ChoreId = std::size_t;

/// n agents, m chores, exact entitlements summing to one, and a nonnegative
/// cost matrix. Immutable once created.
class ChoreInstance {
 public:
  /// Validates shape, Σb = 1, b > 0 and c >= 0; throws InstanceError.
  static ChoreInstance create(std::vector<Rational> entitlements, std::vector<CostRow> costs);
  /// All agents get entitlement 1/n.
  static ChoreInstance with_equal_entitlements(std::vector<CostRow> costs);

  std::size_t agents() const { return entitlements_.size(); }
  std::size_t chores() const { return chores_; }

  const std::vector<Rational>& entitlements() const { return entitlements_; }
  const Rational& entitlement(AgentId i) const { return entitlements_.at(i); }
  const std::vector<CostRow>& costs() const { return costs_; }
  const CostRow& costs(AgentId i) const { return costs_.at(i); }
  const Rational& cost(AgentId i, ChoreId j) const { return costs_.at(i).at(j); }

  /// True iff every agent's row is nonincreasing in chore index.
  bool is_ido() const { return is_ido_; }

  friend bool operator==(const ChoreInstance&, const ChoreInstance&) = default;

 private:
  ChoreInstance() = default;

  std::vector<Rational> entitlements_;
  std::vector<CostRow> costs_;
  std::size_t chores_ = 0;
  bool is_ido_ = true;
};

/// A surrogate IDO instance together with, for every agent, the map from
/// surrogate chore position to the original chore it was sorted from.
struct IdoReduction {
  ChoreInstance instance;
  std::vector<std::vector<ChoreId>> original_chore;
};

/// Sorts every row nonincreasing. Ties are broken by a shared reference
/// ordering of chores: decreasing total cost across agents, then index.
IdoReduction to_ido(const ChoreInstance& instance);

/// Allocation-order view: round r hands chore e_r to `at(r)`. Either a finite
/// list or prefix + cycle repeated forever.
class PickingOrder {
 public:
  static PickingOrder finite(std::vector<AgentId> assignment);
  static PickingOrder periodic(std::vector<AgentId> prefix, std::vector<AgentId> cycle);

  bool is_periodic() const { return !cycle_.empty(); }
  const std::vector<AgentId>& prefix() const { return prefix_; }
  const std::vector<AgentId>& cycle() const { return cycle_; }

  /// Length of a finite order; the prefix length of a periodic one.
  std::size_t defined_length() const { return prefix_.size(); }
  /// False only for a finite order shorter than m.
  bool covers(std::size_t m) const { return is_periodic() || m <= prefix_.size(); }

  /// Picker of zero-based round r.
  AgentId at(std::size_t round) const;
  /// First m rounds. Throws std::out_of_range for a finite order shorter than m.
  std::vector<AgentId> expand(std::size_t m) const;
  /// One past the largest agent id used.
  std::size_t agent_bound() const;

  friend bool operator==(const PickingOrder&, const PickingOrder&) = default;

 private:
  std::vector<AgentId> prefix_;
  std::vector<AgentId> cycle_;
};

/// Picking-round view: in round r the picker `pickers[r]` takes her preferred
/// remaining chore.
struct PickingSequence {
  std::vector<AgentId> pickers;

  std::size_t size() const { return pickers.size(); }
  friend bool operator==(const PickingSequence&, const PickingSequence&) = default;
};

/// Round reversal: order round r is sequence round m - r + 1.
PickingSequence to_sequence(const PickingOrder& order, std::size_t m);
PickingSequence to_sequence(const std::vector<AgentId>& order_rounds);
PickingOrder to_order(const PickingSequence& sequence);

/// Zero-based positions at which `agent` appears.
std::vector<std::size_t> positions_of(const std::vector<AgentId>& rounds, AgentId agent);

/// Disjoint bundles of chore ids, one per agent.
struct Allocation {
  std::vector<std::vector<ChoreId>> bundles;

  /// True iff the bundles partition {0, ..., m-1}.
  bool is_partition(std::size_t m) const;
  Rational cost(AgentId agent, const CostRow& costs) const;

  friend bool operator==(const Allocation&, const Allocation&) = default;
};

/// Allocation {e_r : order[r] = i} of the first m rounds of an order.
Allocation allocation_from_order(const std::vector<AgentId>& order_rounds, std::size_t agents);

/// "1221" -> {0,1,1,0}; "abch" -> {0,1,2,7}. Digits 1-9 and letters a-z.
std::vector<AgentId> parse_agent_string(std::string_view text);
/// Inverse of parse_agent_string when every id is below 9; otherwise a
/// space-separated list of one-based ids.
std::string agent_string(const std::vector<AgentId>& ids);

}  // namespace chores
