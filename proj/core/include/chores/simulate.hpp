#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "chores/model.hpp"

namespace chores {

/// Each round the scheduled picker removes her cheapest remaining chore
/// (lowest chore index on ties). Throws std::out_of_range for a picker id
/// outside the instance and std::invalid_argument on a length mismatch.
Allocation greedy_play(const PickingSequence& sequence, const ChoreInstance& instance);

/// Risk-averse guarantee of a set of zero-based picking rounds: sort the row
/// nondecreasing and add the entries at those ranks.
Rational guaranteed_disvalue(const CostRow& costs, const std::vector<std::size_t>& rounds);

/// Normalized benchmark for the worst-case program. Valuations v (nonincreasing,
/// nonnegative, length m) satisfy v_1 <= 1, sum(v) <= budget, and at the pair
/// index k (one-based) either v_{k+1} <= 1/2 or, when `exact_pair` is set,
/// v_k + v_{k+1} <= 1.
struct ShareNormalization {
  Rational budget;
  std::size_t pair_index = 0;
  bool exact_pair = false;

  /// Chore share of an equal-entitlement agent among n: budget n, v_{n+1} <= 1/2.
  static ShareNormalization equal(std::size_t n);
  /// Entitlement b: budget 1/b, v_{k+1} <= 1/2 for k = floor(1/b).
  static ShareNormalization entitled(const Rational& b);
};

struct WorstCase {
  Rational ratio;
  /// A maximizing valuation, one entry per allocation round.
  CostRow valuation;
};

/// Largest total disvalue of the chores at zero-based allocation rounds
/// `positions` over all normalized valuations on m chores. Solved exactly as a
/// linear program over the successive differences of v.
WorstCase worst_case_ratio(const std::vector<std::size_t>& positions, std::size_t m,
                           const ShareNormalization& norm);

/// Equal-entitlement case: budget n, v_{n+1} <= 1/2.
WorstCase worst_case_ratio_cs(const std::vector<std::size_t>& positions, std::size_t n,
                              std::size_t m);

struct AgentEvaluation {
  std::vector<std::size_t> positions;
  WorstCase worst;
};

struct OrderEvaluation {
  Rational ratio;
  std::vector<AgentEvaluation> agents;
};

/// Max over the n agents of worst_case_ratio_cs on the first m rounds of the order.
OrderEvaluation evaluate_order(const PickingOrder& order, std::size_t n, std::size_t m);

/// Step valuation under which some agent of a non-ridge order pays at least
/// 3/2 times her maximin share.
struct RidgeWitness {
  enum class Case { kTwoEarlyPicks, kThreePicks, kEarlyReturn };
  Case kind;
  AgentId agent;
  /// One cost per allocation round 1..2n; later rounds cost zero.
  CostRow valuation;
  /// Agent's cost on the first 2n rounds under `valuation`.
  Rational agent_cost;
};

/// Nothing when the first 2n rounds form a ridge up to relabeling (the agent
/// taking round i also takes round 2n-i+1 and the first n are distinct).
/// Throws std::invalid_argument when the order cannot cover 2n rounds.
std::optional<RidgeWitness> nonridge_witness(const PickingOrder& order, std::size_t n);

}  // namespace chores
