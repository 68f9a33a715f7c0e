#pragma once

#include <cstddef>
#include <vector>

#include "chores/model.hpp"

namespace chores {

struct AlgChoresRound {
  ChoreId chore;
  AgentId recipient;
  /// Envy cycles rotated after the assignment, each listed in cycle order
  /// (every agent takes the bundle of the next one).
  std::vector<std::vector<AgentId>> rotations;
};

struct AlgChoresResult {
  Allocation allocation;
  std::vector<AlgChoresRound> rounds;
};

/// Largest chore first, each to the lowest-index agent who envies nobody;
/// envy cycles are rotated away until some agent is envy-free again. Envy is
/// strict: i envies j iff c_i(B_j) < c_i(B_i). Non-IDO instances run on the
/// sorted surrogate; owners then pick real chores greedily in reverse
/// surrogate order.
AlgChoresResult alg_chores(const ChoreInstance& instance);

/// The same loop, without the surrogate step. Throws std::invalid_argument
/// for a non-IDO instance.
AlgChoresResult alg_chores_ido(const ChoreInstance& instance);

/// n agents with one shared row: three chores of cost 1 and, for
/// j = 1..n-1, two chores of cost 1 + j/n, sorted nonincreasing.
/// Throws std::invalid_argument for n < 2.
ChoreInstance tight_example(std::size_t n);

}  // namespace chores
