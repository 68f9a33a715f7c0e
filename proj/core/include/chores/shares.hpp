#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "chores/model.hpp"

namespace chores {

/// Size limits for the exhaustive oracles. Exceeding them raises
/// SizeGuardError unless the caller raises the limits.
struct OracleLimits {
  std::size_t max_chores = 12;
  std::size_t max_agents = 4;
};

/// b times the total cost.
Rational proportional_share(const CostRow& costs, const Rational& b);

/// max(b * sum, c(e_1), c(e_k) + c(e_{k+1})) with k = floor(1/b), over the
/// row sorted nonincreasing; missing positions count as zero.
/// Throws std::invalid_argument unless 0 < b <= 1.
Rational chore_share(const CostRow& costs, const Rational& b);

/// Min over partitions into n bundles of the costliest bundle.
Rational mms_oracle(const CostRow& costs, std::size_t n, const OracleLimits& limits = {});

/// Largest z such that some price vector (nonnegative, summing to one)
/// prices every bundle cheaper than z strictly below b.
Rational aps_oracle(const CostRow& costs, const Rational& b, const OracleLimits& limits = {});

struct AgentShares {
  Rational proportional;
  Rational chore_share;
  std::optional<Rational> mms;
  std::optional<Rational> aps;
};

struct ShareReport {
  std::vector<AgentShares> agents;
};

/// Proportional and chore shares for everyone; MMS and APS too when
/// `with_oracles` is set (subject to `limits`).
ShareReport share_report(const ChoreInstance& instance, bool with_oracles,
                         const OracleLimits& limits = {});

}  // namespace chores
