#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chores/model.hpp"

namespace chores {

/// agent: every agent paces itself. super: each id stands for a block of
/// agents and the period is that of the block's first member.
enum class PeriodMode { kAgent, kSuper };

PeriodMode parse_period_mode(std::string_view text);
std::string to_string(PeriodMode mode);

struct AgentPace {
  /// 0: intermediate, 1: early (one ridge pick, then periodic), 2: late (both
  /// ridge picks, then periodic).
  int cls = 0;
  Rational period;
};

/// Per-agent release times for a ridge order with target ratio rho.
struct ThresholdSchedule {
  std::size_t n = 0;
  Rational rho;
  PeriodMode mode = PeriodMode::kAgent;
  std::vector<AgentPace> agents;

  /// One-based round before which agent i (zero-based) may not make her
  /// t-th pick (t one-based).
  std::int64_t threshold(AgentId i, std::int64_t t) const;
  /// All thresholds of agent i that are <= horizon, increasing.
  std::vector<std::int64_t> thresholds(AgentId i, std::int64_t horizon) const;
  /// Sum of 1/p_i, exact.
  Rational covering_ratio() const;
  /// Floating estimate of covering_ratio, cheap for large n.
  double covering_ratio_estimate() const;
};

/// Throws std::invalid_argument unless rho > 1 and n >= 1.
ThresholdSchedule ridge_periods(std::size_t n, const Rational& rho, PeriodMode mode);

struct CoveringOptions {
  /// Rounds scanned when the covering ratio is exactly one (or too close to
  /// it to bound). Defaults to 66n.
  std::optional<std::int64_t> fallback_horizon;
  /// Never scan beyond this many rounds; hitting the cap without a violation
  /// gives an inconclusive verdict.
  std::int64_t max_horizon = 50'000'000;
};

struct CoveringVerdict {
  enum class Outcome { kPass, kFail, kInconclusive };
  Outcome outcome = Outcome::kInconclusive;
  /// Smallest round k >= 2n with fewer than k released thresholds, or the
  /// ridge round that cannot be served.
  std::optional<std::int64_t> failing_k;
  bool ridge_ok = true;
  double covering_ratio = 0;
  /// Exact covering ratio when it was cheap to compute.
  std::optional<Rational> covering_ratio_exact;
  std::int64_t horizon = 0;

  bool passed() const { return outcome == Outcome::kPass; }
};

std::string to_string(CoveringVerdict::Outcome outcome);

/// Checks sum_i P(i,k) >= k for 2n <= k <= horizon with bucketed counting.
/// For covering ratio r > 1 the horizon is ceil(2n + n/(r-1)) and a clean scan
/// is a pass. For r < 1 a violation must occur by 2n/(1-r) and is found. For
/// r = 1 the fallback horizon is scanned: a violation is a fail, otherwise
/// the result is inconclusive.
CoveringVerdict covering_test(const ThresholdSchedule& schedule, const CoveringOptions& options = {});

/// Same test on explicit per-agent threshold lists (each increasing).
CoveringVerdict covering_test_lists(const std::vector<std::vector<std::int64_t>>& lists,
                                    std::int64_t horizon);

/// Ridge first, then each round goes to an agent with an unconsumed released
/// threshold: most such thresholds first, then the lowest index. Throws
/// std::logic_error if some round has no candidate.
PickingOrder synthesize_order(const ThresholdSchedule& schedule, std::size_t m);

/// True iff every agent's t-th pick in the first m rounds comes no earlier
/// than her t-th threshold and the order opens with the ridge.
bool respects_thresholds(const PickingOrder& order, const ThresholdSchedule& schedule,
                         std::size_t m);

struct HalvingResult {
  /// Threshold lists for the n agents, up to `horizon`.
  std::vector<std::vector<std::int64_t>> thresholds;
  std::int64_t horizon = 0;
  /// Pairs (zero-based i) whose two lists do not keep one side dominating
  /// from the third threshold on.
  std::vector<std::size_t> domination_violations;
  CoveringVerdict verdict;

  bool domination_ok() const { return domination_violations.empty(); }
};

/// Pairs agents 2i-1, 2i of a 2n-agent schedule into agent i with thresholds
/// ceil(min(t_{2i-1}, t_{2i}) / 2), then tests covering on the result.
/// `horizon_2n` bounds the source lists; the output is checked up to half of it.
HalvingResult halve_thresholds(const ThresholdSchedule& schedule, std::int64_t horizon_2n);

/// Stock periodic orders: "n2", "n3", "n4", "super8". Throws
/// std::invalid_argument for other names.
PickingOrder fixed_order(std::string_view name);
/// Agents used by a stock order.
std::size_t fixed_order_agents(std::string_view name);

struct SearchOptions {
  Rational lo = 1;
  Rational hi = 2;
  CoveringOptions covering;
};

/// Smallest multiple of tol in (lo, hi] at which covering_test passes,
/// assuming passing is monotone in rho. Inconclusive counts as failing.
Rational best_ratio_search(std::size_t n, PeriodMode mode, const Rational& tol,
                           const SearchOptions& options = {});

}  // namespace chores
