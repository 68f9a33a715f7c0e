#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "chores/model.hpp"

namespace chores {

/// Per-agent scaling applied to the tail columns, a nondecreasing function of
/// the agent's cumulative entitlement.
class ScalingFunction {
 public:
  /// s(x) = (t-1)/(1-x) for x <= 1/t, t beyond. Requires 1 <= t <= 2.
  static ScalingFunction capped(Rational t);
  /// s(x) = 1/2 + x; handy for small worked examples.
  static ScalingFunction linear_half();

  Rational operator()(const Rational& x) const;
  /// s(1).
  Rational cap() const;
  std::string describe() const;

 private:
  enum class Kind { kCapped, kLinearHalf };
  Kind kind_ = Kind::kCapped;
  Rational t_ = 2;
};

using Matrix = std::vector<std::vector<Rational>>;

/// n x K matrix over the first K chores; every chore beyond K is allocated
/// like chore K. Rows are in the caller's agent order.
struct FractionalAllocation {
  Matrix a;
  /// One-based first chore each agent holds strictly between 0 and 1; equals
  /// columns() + 1 (a zero-cost sentinel) when the agent has none.
  std::vector<std::size_t> first_fractional;
  bool uses_sentinel = false;

  std::size_t agents() const { return a.size(); }
  std::size_t columns() const { return a.empty() ? 0 : a.front().size(); }
  /// Fraction of zero-based chore j held by agent i, for any j.
  const Rational& at(AgentId i, std::size_t j) const;
};

/// Intermediate matrices of the construction, agents in the caller's order.
struct PipelineTrace {
  /// Agents by nondecreasing entitlement (stable); sorted rank -> caller id.
  std::vector<AgentId> sorted;
  /// Cumulative entitlements along `sorted`.
  std::vector<Rational> cumulative;
  Matrix proportional;   // A1
  Matrix relinquished;   // A2 = integral ridge + reduced proportional part
  Matrix rerouted;       // A3
  Matrix scaled;         // A4
  FractionalAllocation final_allocation;  // A5
};

/// Builds the fractional allocation for entitlement vector b. Throws
/// std::invalid_argument unless b is positive and sums to one; broken
/// internal invariants throw std::logic_error.
PipelineTrace build_fractional_trace(const std::vector<Rational>& b, const ScalingFunction& s);
FractionalAllocation build_fractional(const std::vector<Rational>& b, const ScalingFunction& s);

/// Allocation order of length m: chore e_t goes to an agent whose mass on
/// e_1..e_t exceeds her picks so far; ties to the highest entitlement, then
/// the highest index.
PickingOrder round_to_order(const FractionalAllocation& alloc, const std::vector<Rational>& b,
                            std::size_t m);

struct GuaranteeOptions {
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  std::size_t max_chores = 40;
};

struct GuaranteeReport {
  Rational t;
  Rational bound;  // 1 + t/2
  /// Largest greedy-bundle cost over chore share seen in the random trials.
  Rational max_simulated;
  /// Largest exact worst case over normalized valuations of an agent's
  /// realized positions, over the chore counts drawn.
  Rational max_adversarial;
  std::size_t trials = 0;

  bool holds() const { return max_simulated <= bound && max_adversarial <= bound; }
};

/// Builds the order from b alone (scaling cap from solve_t), then replays it
/// against random ordered cost rows and checks both the realized and the
/// worst-case ratio against 1 + t/2.
GuaranteeReport verify_guarantee(const std::vector<Rational>& b, const GuaranteeOptions& options);

}  // namespace chores
