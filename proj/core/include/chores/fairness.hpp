#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chores/model.hpp"

namespace chores {

/// Result of comparing two pickers of a picking sequence.
struct SuffixCheck {
  bool holds = true;
  /// Length of the shortest suffix in which picker i has more picks than j.
  std::optional<std::size_t> suffix_length;
  /// Cost row (one entry per chore) under which i's guarantee exceeds j's:
  /// the `suffix_length` costliest chores cost one, the rest zero.
  CostRow witness;
};

/// Holds iff in every suffix of the sequence picker j picks at least as often
/// as picker i. Throws std::invalid_argument when i == j.
SuffixCheck suffix_envy_condition(const PickingSequence& sequence, AgentId i, AgentId j);

/// Zero-based picking rounds of each label (picker id) of the sequence.
std::vector<std::vector<std::size_t>> label_rounds(const PickingSequence& sequence,
                                                   std::size_t labels);

enum class LabelStage { kRandomBijection, kLabelPick, kPrsd };
LabelStage parse_label_stage(std::string_view text);
std::string to_string(LabelStage stage);

/// Each agent of `turns`, in order, takes the free label with the smallest
/// guaranteed disvalue under her row (lower label on ties). Returns
/// agent -> label.
std::vector<AgentId> pick_labels(const std::vector<AgentId>& turns, const PickingSequence& sequence,
                                 const std::vector<CostRow>& rows);

/// Seeded preliminary stage mapping agents to labels. random_bijection:
/// uniform bijection. label_pick: uniform turn order, then pick_labels.
/// prsd: turn order by ascending entitlement, ties shuffled, then pick_labels.
std::vector<AgentId> preliminary_stage(LabelStage stage, const PickingSequence& sequence,
                                       const std::vector<CostRow>& rows,
                                       const std::vector<Rational>& b, std::uint64_t seed);

struct AgentAudit {
  Rational proportional;
  Rational label_mean;         // mean guarantee over all labels
  Rational expected;           // expected guarantee of the label received
  bool dominates_uniform = true;
};

struct AuditReport {
  std::size_t outcomes = 0;  // equally likely stage outcomes enumerated
  std::vector<AgentAudit> agents;
  /// Every agent's label mean equals her proportional share.
  bool mean_equals_proportional = true;
  /// Under label picking, each agent's received guarantee stochastically
  /// dominates the uniform label draw.
  bool dominance = true;
  /// No agent expects a better guarantee from the label of an agent with at
  /// least her entitlement than from her own.
  bool no_ex_ante_envy = true;
  /// In every outcome every agent's guarantee is strictly below her
  /// proportional share.
  bool all_below_proportional_ex_post = true;
};

/// Enumerates every equally likely outcome of the stage (n <= 6; otherwise
/// SizeGuardError).
AuditReport ef_ra_audit(const PickingSequence& sequence, LabelStage stage,
                        const std::vector<CostRow>& rows, const std::vector<Rational>& b);

struct TensionExample {
  std::size_t k = 0;
  /// Entitlements ((k+1)/m, k/m, ...), every row the adversarial one for
  /// agent 1: the first chore costs k, the other kn cost one.
  ChoreInstance instance;
  /// Agent 1's anyprice share is at most k + 2.
  Rational aps_bound;
};

/// Throws std::invalid_argument for n < 4.
TensionExample envy_tension_example(std::size_t n);

struct TensionAnalysis {
  /// No lower-entitlement agent can envy agent 1 (suffix condition toward 1).
  bool no_envy_toward_first = true;
  Rational first_guarantee;
  /// first_guarantee / aps_bound: a lower bound on agent 1's ratio to her share.
  Rational ratio_lower_bound;
};

TensionAnalysis analyze_tension(const TensionExample& example, const PickingSequence& sequence);

}  // namespace chores
