#include "chores/fairness.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "chores/error.hpp"
#include "chores/simulate.hpp"

namespace chores {

SuffixCheck suffix_envy_condition(const PickingSequence& sequence, AgentId i, AgentId j) {
  if (i == j) throw std::invalid_argument("suffix condition compares two distinct pickers");
  SuffixCheck out;
  long balance = 0;  // picks of i minus picks of j in the current suffix
  const std::size_t m = sequence.size();
  for (std::size_t len = 1; len <= m; ++len) {
    const AgentId p = sequence.pickers[m - len];
    if (p == i) ++balance;
    if (p == j) --balance;
    if (balance > 0) {
      out.holds = false;
      out.suffix_length = len;
      out.witness.assign(m, Rational(0));
      std::fill(out.witness.begin(), out.witness.begin() + static_cast<std::ptrdiff_t>(len),
                Rational(1));
      return out;
    }
  }
  return out;
}

std::vector<std::vector<std::size_t>> label_rounds(const PickingSequence& sequence,
                                                   std::size_t labels) {
  std::vector<std::vector<std::size_t>> out(labels);
  for (std::size_t r = 0; r < sequence.size(); ++r) out.at(sequence.pickers[r]).push_back(r);
  return out;
}

LabelStage parse_label_stage(std::string_view text) {
  if (text == "random_bijection" || text == "random-bijection") return LabelStage::kRandomBijection;
  if (text == "label_pick" || text == "label-pick") return LabelStage::kLabelPick;
  if (text == "prsd") return LabelStage::kPrsd;
  throw std::invalid_argument("unknown label stage '" + std::string(text) + "'");
}

std::string to_string(LabelStage stage) {
  switch (stage) {
    case LabelStage::kRandomBijection:
      return "random_bijection";
    case LabelStage::kLabelPick:
      return "label_pick";
    case LabelStage::kPrsd:
      break;
  }
  return "prsd";
}

namespace {

// guarantee[a][l]: agent a's guaranteed disvalue when holding label l.
std::vector<std::vector<Rational>> guarantees(const PickingSequence& sequence,
                                              const std::vector<CostRow>& rows) {
  const auto rounds = label_rounds(sequence, rows.size());
  std::vector<std::vector<Rational>> g(rows.size());
  for (std::size_t a = 0; a < rows.size(); ++a) {
    if (rows[a].size() != sequence.size()) {
      throw std::invalid_argument("cost row length differs from the sequence length");
    }
    for (const auto& r : rounds) g[a].push_back(guaranteed_disvalue(rows[a], r));
  }
  return g;
}

std::vector<AgentId> pick_with(const std::vector<AgentId>& turns,
                               const std::vector<std::vector<Rational>>& g) {
  const std::size_t n = g.size();
  std::vector<AgentId> label(n, n);
  std::vector<bool> used(n, false);
  for (AgentId a : turns) {
    std::size_t best = n;
    for (std::size_t l = 0; l < n; ++l) {
      if (!used[l] && (best == n || g[a][l] < g[a][best])) best = l;
    }
    used[best] = true;
    label[a] = best;
  }
  return label;
}

std::vector<AgentId> identity(std::size_t n) {
  std::vector<AgentId> v(n);
  std::iota(v.begin(), v.end(), AgentId{0});
  return v;
}

}  // namespace

std::vector<AgentId> pick_labels(const std::vector<AgentId>& turns, const PickingSequence& sequence,
                                 const std::vector<CostRow>& rows) {
  return pick_with(turns, guarantees(sequence, rows));
}

std::vector<AgentId> preliminary_stage(LabelStage stage, const PickingSequence& sequence,
                                       const std::vector<CostRow>& rows,
                                       const std::vector<Rational>& b, std::uint64_t seed) {
  const std::size_t n = rows.size();
  std::mt19937_64 rng(seed);
  std::vector<AgentId> order = identity(n);
  std::shuffle(order.begin(), order.end(), rng);
  switch (stage) {
    case LabelStage::kRandomBijection:
      return order;
    case LabelStage::kPrsd:
      if (b.size() != n) throw std::invalid_argument("entitlements do not match agents");
      std::stable_sort(order.begin(), order.end(),
                       [&](AgentId x, AgentId y) { return b[x] < b[y]; });
      break;
    case LabelStage::kLabelPick:
      break;
  }
  return pick_labels(order, sequence, rows);
}

AuditReport ef_ra_audit(const PickingSequence& sequence, LabelStage stage,
                        const std::vector<CostRow>& rows, const std::vector<Rational>& b) {
  const std::size_t n = rows.size();
  if (n > 6) throw SizeGuardError("audit enumerates n! outcomes; limited to n <= 6");
  if (b.size() != n) throw std::invalid_argument("entitlements do not match agents");
  const auto g = guarantees(sequence, rows);

  // All equally likely outcomes, as agent -> label maps.
  std::vector<std::vector<AgentId>> outcomes;
  std::vector<AgentId> perm = identity(n);
  do {
    if (stage == LabelStage::kRandomBijection) {
      outcomes.push_back(perm);
    } else if (stage == LabelStage::kLabelPick) {
      outcomes.push_back(pick_with(perm, g));
    } else {
      bool ascending = true;
      for (std::size_t k = 1; k < n && ascending; ++k) ascending = !(b[perm[k]] < b[perm[k - 1]]);
      if (ascending) outcomes.push_back(pick_with(perm, g));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  AuditReport report;
  report.outcomes = outcomes.size();
  const long count = static_cast<long>(outcomes.size());
  for (AgentId a = 0; a < n; ++a) {
    AgentAudit au;
    Rational total = sum(rows[a]);
    au.proportional = b[a] * total;
    Rational label_sum = 0;
    for (const auto& x : g[a]) label_sum += x;
    au.label_mean = label_sum / static_cast<long>(n);
    au.expected = 0;
    std::map<Rational, long> received;
    for (const auto& o : outcomes) {
      au.expected += g[a][o[a]];
      ++received[g[a][o[a]]];
      if (!(g[a][o[a]] < au.proportional)) report.all_below_proportional_ex_post = false;
    }
    au.expected /= count;

    // P(received <= x) >= P(uniform label <= x) at every guarantee level.
    std::vector<Rational> levels = g[a];
    std::sort(levels.begin(), levels.end());
    long got = 0;
    auto it = received.begin();
    for (std::size_t k = 0; k < levels.size(); ++k) {
      if (k + 1 < levels.size() && levels[k + 1] == levels[k]) continue;
      while (it != received.end() && it->first <= levels[k]) got += (it++)->second;
      if (ratio(got, count) < ratio(static_cast<long>(k + 1), static_cast<long>(n))) {
        au.dominates_uniform = false;
      }
    }
    if (au.label_mean != au.proportional) report.mean_equals_proportional = false;
    if (stage == LabelStage::kLabelPick && !au.dominates_uniform) report.dominance = false;
    report.agents.push_back(std::move(au));
  }
  for (AgentId i = 0; i < n; ++i) {
    for (AgentId j = 0; j < n; ++j) {
      if (i == j || b[j] < b[i]) continue;
      Rational other = 0;
      for (const auto& o : outcomes) other += g[i][o[j]];
      if (other / count < report.agents[i].expected) report.no_ex_ante_envy = false;
    }
  }
  return report;
}

TensionExample envy_tension_example(std::size_t n) {
  if (n < 4) throw std::invalid_argument("tension example needs n >= 4");
  const std::size_t k = n - 2;
  const long m = static_cast<long>(k * n + 1);
  std::vector<Rational> b(n, ratio(static_cast<long>(k), m));
  b[0] = ratio(static_cast<long>(k + 1), m);
  CostRow row(static_cast<std::size_t>(m), Rational(1));
  row[0] = static_cast<long>(k);
  return TensionExample{k, ChoreInstance::create(std::move(b), std::vector<CostRow>(n, row)),
                        Rational(static_cast<long>(k + 2))};
}

TensionAnalysis analyze_tension(const TensionExample& example, const PickingSequence& sequence) {
  const std::size_t n = example.instance.agents();
  TensionAnalysis out;
  for (AgentId j = 1; j < n; ++j) {
    if (!suffix_envy_condition(sequence, j, 0).holds) out.no_envy_toward_first = false;
  }
  out.first_guarantee =
      guaranteed_disvalue(example.instance.costs(0), label_rounds(sequence, n)[0]);
  out.ratio_lower_bound = out.first_guarantee / example.aps_bound;
  return out;
}

}  // namespace chores
