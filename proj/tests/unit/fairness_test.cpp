#include <gtest/gtest.h>

#include <random>

#include "chores/entitle.hpp"
#include "chores/error.hpp"
#include "chores/fairness.hpp"
#include "chores/shares.hpp"
#include "chores/simulate.hpp"
#include "support/oracles.hpp"

namespace chores {
namespace {

Rational q(long p, long d = 1) { return ratio(p, d); }

CostRow ints(std::initializer_list<long> v) {
  CostRow row;
  for (long x : v) row.push_back(q(x));
  return row;
}

TEST(Suffix, RoundRobinHolds) {
  EXPECT_TRUE(suffix_envy_condition(PickingSequence{{0, 1, 0, 1}}, 0, 1).holds);
}

TEST(Suffix, DoublePickFails) {
  const PickingSequence seq{{0, 0, 1}};
  auto check = suffix_envy_condition(seq, 0, 1);
  EXPECT_FALSE(check.holds);
  ASSERT_TRUE(check.suffix_length);
  EXPECT_EQ(*check.suffix_length, 3U);
  EXPECT_EQ(check.witness, ints({1, 1, 1}));
  const auto rounds = label_rounds(seq, 2);
  EXPECT_EQ(guaranteed_disvalue(check.witness, rounds[0]), q(2));
  EXPECT_EQ(guaranteed_disvalue(check.witness, rounds[1]), q(1));
  EXPECT_THROW(suffix_envy_condition(seq, 1, 1), std::invalid_argument);
}

TEST(Suffix, MatchesBruteForceOnShortSequences) {
  for (std::size_t n = 2; n <= 3; ++n) {
    for (std::size_t len = 1; len <= 6; ++len) {
      std::size_t combos = 1;
      for (std::size_t k = 0; k < len; ++k) combos *= n;
      std::vector<AgentId> pickers(len);
      for (std::size_t code = 0; code < combos; ++code) {
        std::size_t c = code;
        for (auto& p : pickers) {
          p = c % n;
          c /= n;
        }
        const PickingSequence seq{pickers};
        for (AgentId i = 0; i < n; ++i) {
          for (AgentId j = 0; j < n; ++j) {
            if (i == j) continue;
            const auto check = suffix_envy_condition(seq, i, j);
            ASSERT_EQ(check.holds, !oracle::brute_envy(pickers, i, j));
            if (!check.holds) {
              const auto rounds = label_rounds(seq, n);
              ASSERT_GT(guaranteed_disvalue(check.witness, rounds[i]),
                        guaranteed_disvalue(check.witness, rounds[j]));
            }
          }
        }
      }
    }
  }
}

TEST(Suffix, HoldingConditionBoundsEveryRow) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    const std::size_t len = 1 + rng() % 12;
    PickingSequence seq;
    for (std::size_t r = 0; r < len; ++r) seq.pickers.push_back(rng() % n);
    const AgentId i = rng() % n;
    const AgentId j = (i + 1 + rng() % (n - 1)) % n;
    if (!suffix_envy_condition(seq, i, j).holds) continue;
    const auto rounds = label_rounds(seq, n);
    for (int r = 0; r < 10; ++r) {
      CostRow row;
      for (std::size_t k = 0; k < len; ++k) row.push_back(q(static_cast<long>(rng() % 20)));
      EXPECT_LE(guaranteed_disvalue(row, rounds[i]), guaranteed_disvalue(row, rounds[j]));
    }
  }
}

// Proportional fractional allocation rounded with the highest-entitlement
// tie-break: a lower-entitlement agent never envies a higher one.
TEST(Suffix, ProportionalRoundingRespectsResponsibility) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + rng() % 5;
    std::vector<long> w(n);
    long total = 0;
    for (auto& x : w) total += (x = 1 + static_cast<long>(rng() % 9));
    std::vector<Rational> b;
    FractionalAllocation fa;
    for (long x : w) {
      b.push_back(q(x, total));
      fa.a.push_back({b.back()});
      fa.first_fractional.push_back(1);
    }
    const std::size_t m = 1 + rng() % 40;
    const auto seq = to_sequence(round_to_order(fa, b, m), m);
    for (AgentId i = 0; i < n; ++i) {
      for (AgentId j = 0; j < n; ++j) {
        if (i == j || !(b[i] < b[j])) continue;
        EXPECT_TRUE(suffix_envy_condition(seq, i, j).holds) << "trial " << trial;
      }
    }
  }
}

TEST(Labels, TwoAgentExample) {
  const PickingSequence seq{{0, 0, 1}};
  const std::vector<CostRow> rows{ints({6, 4, 4}), ints({6, 2, 2})};
  for (const auto& turns : {std::vector<AgentId>{0, 1}, std::vector<AgentId>{1, 0}}) {
    const auto labels = pick_labels(turns, seq, rows);
    EXPECT_EQ(labels, (std::vector<AgentId>{1, 0}));
    const auto rounds = label_rounds(seq, 2);
    EXPECT_EQ(guaranteed_disvalue(rows[0], rounds[labels[0]]), q(6));
    EXPECT_EQ(guaranteed_disvalue(rows[1], rounds[labels[1]]), q(4));
  }
}

TEST(Labels, StagesAreSeededBijections) {
  const PickingSequence seq{{0, 1, 2, 2, 1, 0}};
  const std::vector<CostRow> rows(3, ints({5, 4, 3, 2, 1, 1}));
  const std::vector<Rational> b{q(1, 5), q(3, 10), q(1, 2)};
  for (auto stage : {LabelStage::kRandomBijection, LabelStage::kLabelPick, LabelStage::kPrsd}) {
    const auto a = preliminary_stage(stage, seq, rows, b, 99);
    EXPECT_EQ(a, preliminary_stage(stage, seq, rows, b, 99));
    auto sorted = a;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(sorted, (std::vector<AgentId>{0, 1, 2}));
  }
  // Strictly increasing responsibility: the lowest picks first, whatever the seed.
  const auto prsd = preliminary_stage(LabelStage::kPrsd, seq, rows, b, 1);
  EXPECT_EQ(prsd, pick_labels({0, 1, 2}, seq, rows));
  EXPECT_EQ(parse_label_stage("label-pick"), LabelStage::kLabelPick);
  EXPECT_EQ(parse_label_stage("random_bijection"), LabelStage::kRandomBijection);
  EXPECT_THROW(parse_label_stage("lottery"), std::invalid_argument);
}

TEST(Audit, MeanEqualsProportionalOnRandomInstances) {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    const std::size_t m = 1 + rng() % 10;
    std::vector<CostRow> rows(n);
    for (auto& row : rows) {
      for (std::size_t j = 0; j < m; ++j) row.push_back(q(static_cast<long>(rng() % 10)));
    }
    PickingSequence seq;
    for (std::size_t r = 0; r < m; ++r) seq.pickers.push_back(rng() % n);
    const std::vector<Rational> b(n, q(1, static_cast<long>(n)));
    for (auto stage : {LabelStage::kRandomBijection, LabelStage::kLabelPick}) {
      const auto report = ef_ra_audit(seq, stage, rows, b);
      EXPECT_TRUE(report.mean_equals_proportional);
      EXPECT_TRUE(report.no_ex_ante_envy);
      EXPECT_TRUE(report.dominance);
      for (const auto& a : report.agents) EXPECT_LE(a.expected, a.proportional);
    }
  }
}

TEST(Audit, GeneralizedExampleBelowProportionalEveryOutcome) {
  for (std::size_t n = 2; n <= 5; ++n) {
    std::vector<CostRow> rows;
    for (std::size_t a = 0; a < n; ++a) {
      CostRow row(n - 1, q(3));
      const long tail = a + 1 == n ? 1 : 2;
      row.push_back(q(tail));
      row.push_back(q(tail));
      rows.push_back(row);
    }
    PickingSequence seq{{0, 0}};
    for (AgentId a = 1; a < n; ++a) seq.pickers.push_back(a);
    const std::vector<Rational> b(n, q(1, static_cast<long>(n)));
    const auto report = ef_ra_audit(seq, LabelStage::kLabelPick, rows, b);
    EXPECT_TRUE(report.all_below_proportional_ex_post) << "n=" << n;
    EXPECT_FALSE(ef_ra_audit(seq, LabelStage::kRandomBijection, rows, b).all_below_proportional_ex_post);
  }
}

TEST(Audit, LabelPickDominatesForThreeAgents) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<CostRow> rows(3);
    for (auto& row : rows) {
      for (std::size_t j = 0; j < 6; ++j) row.push_back(q(static_cast<long>(rng() % 8)));
    }
    PickingSequence seq;
    for (std::size_t r = 0; r < 6; ++r) seq.pickers.push_back(rng() % 3);
    const auto report = ef_ra_audit(seq, LabelStage::kLabelPick, rows, std::vector<Rational>(3, q(1, 3)));
    EXPECT_EQ(report.outcomes, 6U);
    EXPECT_TRUE(report.dominance);
  }
}

TEST(Audit, PrsdHasNoEnvyTowardHigherResponsibility) {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng() % 3;
    std::vector<long> w(n);
    long total = 0;
    for (auto& x : w) total += (x = 1 + static_cast<long>(rng() % 3));
    std::vector<Rational> b;
    for (long x : w) b.push_back(q(x, total));
    std::vector<CostRow> rows(n);
    for (auto& row : rows) {
      for (std::size_t j = 0; j < 7; ++j) row.push_back(q(static_cast<long>(rng() % 9)));
    }
    PickingSequence seq;
    for (std::size_t r = 0; r < 7; ++r) seq.pickers.push_back(rng() % n);
    EXPECT_TRUE(ef_ra_audit(seq, LabelStage::kPrsd, rows, b).no_ex_ante_envy) << "trial " << trial;
  }
}

TEST(Audit, SizeGuard) {
  EXPECT_THROW(ef_ra_audit(PickingSequence{{0}}, LabelStage::kLabelPick,
                           std::vector<CostRow>(7, ints({1})), std::vector<Rational>(7, q(1, 7))),
               SizeGuardError);
}

TEST(Tension, FourAgents) {
  const auto ex = envy_tension_example(4);
  EXPECT_EQ(ex.k, 2U);
  EXPECT_EQ(ex.instance.chores(), 9U);
  EXPECT_EQ(ex.instance.entitlements(), (std::vector<Rational>{q(1, 3), q(2, 9), q(2, 9), q(2, 9)}));
  EXPECT_EQ(ex.instance.costs(0), ints({2, 1, 1, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(ex.aps_bound, q(4));
  EXPECT_THROW(envy_tension_example(3), std::invalid_argument);
}

TEST(Tension, FiveAgentsApsWithinBound) {
  const auto ex = envy_tension_example(5);
  EXPECT_EQ(ex.instance.chores(), 16U);
  const Rational aps =
      aps_oracle(ex.instance.costs(0), ex.instance.entitlement(0), OracleLimits{16, 5});
  EXPECT_LE(aps, ex.aps_bound);
}

TEST(Tension, SequenceAnalysis) {
  const auto ex = envy_tension_example(4);
  // Agent 1 picks in the last three rounds: nobody envies her and she pays k + 2.
  PickingSequence fair{{1, 2, 3, 1, 2, 3, 0, 0, 0}};
  const auto a = analyze_tension(ex, fair);
  EXPECT_TRUE(a.no_envy_toward_first);
  EXPECT_EQ(a.first_guarantee, q(4));
  EXPECT_EQ(a.ratio_lower_bound, q(1));
  PickingSequence early{{0, 0, 0, 1, 1, 2, 2, 3, 3}};
  EXPECT_FALSE(analyze_tension(ex, early).no_envy_toward_first);
}

}  // namespace
}  // namespace chores
