#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "chores/error.hpp"
#include "chores/io.hpp"
#include "chores/model.hpp"
#include "chores/simulate.hpp"

namespace chores {
namespace {

Rational q(long p, long d = 1) { return ratio(p, d); }

TEST(Rational, ParsesFractionsAndDecimalsExactly) {
  EXPECT_EQ(parse_rational("3/7"), q(3, 7));
  EXPECT_EQ(parse_rational("6/14"), q(3, 7));
  EXPECT_EQ(parse_rational("1.466"), q(733, 500));
  EXPECT_EQ(parse_rational("-0.125"), q(-1, 8));
  EXPECT_EQ(parse_rational("2.5e-3"), q(1, 400));
  EXPECT_EQ(parse_rational("12"), q(12));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
}

TEST(Rational, FloorCeilAndPrinting) {
  EXPECT_EQ(to_string(q(4, 2)), "2");
  EXPECT_EQ(to_string(q(-3, 6)), "-1/2");
  EXPECT_EQ(floor_int64(q(-1, 2)), -1);
  EXPECT_EQ(ceil_int64(q(-1, 2)), 0);
  EXPECT_EQ(ceil_int64(q(7, 3)), 3);
  EXPECT_EQ(floor_int64(q(7, 3)), 2);
}

TEST(Instance, ValidSymmetricInstance) {
  auto inst = ChoreInstance::create({q(1, 2), q(1, 2)}, {{q(3), q(2), q(1)}, {q(3), q(2), q(1)}});
  EXPECT_TRUE(inst.is_ido());
  EXPECT_EQ(inst.agents(), 2U);
  EXPECT_EQ(inst.chores(), 3U);
}

TEST(Instance, RejectsBadEntitlements) {
  try {
    ChoreInstance::create({q(1, 2), q(1, 3)}, {{q(1)}, {q(1)}});
    FAIL() << "expected an InstanceError";
  } catch (const InstanceError& e) {
    EXPECT_EQ(e.kind(), InstanceError::Kind::kEntitlementSum);
    EXPECT_NE(std::string(e.what()).find("entitlements sum to 5/6"), std::string::npos);
  }
  EXPECT_THROW(ChoreInstance::create({q(3, 2), q(-1, 2)}, {{q(1)}, {q(1)}}), InstanceError);
  EXPECT_THROW(ChoreInstance::create({q(1)}, {{q(1), q(-1)}}), InstanceError);
  EXPECT_THROW(ChoreInstance::create({q(1, 2), q(1, 2)}, {{q(1)}, {q(1), q(2)}}), InstanceError);
  EXPECT_THROW(ChoreInstance::create({q(1, 2), q(1, 2)}, {{q(1)}}), InstanceError);
}

TEST(Instance, UnequalEntitlementsAccepted) {
  auto inst = ChoreInstance::create({q(1, 8), q(3, 8), q(1, 2)},
                                    {{q(2), q(1)}, {q(2), q(1)}, {q(1), q(2)}});
  EXPECT_FALSE(inst.is_ido());
}

TEST(Ido, AlreadySortedGivesIdentity) {
  auto inst = ChoreInstance::with_equal_entitlements({{q(3), q(2), q(1)}, {q(5), q(5), q(0)}});
  auto red = to_ido(inst);
  EXPECT_EQ(red.instance, inst);
  for (const auto& perm : red.original_chore) EXPECT_EQ(perm, (std::vector<ChoreId>{0, 1, 2}));
}

TEST(Ido, SingleAgentSort) {
  auto inst = ChoreInstance::with_equal_entitlements({{q(1), q(3), q(2)}});
  auto red = to_ido(inst);
  EXPECT_EQ(red.instance.costs(0), (CostRow{q(3), q(2), q(1)}));
  EXPECT_EQ(red.original_chore[0], (std::vector<ChoreId>{1, 2, 0}));
}

TEST(Ido, OpposedRowsBecomeNonincreasing) {
  auto inst = ChoreInstance::with_equal_entitlements({{q(1), q(2)}, {q(2), q(1)}});
  auto red = to_ido(inst);
  EXPECT_TRUE(red.instance.is_ido());
  EXPECT_EQ(red.original_chore[0], (std::vector<ChoreId>{1, 0}));
  EXPECT_EQ(red.original_chore[1], (std::vector<ChoreId>{0, 1}));
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t r = 0; r < 2; ++r) {
      EXPECT_EQ(red.instance.cost(i, r), inst.cost(i, red.original_chore[i][r]));
    }
  }
}

TEST(Order, ReversalRoundTrip) {
  auto seq = to_sequence(std::vector<AgentId>{0, 1, 1});
  EXPECT_EQ(seq.pickers, (std::vector<AgentId>{1, 1, 0}));
  EXPECT_EQ(to_order(seq).expand(3), (std::vector<AgentId>{0, 1, 1}));
  auto pal = parse_agent_string("1221");
  EXPECT_EQ(to_sequence(pal).pickers, pal);
}

TEST(Order, PeriodicExpansion) {
  auto order = PickingOrder::periodic(parse_agent_string("1221"), parse_agent_string("221"));
  auto seven = order.expand(7);
  EXPECT_EQ(agent_string(seven), "1221221");
  EXPECT_EQ(to_sequence(order, 7).pickers, std::vector<AgentId>(seven.rbegin(), seven.rend()));
  auto long_run = order.expand(40);
  EXPECT_TRUE(std::equal(seven.begin(), seven.end(), long_run.begin()));
  EXPECT_EQ(order.agent_bound(), 2U);
}

TEST(Order, FiniteOrderTooShort) {
  auto order = PickingOrder::finite({0, 1});
  EXPECT_FALSE(order.covers(3));
  EXPECT_THROW(order.expand(3), std::out_of_range);
  EXPECT_THROW(PickingOrder::periodic({0}, {}), std::invalid_argument);
}

TEST(Order, AgentStrings) {
  EXPECT_EQ(parse_agent_string("abch"), (std::vector<AgentId>{0, 1, 2, 7}));
  EXPECT_EQ(parse_agent_string("12(21)*"), (std::vector<AgentId>{0, 1, 1, 0}));
  EXPECT_THROW(parse_agent_string("10"), std::invalid_argument);
  EXPECT_EQ(agent_string({0, 9, 2}), "1 10 3");
}

// Shared row, everyone greedy: the sequence realizes exactly the order's bundles.
TEST(Order, GreedyPlayRealizesOrderOnSharedRows) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t m = 1; m <= 8; ++m) {
      std::vector<AgentId> rounds(m, 0);
      std::size_t combos = 1;
      for (std::size_t k = 0; k < m; ++k) combos *= n;
      for (std::size_t code = 0; code < combos; ++code) {
        std::size_t c = code;
        for (std::size_t k = 0; k < m; ++k) {
          rounds[k] = c % n;
          c /= n;
        }
        CostRow row;
        for (std::size_t k = 0; k < m; ++k) row.push_back(q(static_cast<long>(2 * (m - k))));
        auto inst = ChoreInstance::with_equal_entitlements(std::vector<CostRow>(n, row));
        auto played = greedy_play(to_sequence(rounds), inst);
        auto expected = allocation_from_order(rounds, n);
        for (auto& b : played.bundles) std::sort(b.begin(), b.end());
        ASSERT_EQ(played, expected) << agent_string(rounds);
      }
    }
  }
}

TEST(Allocation, Partition) {
  Allocation a{{{0, 2}, {1}}};
  EXPECT_TRUE(a.is_partition(3));
  EXPECT_FALSE(a.is_partition(4));
  Allocation dup{{{0, 1}, {1}}};
  EXPECT_FALSE(dup.is_partition(2));
  EXPECT_EQ(a.cost(0, {q(1), q(5), q(2)}), q(3));
}

TEST(Io, RoundTripPreservesExactValues) {
  auto inst = ChoreInstance::create({q(1, 8), q(3, 8), q(1, 2)},
                                    {{q(3, 7), q(1, 3), q(0)}, {q(1), q(1), q(1)}, {q(5), q(2), q(1, 9)}});
  auto doc = instance_to_json(inst);
  EXPECT_EQ(instance_from_json(doc), inst);
  auto path = std::filesystem::temp_directory_path() / "chorepick_roundtrip.json";
  save_instance(inst, path);
  EXPECT_EQ(load_instance(path), inst);
  std::filesystem::remove(path);
}

TEST(Io, AcceptsNumbersAndDecimalStrings) {
  auto doc = nlohmann::json::parse(
      R"({"agents": 2, "chores": 2, "entitlements": ["0.25", "3/4"], "costs": [[2, 1], ["1.5", 0]]})");
  auto inst = instance_from_json(doc);
  EXPECT_EQ(inst.entitlement(0), q(1, 4));
  EXPECT_EQ(inst.cost(1, 0), q(3, 2));
}

TEST(Io, Errors) {
  EXPECT_THROW(load_instance("/nonexistent/chorepick/missing.json"), FileError);
  auto path = std::filesystem::temp_directory_path() / "chorepick_bad.json";
  {
    std::ofstream out(path);
    out << "{ not json";
  }
  EXPECT_THROW(load_instance(path), FileError);
  std::filesystem::remove(path);
  EXPECT_THROW(instance_from_json(nlohmann::json::parse(R"({"agents": 1})")), SchemaError);
  EXPECT_THROW(instance_from_json(nlohmann::json::parse(
                   R"({"agents": 2, "chores": 1, "entitlements": ["1/2", "1/3"], "costs": [[1], [1]]})")),
               InstanceError);
  EXPECT_THROW(instance_from_json(nlohmann::json::parse(
                   R"({"agents": 1, "chores": 1, "entitlements": [1], "costs": [["x"]]})")),
               SchemaError);
}

}  // namespace
}  // namespace chores
