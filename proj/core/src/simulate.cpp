#include "chores/simulate.hpp"

#include <algorithm>
#include <stdexcept>

#include "chores/lp.hpp"

namespace chores {

Allocation greedy_play(const PickingSequence& sequence, const ChoreInstance& instance) {
  const std::size_t m = instance.chores();
  if (sequence.size() != m) {
    throw std::invalid_argument("picking sequence has " + std::to_string(sequence.size()) +
                                " rounds for " + std::to_string(m) + " chores");
  }
  Allocation out;
  out.bundles.resize(instance.agents());
  std::vector<bool> taken(m, false);
  for (AgentId picker : sequence.pickers) {
    if (picker >= instance.agents()) {
      throw std::out_of_range("picker " + std::to_string(picker + 1) + " out of range");
    }
    const CostRow& row = instance.costs(picker);
    std::size_t best = m;
    for (std::size_t j = 0; j < m; ++j) {
      if (!taken[j] && (best == m || row[j] < row[best])) best = j;
    }
    taken[best] = true;
    out.bundles[picker].push_back(best);
  }
  for (auto& bundle : out.bundles) std::sort(bundle.begin(), bundle.end());
  return out;
}

Rational guaranteed_disvalue(const CostRow& costs, const std::vector<std::size_t>& rounds) {
  CostRow ascending = costs;
  std::sort(ascending.begin(), ascending.end());
  Rational total = 0;
  for (std::size_t r : rounds) total += ascending.at(r);
  return total;
}

ShareNormalization ShareNormalization::equal(std::size_t n) {
  return {Rational(static_cast<long>(n)), n, false};
}

ShareNormalization ShareNormalization::entitled(const Rational& b) {
  if (b <= 0 || b > 1) throw std::invalid_argument("entitlement outside (0, 1]");
  return {1 / b, static_cast<std::size_t>(floor_int64(1 / b)), false};
}

WorstCase worst_case_ratio(const std::vector<std::size_t>& positions, std::size_t m,
                           const ShareNormalization& norm) {
  WorstCase out;
  out.valuation.assign(m, Rational(0));
  if (m == 0 || positions.empty()) return out;

  // Variables w_l = v_l - v_{l+1} >= 0 (zero-based l, v_m = 0), so v_k = sum_{l >= k} w_l.
  std::vector<Rational> objective(m, Rational(0));
  {
    std::vector<bool> mine(m, false);
    for (std::size_t p : positions) {
      if (p >= m) throw std::out_of_range("position beyond m");
      mine[p] = true;
    }
    long running = 0;
    for (std::size_t l = 0; l < m; ++l) {
      if (mine[l]) ++running;
      objective[l] = running;
    }
  }

  std::vector<std::vector<Rational>> rows;
  std::vector<Rational> rhs;
  rows.emplace_back(m, Rational(1));
  rhs.emplace_back(1);

  const std::size_t k = norm.pair_index;  // one-based
  if (k >= 1) {
    if (norm.exact_pair && k <= m) {
      std::vector<Rational> row(m, Rational(0));
      for (std::size_t l = k - 1; l < m; ++l) row[l] = l >= k ? 2 : 1;
      rows.push_back(std::move(row));
      rhs.emplace_back(1);
    } else if (!norm.exact_pair && k + 1 <= m) {
      std::vector<Rational> row(m, Rational(0));
      for (std::size_t l = k; l < m; ++l) row[l] = 1;
      rows.push_back(std::move(row));
      rhs.emplace_back(1, 2);
    }
  }
  {
    std::vector<Rational> row(m);
    for (std::size_t l = 0; l < m; ++l) row[l] = static_cast<long>(l + 1);
    rows.push_back(std::move(row));
    rhs.push_back(norm.budget);
  }

  const PackingSolution sol = maximize_packing(rows, rhs, objective);
  if (sol.unbounded) throw std::logic_error("worst-case program unbounded");
  out.ratio = sol.value;
  Rational tail = 0;
  for (std::size_t l = m; l-- > 0;) {
    tail += sol.x[l];
    out.valuation[l] = tail;
  }
  return out;
}

WorstCase worst_case_ratio_cs(const std::vector<std::size_t>& positions, std::size_t n,
                              std::size_t m) {
  return worst_case_ratio(positions, m, ShareNormalization::equal(n));
}

OrderEvaluation evaluate_order(const PickingOrder& order, std::size_t n, std::size_t m) {
  const std::vector<AgentId> rounds = order.expand(m);
  for (AgentId a : rounds) {
    if (a >= n) throw std::out_of_range("order uses agent " + std::to_string(a + 1) + " > n");
  }
  OrderEvaluation out;
  out.ratio = 0;
  for (AgentId i = 0; i < n; ++i) {
    AgentEvaluation e;
    e.positions = positions_of(rounds, i);
    e.worst = worst_case_ratio_cs(e.positions, n, m);
    if (e.worst.ratio > out.ratio) out.ratio = e.worst.ratio;
    out.agents.push_back(std::move(e));
  }
  return out;
}

std::optional<RidgeWitness> nonridge_witness(const PickingOrder& order, std::size_t n) {
  if (n == 0) throw std::invalid_argument("nonridge_witness needs n >= 1");
  if (!order.covers(2 * n)) throw std::invalid_argument("order shorter than 2n rounds");
  const std::vector<AgentId> rounds = order.expand(2 * n);

  const auto witness = [&](RidgeWitness::Case kind, AgentId agent, CostRow v) {
    Rational cost = 0;
    for (std::size_t r = 0; r < rounds.size(); ++r) {
      if (rounds[r] == agent) cost += v[r];
    }
    return RidgeWitness{kind, agent, std::move(v), cost};
  };

  // Two picks among the first n rounds: the first n chores cost one each.
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t q = 0; q < r; ++q) {
      if (rounds[q] == rounds[r]) {
        CostRow v(2 * n, Rational(0));
        std::fill(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n), Rational(1));
        return witness(RidgeWitness::Case::kTwoEarlyPicks, rounds[r], std::move(v));
      }
    }
  }
  // Three picks among the first 2n rounds: every chore costs one half.
  for (AgentId a : rounds) {
    if (std::count(rounds.begin(), rounds.end(), a) >= 3) {
      return witness(RidgeWitness::Case::kThreePicks, a, CostRow(2 * n, Rational(1, 2)));
    }
  }
  // The agent of round i (one-based) returns before round 2n-i+1: the first i
  // chores cost one, the next 2(n-i) cost one half.
  for (std::size_t i = 1; i <= n; ++i) {
    const AgentId a = rounds[i - 1];
    for (std::size_t q = n + 1; q <= 2 * n - i; ++q) {
      if (rounds[q - 1] == a) {
        CostRow v(2 * n, Rational(0));
        for (std::size_t r = 0; r < i; ++r) v[r] = 1;
        for (std::size_t r = i; r < 2 * n - i; ++r) v[r] = Rational(1, 2);
        return witness(RidgeWitness::Case::kEarlyReturn, a, std::move(v));
      }
    }
  }
  return std::nullopt;
}

}  // namespace chores
