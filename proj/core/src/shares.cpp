#include "chores/shares.hpp"

#include <algorithm>
#include <stdexcept>

#include "chores/error.hpp"
#include "chores/lp.hpp"

namespace chores {

Rational proportional_share(const CostRow& costs, const Rational& b) { return b * sum(costs); }

Rational chore_share(const CostRow& costs, const Rational& b) {
  if (b <= 0 || b > 1) {
    throw std::invalid_argument("entitlement " + to_string(b) + " outside (0, 1]");
  }
  const CostRow v = sorted_desc(costs);
  const auto at = [&](std::size_t one_based) -> Rational {
    return one_based >= 1 && one_based <= v.size() ? v[one_based - 1] : Rational(0);
  };
  const std::size_t k = static_cast<std::size_t>(floor_int64(1 / b));
  Rational best = b * sum(v);
  best = std::max(best, at(1));
  best = std::max(best, Rational(at(k) + at(k + 1)));
  return best;
}

namespace {

struct MmsSearch {
  const CostRow& items;
  std::vector<Rational> load;
  std::vector<Rational> suffix;  // suffix[i] = sum of items[i..]
  Rational best;

  void run(std::size_t next, const Rational& current_max) {
    if (current_max >= best) return;
    if (next == items.size()) {
      best = current_max;
      return;
    }
    // The remaining mass must land somewhere; averaging gives a lower bound.
    Rational total = suffix[next];
    for (const auto& l : load) total += l;
    if (total / static_cast<long>(load.size()) >= best) return;

    bool tried_empty = false;
    for (std::size_t k = 0; k < load.size(); ++k) {
      if (load[k] == 0) {
        if (tried_empty) continue;
        tried_empty = true;
      }
      bool duplicate = false;
      for (std::size_t q = 0; q < k; ++q) {
        if (load[q] == load[k]) {
          duplicate = true;
          break;
        }
      }
      if (duplicate) continue;
      load[k] += items[next];
      run(next + 1, std::max(current_max, load[k]));
      load[k] -= items[next];
    }
  }
};

void check_chores(std::size_t m, const OracleLimits& limits) {
  if (m > limits.max_chores) {
    throw SizeGuardError("oracle limited to " + std::to_string(limits.max_chores) + " chores, got " +
                         std::to_string(m));
  }
}

void check_row(const CostRow& costs) {
  for (const auto& c : costs) {
    if (c < 0) throw std::invalid_argument("negative cost " + to_string(c));
  }
}

}  // namespace

Rational mms_oracle(const CostRow& costs, std::size_t n, const OracleLimits& limits) {
  if (n == 0) throw std::invalid_argument("mms_oracle needs at least one bundle");
  check_row(costs);
  check_chores(costs.size(), limits);
  if (n > limits.max_agents) {
    throw SizeGuardError("oracle limited to " + std::to_string(limits.max_agents) + " agents, got " +
                         std::to_string(n));
  }
  const CostRow items = sorted_desc(costs);
  if (n == 1) return sum(items);

  MmsSearch search{items, std::vector<Rational>(n, Rational(0)), {}, {}};
  search.suffix.assign(items.size() + 1, Rational(0));
  for (std::size_t i = items.size(); i-- > 0;) search.suffix[i] = search.suffix[i + 1] + items[i];

  // Longest-processing-time start gives a tight initial bound.
  std::vector<Rational> lpt(n, Rational(0));
  for (const auto& c : items) *std::min_element(lpt.begin(), lpt.end()) += c;
  search.best = *std::max_element(lpt.begin(), lpt.end());
  // Strict pruning would miss an optimum equal to the LPT value; nudge the
  // incumbent so ties are still explored once.
  search.best += 1;
  search.run(0, Rational(0));
  return search.best;
}

Rational aps_oracle(const CostRow& costs, const Rational& b, const OracleLimits& limits) {
  if (b <= 0 || b > 1) {
    throw std::invalid_argument("entitlement " + to_string(b) + " outside (0, 1]");
  }
  check_row(costs);
  const std::size_t m = costs.size();
  check_chores(m, limits);
  if (m == 0) return 0;

  const std::size_t subsets = std::size_t{1} << m;
  std::vector<Rational> bundle_cost(subsets, Rational(0));
  for (std::size_t s = 1; s < subsets; ++s) {
    const std::size_t low = static_cast<std::size_t>(__builtin_ctzll(s));
    bundle_cost[s] = bundle_cost[s & (s - 1)] + costs[low];
  }
  std::vector<Rational> candidates = bundle_cost;
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  const Rational inverse_b = 1 / b;
  const std::vector<Rational> ones_objective(m, Rational(1));

  // Prices with every cheaper-than-z bundle strictly below b exist iff
  // max sum(q) s.t. q(S) <= 1 for every S with c(S) < z exceeds 1/b. Solved by
  // cutting planes: start from the singleton rows, then add the bundle of
  // largest q(S) while it violates its row. A restricted optimum is an upper
  // bound, so dropping below 1/b settles infeasibility early.
  std::vector<Rational> price(subsets);
  const auto feasible = [&](const Rational& z) {
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> rhs;
    for (std::size_t j = 0; j < m; ++j) {
      // Nothing cheaper than z contains chore j: put the whole price on it.
      if (costs[j] >= z) return true;
      std::vector<Rational> row(m, Rational(0));
      row[j] = 1;
      rows.push_back(std::move(row));
      rhs.emplace_back(1);
    }
    while (true) {
      const PackingSolution sol = maximize_packing(rows, rhs, ones_objective);
      if (sol.unbounded) throw std::logic_error("anyprice program unbounded with all rows present");
      if (sol.value <= inverse_b) return false;
      std::size_t worst = 0;
      for (std::size_t s = 1; s < subsets; ++s) {
        const std::size_t low = static_cast<std::size_t>(__builtin_ctzll(s));
        price[s] = price[s & (s - 1)] + sol.x[low];
        if (bundle_cost[s] < z && (worst == 0 || price[s] > price[worst])) worst = s;
      }
      if (worst == 0 || price[worst] <= 1) return true;
      std::vector<Rational> row(m, Rational(0));
      for (std::size_t j = 0; j < m; ++j) {
        if (worst >> j & 1U) row[j] = 1;
      }
      rows.push_back(std::move(row));
      rhs.emplace_back(1);
    }
  };

  // candidates[0] == 0 is always feasible; feasibility is downward closed.
  std::size_t lo = 0;
  std::size_t hi = candidates.size();
  while (hi - lo > 1) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (feasible(candidates[mid])) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return candidates[lo];
}

ShareReport share_report(const ChoreInstance& instance, bool with_oracles,
                         const OracleLimits& limits) {
  ShareReport report;
  for (AgentId i = 0; i < instance.agents(); ++i) {
    AgentShares s;
    s.proportional = proportional_share(instance.costs(i), instance.entitlement(i));
    s.chore_share = chore_share(instance.costs(i), instance.entitlement(i));
    if (with_oracles) {
      s.mms = mms_oracle(instance.costs(i), instance.agents(), limits);
      s.aps = aps_oracle(instance.costs(i), instance.entitlement(i), limits);
    }
    report.agents.push_back(std::move(s));
  }
  return report;
}

}  // namespace chores
