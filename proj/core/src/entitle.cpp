#include "chores/entitle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include "chores/roots.hpp"
#include "chores/shares.hpp"
#include "chores/simulate.hpp"

namespace chores {

ScalingFunction ScalingFunction::capped(Rational t) {
  if (t < 1 || t > 2) throw std::invalid_argument("scaling cap t must lie in [1, 2]");
  ScalingFunction s;
  s.kind_ = Kind::kCapped;
  s.t_ = std::move(t);
  return s;
}

ScalingFunction ScalingFunction::linear_half() {
  ScalingFunction s;
  s.kind_ = Kind::kLinearHalf;
  return s;
}

Rational ScalingFunction::operator()(const Rational& x) const {
  if (kind_ == Kind::kLinearHalf) return Rational(1, 2) + x;
  if (x * t_ <= 1) return (t_ - 1) / (1 - x);
  return t_;
}

Rational ScalingFunction::cap() const { return (*this)(Rational(1)); }

std::string ScalingFunction::describe() const {
  if (kind_ == Kind::kLinearHalf) return "1/2 + x";
  return "capped(t=" + to_string(t_) + ")";
}

const Rational& FractionalAllocation::at(AgentId i, std::size_t j) const {
  const auto& row = a.at(i);
  return row[std::min(j, row.size() - 1)];
}

namespace {

Rational column_sum(const Matrix& a, std::size_t j) {
  Rational total = 0;
  for (const auto& row : a) total += row[j];
  return total;
}

void require_legal(const Matrix& a, const char* stage) {
  for (std::size_t j = 0; j < a.front().size(); ++j) {
    if (column_sum(a, j) != 1) {
      throw std::logic_error(std::string(stage) + ": chore " + std::to_string(j + 1) +
                             " not allocated exactly once");
    }
  }
}

Matrix unsort(const Matrix& sorted_rows, const std::vector<AgentId>& order) {
  Matrix out(sorted_rows.size());
  for (std::size_t r = 0; r < order.size(); ++r) out[order[r]] = sorted_rows[r];
  return out;
}

}  // namespace

PipelineTrace build_fractional_trace(const std::vector<Rational>& b, const ScalingFunction& s) {
  const std::size_t n = b.size();
  if (n == 0) throw std::invalid_argument("need at least one agent");
  Rational total = 0;
  for (const auto& x : b) {
    if (x <= 0) throw std::invalid_argument("entitlements must be positive");
    total += x;
  }
  if (total != 1) throw std::invalid_argument("entitlements sum to " + to_string(total));

  PipelineTrace trace;
  trace.sorted.resize(n);
  std::iota(trace.sorted.begin(), trace.sorted.end(), AgentId{0});
  std::stable_sort(trace.sorted.begin(), trace.sorted.end(),
                   [&](AgentId x, AgentId y) { return b[x] < b[y]; });
  std::vector<Rational> w(n);
  for (std::size_t r = 0; r < n; ++r) w[r] = b[trace.sorted[r]];
  trace.cumulative.resize(n);
  std::partial_sum(w.begin(), w.end(), trace.cumulative.begin());

  // Beyond chore ceil(1/b_min) every stage stays proportional, so one extra
  // column represents the whole tail.
  const std::size_t cols = std::max<std::size_t>(n, static_cast<std::size_t>(ceil_int64(1 / w[0]))) + 1;

  Matrix a1(n, std::vector<Rational>(cols));
  for (std::size_t r = 0; r < n; ++r) std::fill(a1[r].begin(), a1[r].end(), w[r]);

  // Each agent relinquishes total mass one from the front.
  Matrix movable = a1;
  for (std::size_t r = 0; r < n; ++r) {
    Rational remaining = 1;
    for (std::size_t j = 0; remaining > 0; ++j) {
      const Rational take = std::min(w[r], remaining);
      movable[r][j] -= take;
      remaining -= take;
    }
  }
  Matrix a2 = movable;
  for (std::size_t r = 0; r < n; ++r) a2[r][r] += 1;

  // Move the relinquished-part leftovers of early chores onto the deficit
  // chores: surplus chores in order, latest agents first, earliest deficits first.
  Matrix a3 = a2;
  std::vector<Rational> col(cols);
  for (std::size_t j = 0; j < cols; ++j) col[j] = column_sum(a3, j);
  std::size_t deficit = n;
  for (std::size_t src = 0; src < n; ++src) {
    for (std::size_t r = n; r-- > 0 && col[src] > 1;) {
      Rational& mine = movable[r][src];
      while (mine > 0 && col[src] > 1) {
        while (deficit < cols && col[deficit] >= 1) ++deficit;
        if (deficit == cols) throw std::logic_error("surplus left with no deficit chore");
        const Rational x = std::min({mine, Rational(col[src] - 1), Rational(1 - col[deficit])});
        mine -= x;
        a3[r][src] -= x;
        a3[r][deficit] += x;
        col[src] -= x;
        col[deficit] += x;
      }
    }
  }
  require_legal(a3, "rerouted allocation");
  const std::size_t last_uneven = static_cast<std::size_t>(ceil_int64(1 / w[0]));
  for (std::size_t k = n; k < last_uneven && k < cols; ++k) {
    Rational moved = 0;
    Rational proportional = 0;
    for (std::size_t r = n; r-- > 0;) {
      moved += a3[r][k];
      proportional += w[r];
      if (moved < proportional) {
        throw std::logic_error("rerouted chore " + std::to_string(k + 1) +
                               " does not dominate proportional on an agent suffix");
      }
    }
  }

  Matrix a4 = a3;
  std::vector<Rational> factor(n);
  for (std::size_t r = 0; r < n; ++r) factor[r] = s(trace.cumulative[r]);
  for (std::size_t j = n; j < cols; ++j) {
    for (std::size_t r = 0; r < n; ++r) a4[r][j] *= factor[r];
    if (column_sum(a4, j) < 1) {
      throw std::logic_error("scaled chore " + std::to_string(j + 1) + " has a deficit");
    }
  }

  // Trim: first anything above the scaled proportional amount, then agents
  // scaled below one, then the latest agents.
  Matrix a5 = a4;
  for (std::size_t j = n; j < cols; ++j) {
    Rational surplus = column_sum(a5, j) - 1;
    const auto trim = [&](std::size_t r, const Rational& amount) {
      const Rational x = std::min(amount, surplus);
      if (x <= 0) return;
      a5[r][j] -= x;
      surplus -= x;
    };
    for (std::size_t r = 0; r < n; ++r) trim(r, a5[r][j] - w[r] * factor[r]);
    for (std::size_t r = 0; r < n; ++r) {
      if (factor[r] < 1) trim(r, a5[r][j]);
    }
    for (std::size_t r = n; r-- > 0;) trim(r, a5[r][j]);
  }
  require_legal(a5, "trimmed allocation");

  FractionalAllocation fin;
  fin.a = unsort(a5, trace.sorted);
  fin.first_fractional.assign(n, cols + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      if (fin.a[i][j] > 0 && fin.a[i][j] < 1) {
        fin.first_fractional[i] = j + 1;
        break;
      }
    }
    if (fin.first_fractional[i] == cols + 1) fin.uses_sentinel = true;
    const std::size_t floor_inv = static_cast<std::size_t>(floor_int64(1 / b[i]));
    if (fin.first_fractional[i] < std::max(n, floor_inv) + 1) {
      throw std::logic_error("agent " + std::to_string(i + 1) + " holds a fraction too early");
    }
  }

  trace.proportional = unsort(a1, trace.sorted);
  trace.relinquished = unsort(a2, trace.sorted);
  trace.rerouted = unsort(a3, trace.sorted);
  trace.scaled = unsort(a4, trace.sorted);
  trace.final_allocation = std::move(fin);
  return trace;
}

FractionalAllocation build_fractional(const std::vector<Rational>& b, const ScalingFunction& s) {
  return build_fractional_trace(b, s).final_allocation;
}

PickingOrder round_to_order(const FractionalAllocation& alloc, const std::vector<Rational>& b,
                            std::size_t m) {
  const std::size_t n = alloc.agents();
  if (b.size() != n) throw std::invalid_argument("entitlement vector does not match allocation");
  std::vector<Rational> mass(n, Rational(0));
  std::vector<long> picks(n, 0);
  std::vector<AgentId> rounds;
  rounds.reserve(m);
  for (std::size_t t = 0; t < m; ++t) {
    std::size_t chosen = n;
    for (std::size_t i = 0; i < n; ++i) {
      mass[i] += alloc.at(i, t);
      if (mass[i] <= picks[i]) continue;
      if (chosen == n || b[i] > b[chosen] || (b[i] == b[chosen] && i > chosen)) chosen = i;
    }
    if (chosen == n) throw std::logic_error("no eligible agent in round " + std::to_string(t + 1));
    ++picks[chosen];
    rounds.push_back(chosen);
  }
  return PickingOrder::finite(std::move(rounds));
}

GuaranteeReport verify_guarantee(const std::vector<Rational>& b, const GuaranteeOptions& options) {
  const std::size_t n = b.size();
  GuaranteeReport report;
  report.t = solve_t();
  report.bound = 1 + report.t / 2;
  report.max_simulated = 0;
  report.max_adversarial = 0;
  const FractionalAllocation alloc = build_fractional(b, ScalingFunction::capped(report.t));

  std::map<std::size_t, std::vector<AgentId>> orders;
  const auto order_for = [&](std::size_t m) -> const std::vector<AgentId>& {
    auto it = orders.find(m);
    if (it != orders.end()) return it->second;
    std::vector<AgentId> rounds = round_to_order(alloc, b, m).expand(m);
    for (AgentId i = 0; i < n; ++i) {
      const WorstCase w =
          worst_case_ratio(positions_of(rounds, i), m, ShareNormalization::entitled(b[i]));
      if (w.ratio > report.max_adversarial) report.max_adversarial = w.ratio;
    }
    return orders.emplace(m, std::move(rounds)).first->second;
  };

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> pick_m(1, std::max<std::size_t>(1, options.max_chores));
  std::uniform_int_distribution<long> pick_cost(0, 1000);
  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    const std::size_t m = pick_m(rng);
    const std::vector<AgentId>& rounds = order_for(m);
    std::vector<CostRow> rows(n);
    for (auto& row : rows) {
      for (std::size_t j = 0; j < m; ++j) row.push_back(ratio(pick_cost(rng), 1000));
      row = sorted_desc(std::move(row));
    }
    const ChoreInstance inst = ChoreInstance::create(b, rows);
    const Allocation got = greedy_play(to_sequence(rounds), inst);
    for (AgentId i = 0; i < n; ++i) {
      const Rational cs = chore_share(rows[i], b[i]);
      if (cs == 0) continue;
      const Rational ratio = got.cost(i, rows[i]) / cs;
      if (ratio > report.max_simulated) report.max_simulated = ratio;
    }
    ++report.trials;
  }
  return report;
}

}  // namespace chores
