#include "chores/algchores.hpp"

#include <algorithm>
#include <stdexcept>

namespace chores {

namespace {

class EnvyState {
 public:
  explicit EnvyState(const ChoreInstance& inst)
      : inst_(inst),
        n_(inst.agents()),
        bundles_(n_),
        cost_(n_, std::vector<Rational>(n_, Rational(0))) {}

  bool envies(AgentId i, AgentId j) const { return cost_[i][j] < cost_[i][i]; }

  std::size_t first_envy_free() const {
    for (AgentId i = 0; i < n_; ++i) {
      bool free = true;
      for (AgentId j = 0; j < n_ && free; ++j) free = !envies(i, j);
      if (free) return i;
    }
    return n_;
  }

  void give(AgentId i, ChoreId e) {
    bundles_[i].push_back(e);
    for (AgentId a = 0; a < n_; ++a) cost_[a][i] += inst_.cost(a, e);
  }

  // Every agent has an outgoing edge, so walking envy edges must revisit.
  std::vector<AgentId> find_cycle() const {
    std::vector<std::size_t> seen_at(n_, n_);
    std::vector<AgentId> path;
    AgentId cur = 0;
    while (seen_at[cur] == n_) {
      seen_at[cur] = path.size();
      path.push_back(cur);
      AgentId next = n_;
      for (AgentId j = 0; j < n_; ++j) {
        if (envies(cur, j)) {
          next = j;
          break;
        }
      }
      if (next == n_) throw std::logic_error("cycle search reached an envy-free agent");
      cur = next;
    }
    return {path.begin() + static_cast<std::ptrdiff_t>(seen_at[cur]), path.end()};
  }

  void rotate(const std::vector<AgentId>& cycle) {
    const Rational before = own_total();
    std::vector<std::vector<ChoreId>> taken;
    std::vector<std::vector<Rational>> taken_cost;
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      const AgentId next = cycle[(k + 1) % cycle.size()];
      taken.push_back(bundles_[next]);
      std::vector<Rational> col(n_);
      for (AgentId a = 0; a < n_; ++a) col[a] = cost_[a][next];
      taken_cost.push_back(std::move(col));
    }
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      bundles_[cycle[k]] = std::move(taken[k]);
      for (AgentId a = 0; a < n_; ++a) cost_[a][cycle[k]] = taken_cost[k][a];
    }
    if (!(own_total() < before)) throw std::logic_error("envy rotation did not reduce total cost");
  }

  Rational own_total() const {
    Rational t = 0;
    for (AgentId i = 0; i < n_; ++i) t += cost_[i][i];
    return t;
  }

  const Rational& own(AgentId i) const { return cost_[i][i]; }
  std::vector<std::vector<ChoreId>> take_bundles() { return std::move(bundles_); }

 private:
  const ChoreInstance& inst_;
  std::size_t n_;
  std::vector<std::vector<ChoreId>> bundles_;
  std::vector<std::vector<Rational>> cost_;
};

}  // namespace

AlgChoresResult alg_chores_ido(const ChoreInstance& instance) {
  if (!instance.is_ido()) throw std::invalid_argument("instance rows are not identically ordered");
  const std::size_t n = instance.agents();
  std::vector<Rational> totals(n);
  for (AgentId i = 0; i < n; ++i) totals[i] = sum(instance.costs(i));

  EnvyState state(instance);
  AlgChoresResult out;
  for (ChoreId e = 0; e < instance.chores(); ++e) {
    const AgentId i = state.first_envy_free();
    if (i == n) throw std::logic_error("no envy-free agent at round " + std::to_string(e + 1));
    if (state.own(i) * static_cast<long>(n) > totals[i]) {
      throw std::logic_error("envy-free recipient above her proportional share");
    }
    state.give(i, e);
    AlgChoresRound round{e, i, {}};
    while (state.first_envy_free() == n) {
      std::vector<AgentId> cycle = state.find_cycle();
      state.rotate(cycle);
      round.rotations.push_back(std::move(cycle));
    }
    out.rounds.push_back(std::move(round));
  }
  out.allocation.bundles = state.take_bundles();
  for (auto& b : out.allocation.bundles) std::sort(b.begin(), b.end());
  return out;
}

AlgChoresResult alg_chores(const ChoreInstance& instance) {
  if (instance.is_ido()) return alg_chores_ido(instance);
  const IdoReduction red = to_ido(instance);
  AlgChoresResult out = alg_chores_ido(red.instance);

  const std::size_t m = instance.chores();
  std::vector<AgentId> owner(m);
  for (AgentId i = 0; i < instance.agents(); ++i) {
    for (ChoreId e : out.allocation.bundles[i]) owner[e] = i;
  }
  Allocation real;
  real.bundles.resize(instance.agents());
  std::vector<bool> taken(m, false);
  for (std::size_t r = m; r-- > 0;) {
    const AgentId a = owner[r];
    const CostRow& row = instance.costs(a);
    std::size_t best = m;
    for (ChoreId j = 0; j < m; ++j) {
      if (!taken[j] && (best == m || row[j] < row[best])) best = j;
    }
    taken[best] = true;
    real.bundles[a].push_back(best);
  }
  for (AgentId i = 0; i < instance.agents(); ++i) {
    std::sort(real.bundles[i].begin(), real.bundles[i].end());
    if (real.cost(i, instance.costs(i)) >
        out.allocation.cost(i, red.instance.costs(i))) {
      throw std::logic_error("converted bundle costs more than its surrogate");
    }
  }
  out.allocation = std::move(real);
  return out;
}

ChoreInstance tight_example(std::size_t n) {
  if (n < 2) throw std::invalid_argument("tight example needs n >= 2");
  CostRow row;
  for (std::size_t j = n - 1; j >= 1; --j) {
    const Rational c = 1 + ratio(static_cast<long>(j), static_cast<long>(n));
    row.push_back(c);
    row.push_back(c);
  }
  for (int k = 0; k < 3; ++k) row.emplace_back(1);
  return ChoreInstance::with_equal_entitlements(std::vector<CostRow>(n, row));
}

}  // namespace chores
