#include "chores/ridge.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "chores/error.hpp"

namespace chores {

PeriodMode parse_period_mode(std::string_view text) {
  if (text == "agent") return PeriodMode::kAgent;
  if (text == "super") return PeriodMode::kSuper;
  throw std::invalid_argument("mode must be agent or super, got '" + std::string(text) + "'");
}

std::string to_string(PeriodMode mode) { return mode == PeriodMode::kAgent ? "agent" : "super"; }

std::string to_string(CoveringVerdict::Outcome outcome) {
  switch (outcome) {
    case CoveringVerdict::Outcome::kPass:
      return "pass";
    case CoveringVerdict::Outcome::kFail:
      return "fail";
    case CoveringVerdict::Outcome::kInconclusive:
      break;
  }
  return "inconclusive";
}

namespace {

__extension__ typedef __int128 i128;

struct IntRatio {
  std::int64_t num;
  std::int64_t den;
};

IntRatio as_int_ratio(const Rational& p) {
  return {to_int64(p.get_num()), to_int64(p.get_den())};
}

// ceil(k * num / den) for positive operands.
std::int64_t ceil_mul(std::int64_t k, const IntRatio& p) {
  const i128 top = static_cast<i128>(k) * p.num;
  return static_cast<std::int64_t>((top + p.den - 1) / p.den);
}

}  // namespace

ThresholdSchedule ridge_periods(std::size_t n, const Rational& rho, PeriodMode mode) {
  if (n == 0) throw std::invalid_argument("ridge schedule needs n >= 1");
  if (rho <= 1) throw std::invalid_argument("target ratio must exceed 1, got " + to_string(rho));
  ThresholdSchedule s;
  s.n = n;
  s.rho = rho;
  s.mode = mode;
  const Rational nn(static_cast<long>(n));
  const Rational base = nn / rho;
  const Rational excess = rho - 1;
  const Rational late_from = 2 * nn + 1 - 2 * nn / rho;
  const Rational late_super = 2 * nn - 2 * nn / rho;
  s.agents.reserve(n);
  for (std::size_t one = 1; one <= n; ++one) {
    const Rational i(static_cast<long>(one));
    AgentPace a;
    if (mode == PeriodMode::kAgent) {
      if (i < base) {
        a = {1, (nn - i) / excess};
      } else if (i <= late_from) {
        a = {0, base};
      } else {
        a = {2, (i - 1) / (2 * excess)};
      }
    } else {
      if (i - 1 < base) {
        a = {1, (nn - i + 1) / excess};
      } else if (i > late_super) {
        a = {2, i / (2 * excess)};
      } else {
        a = {0, base};
      }
    }
    s.agents.push_back(std::move(a));
  }
  return s;
}

std::int64_t ThresholdSchedule::threshold(AgentId i, std::int64_t t) const {
  if (t < 1) throw std::invalid_argument("threshold index is one-based");
  const AgentPace& a = agents.at(i);
  const IntRatio p = as_int_ratio(a.period);
  const std::int64_t one = static_cast<std::int64_t>(i) + 1;
  const std::int64_t mirror = 2 * static_cast<std::int64_t>(n) - one + 1;
  switch (a.cls) {
    case 1:
      return t == 1 ? one : one + ceil_mul(t - 1, p);
    case 2:
      if (t == 1) return one;
      if (t == 2) return mirror;
      return mirror + ceil_mul(t - 2, p);
    default:
      return ceil_mul(t, p);
  }
}

std::vector<std::int64_t> ThresholdSchedule::thresholds(AgentId i, std::int64_t horizon) const {
  const AgentPace& a = agents.at(i);
  const IntRatio p = as_int_ratio(a.period);
  const std::int64_t one = static_cast<std::int64_t>(i) + 1;
  const std::int64_t mirror = 2 * static_cast<std::int64_t>(n) - one + 1;
  std::vector<std::int64_t> out;
  std::int64_t start = 0;
  switch (a.cls) {
    case 1:
      out.push_back(one);
      start = one;
      break;
    case 2:
      out.push_back(one);
      out.push_back(mirror);
      start = mirror;
      break;
    default:
      break;
  }
  while (!out.empty() && out.back() > horizon) out.pop_back();
  if (out.size() < (a.cls == 0 ? 0U : static_cast<std::size_t>(a.cls))) return out;
  for (std::int64_t k = 1;; ++k) {
    const std::int64_t t = start + ceil_mul(k, p);
    if (t > horizon) break;
    out.push_back(t);
  }
  return out;
}

Rational ThresholdSchedule::covering_ratio() const {
  Rational r = 0;
  for (const auto& a : agents) r += 1 / a.period;
  return r;
}

double ThresholdSchedule::covering_ratio_estimate() const {
  long double r = 0;
  for (const auto& a : agents) r += 1.0L / static_cast<long double>(to_double(a.period));
  return static_cast<double>(r);
}

CoveringVerdict covering_test_lists(const std::vector<std::vector<std::int64_t>>& lists,
                                    std::int64_t horizon) {
  CoveringVerdict v;
  v.horizon = horizon;
  v.outcome = CoveringVerdict::Outcome::kPass;
  const std::int64_t n = static_cast<std::int64_t>(lists.size());

  // The ridge needs agent i's first release by round i and second by 2n-i+1.
  std::optional<std::int64_t> ridge_fail;
  for (std::int64_t one = 1; one <= n; ++one) {
    const auto& l = lists[static_cast<std::size_t>(one - 1)];
    const std::int64_t mirror = 2 * n - one + 1;
    if (l.empty() || l[0] > one) ridge_fail = std::min(ridge_fail.value_or(one), one);
    if (l.size() < 2 || l[1] > mirror) ridge_fail = std::min(ridge_fail.value_or(mirror), mirror);
  }
  if (ridge_fail) {
    v.ridge_ok = false;
    v.outcome = CoveringVerdict::Outcome::kFail;
    v.failing_k = ridge_fail;
    return v;
  }

  std::vector<std::int32_t> released(static_cast<std::size_t>(std::max<std::int64_t>(horizon, 0)) + 1, 0);
  for (const auto& l : lists) {
    for (std::int64_t t : l) {
      if (t <= horizon) ++released[static_cast<std::size_t>(std::max<std::int64_t>(t, 1))];
    }
  }
  std::int64_t total = 0;
  for (std::int64_t k = 1; k <= horizon; ++k) {
    total += released[static_cast<std::size_t>(k)];
    if (k >= 2 * n && total < k) {
      v.outcome = CoveringVerdict::Outcome::kFail;
      v.failing_k = k;
      return v;
    }
  }
  return v;
}

CoveringVerdict covering_test(const ThresholdSchedule& schedule, const CoveringOptions& options) {
  const std::int64_t n = static_cast<std::int64_t>(schedule.n);
  const std::int64_t fallback = options.fallback_horizon.value_or(66 * n);

  // Exact sums of many unrelated fractions blow up; estimate for large n.
  constexpr std::size_t kExactLimit = 256;
  std::optional<Rational> exact;
  int sign = 0;
  double r = schedule.covering_ratio_estimate();
  if (schedule.n <= kExactLimit) {
    exact = schedule.covering_ratio();
    r = to_double(*exact);
    sign = *exact > 1 ? 1 : (*exact < 1 ? -1 : 0);
  } else if (std::abs(r - 1) > 1e-12) {
    sign = r > 1 ? 1 : -1;
  }

  std::int64_t horizon = fallback;
  if (sign > 0) {
    if (exact) {
      horizon = ceil_int64(2 * Rational(n) + Rational(n) / (*exact - 1));
    } else {
      const double h = std::ceil(2.0 * n + n / (r - 1)) + 1;
      horizon = h > 9e15 ? options.max_horizon + 1 : static_cast<std::int64_t>(h);
    }
  } else if (sign < 0) {
    if (exact) {
      horizon = floor_int64(2 * Rational(n) / (1 - *exact)) + 1;
    } else {
      const double h = std::floor(2.0 * n / (1 - r)) + 2;
      horizon = h > 9e15 ? options.max_horizon + 1 : static_cast<std::int64_t>(h);
    }
  }
  const bool clamped = horizon > options.max_horizon;
  horizon = std::min(horizon, options.max_horizon);
  horizon = std::max(horizon, 2 * n);

  std::vector<std::vector<std::int64_t>> lists(schedule.n);
  for (std::size_t i = 0; i < schedule.n; ++i) lists[i] = schedule.thresholds(i, horizon);
  CoveringVerdict v = covering_test_lists(lists, horizon);
  v.covering_ratio = r;
  v.covering_ratio_exact = exact;
  if (v.outcome == CoveringVerdict::Outcome::kPass && (sign <= 0 || clamped)) {
    v.outcome = CoveringVerdict::Outcome::kInconclusive;
  }
  return v;
}

PickingOrder synthesize_order(const ThresholdSchedule& schedule, std::size_t m) {
  const std::size_t n = schedule.n;
  std::vector<AgentId> rounds;
  rounds.reserve(m);
  for (std::size_t r = 0; r < std::min(m, 2 * n); ++r) rounds.push_back(r < n ? r : 2 * n - 1 - r);
  if (m <= 2 * n) return PickingOrder::finite(std::move(rounds));

  std::vector<std::vector<std::int64_t>> lists(n);
  for (std::size_t i = 0; i < n; ++i) lists[i] = schedule.thresholds(i, static_cast<std::int64_t>(m));
  std::vector<std::size_t> picks(n, 2);
  std::vector<std::size_t> released(n, 0);
  for (std::size_t k = 2 * n + 1; k <= m; ++k) {
    std::size_t chosen = n;
    std::size_t best = 0;
    for (std::size_t i = 0; i < n; ++i) {
      while (released[i] < lists[i].size() &&
             lists[i][released[i]] <= static_cast<std::int64_t>(k)) {
        ++released[i];
      }
      const std::size_t waiting = released[i] > picks[i] ? released[i] - picks[i] : 0;
      if (waiting > best) {
        best = waiting;
        chosen = i;
      }
    }
    if (chosen == n) {
      throw std::logic_error("no released threshold at round " + std::to_string(k));
    }
    ++picks[chosen];
    rounds.push_back(chosen);
  }
  return PickingOrder::finite(std::move(rounds));
}

bool respects_thresholds(const PickingOrder& order, const ThresholdSchedule& schedule,
                         std::size_t m) {
  const std::size_t n = schedule.n;
  const std::vector<AgentId> rounds = order.expand(m);
  for (std::size_t r = 0; r < std::min(m, 2 * n); ++r) {
    if (rounds[r] != (r < n ? r : 2 * n - 1 - r)) return false;
  }
  std::vector<std::int64_t> picks(n, 0);
  for (std::size_t r = 0; r < m; ++r) {
    const AgentId a = rounds[r];
    if (a >= n) return false;
    if (schedule.threshold(a, ++picks[a]) > static_cast<std::int64_t>(r + 1)) return false;
  }
  return true;
}

HalvingResult halve_thresholds(const ThresholdSchedule& schedule, std::int64_t horizon_2n) {
  if (schedule.n < 2 || schedule.n % 2 != 0) {
    throw std::invalid_argument("halving needs an even number of agents");
  }
  const std::size_t n = schedule.n / 2;
  HalvingResult out;
  out.horizon = horizon_2n / 2;
  out.thresholds.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto odd = schedule.thresholds(2 * i, horizon_2n);
    const auto even = schedule.thresholds(2 * i + 1, horizon_2n);
    bool odd_above = false;
    bool even_above = false;
    for (std::size_t j = 2; j < std::min(odd.size(), even.size()); ++j) {
      if (odd[j] > even[j]) odd_above = true;
      if (even[j] > odd[j]) even_above = true;
    }
    if (odd_above && even_above) out.domination_violations.push_back(i);
    auto& tau = out.thresholds[i];
    for (std::size_t j = 0; j < std::max(odd.size(), even.size()); ++j) {
      std::int64_t t;
      if (j >= odd.size()) {
        t = even[j];
      } else if (j >= even.size()) {
        t = odd[j];
      } else {
        t = std::min(odd[j], even[j]);
      }
      const std::int64_t half = (t + 1) / 2;
      if (half > out.horizon) break;
      tau.push_back(half);
    }
  }
  out.verdict = covering_test_lists(out.thresholds, out.horizon);
  return out;
}

namespace {

struct StockOrder {
  std::string_view name;
  std::size_t agents;
  std::string_view prefix;
  std::string_view cycle;
};

constexpr StockOrder kStock[] = {
    {"n2", 2, "1221", "221"},
    {"n3", 3, "123321", "23321"},
    {"n4", 4, "12344321", "43243314324321"},
    {"super8", 8, "abcdefghhg", "fedcbahgfedfghcebfagdhfecgfhbdegafchefgh"},
};

const StockOrder& stock(std::string_view name) {
  for (const auto& s : kStock) {
    if (s.name == name) return s;
  }
  throw std::invalid_argument("unknown stock order '" + std::string(name) + "'");
}

}  // namespace

PickingOrder fixed_order(std::string_view name) {
  const StockOrder& s = stock(name);
  return PickingOrder::periodic(parse_agent_string(s.prefix), parse_agent_string(s.cycle));
}

std::size_t fixed_order_agents(std::string_view name) { return stock(name).agents; }

Rational best_ratio_search(std::size_t n, PeriodMode mode, const Rational& tol,
                           const SearchOptions& options) {
  if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
  const auto passes = [&](const Integer& k) {
    const Rational rho = Rational(k) * tol;
    if (rho <= 1) return false;
    return covering_test(ridge_periods(n, rho, mode), options.covering).passed();
  };
  Integer lo = floor_of(options.lo / tol);
  Integer hi = ceil_of(options.hi / tol);
  if (!passes(hi)) {
    throw Error("no ridge schedule passes at ratio " + to_string(Rational(hi) * tol));
  }
  while (hi - lo > 1) {
    const Integer mid = (lo + hi) / 2;
    if (passes(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return Rational(hi) * tol;
}

}  // namespace chores
