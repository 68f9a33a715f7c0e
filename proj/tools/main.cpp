// chorepick: command-line front end. Every invocation prints one JSON report.

#include <algorithm>
#include <iostream>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chores/algchores.hpp"
#include "chores/entitle.hpp"
#include "chores/error.hpp"
#include "chores/fairness.hpp"
#include "chores/io.hpp"
#include "chores/ridge.hpp"
#include "chores/roots.hpp"
#include "chores/shares.hpp"
#include "chores/simulate.hpp"
#include "support.hpp"

namespace chorepick_cli {
namespace {

using chores::AgentId;
using chores::ChoreInstance;
using chores::CostRow;
using chores::PickingOrder;
using chores::PickingSequence;
using chores::Rational;
using chores::rational_to_json;

struct Options {
  std::optional<std::size_t> n;
  std::optional<std::size_t> m;
  std::string rho;
  std::string mode = "agent";
  std::vector<std::string> entitlements;
  std::string input;
  std::string output;
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::string tol = "1/1000";
  std::string order;
  std::string sequence;
  std::string lo;
  std::string hi;
  std::string scaling = "capped";
  std::string stage = "label_pick";
  std::optional<std::int64_t> horizon;
  std::size_t max_cost = 10;
  std::size_t max_chores = 12;
  std::size_t max_agents = 4;
  bool ido = false;
  bool no_oracles = false;
  bool tight = false;
  bool check_suffix = false;
  bool audit = false;
  std::optional<std::size_t> tension;
};

struct Outcome {
  json doc;
  int code = kOk;
};

std::size_t need(const std::optional<std::size_t>& v, const char* flag) {
  if (!v) throw std::invalid_argument(std::string(flag) + " is required");
  return *v;
}

std::vector<Rational> entitlements_or_equal(const Options& o) {
  if (!o.entitlements.empty()) {
    auto b = rational_list(o.entitlements, "--entitlements");
    if (o.n && *o.n != b.size()) {
      throw std::invalid_argument("--n disagrees with the number of --entitlements");
    }
    return b;
  }
  const std::size_t n = need(o.n, "--n or --entitlements");
  if (n == 0) throw std::invalid_argument("--n must be positive");
  return std::vector<Rational>(n, chores::ratio(1, static_cast<long>(n)));
}

// Picking sequence from --sequence, or from --order expanded to m rounds.
PickingSequence sequence_from(const Options& o, std::optional<std::size_t> m) {
  if (!o.sequence.empty()) return {chores::parse_agent_string(o.sequence)};
  if (o.order.empty()) throw std::invalid_argument("--sequence or --order is required");
  const auto named = resolve_order(o.order);
  const std::size_t len = m ? *m : need(o.m, "--m");
  if (!named.order.covers(len)) {
    throw std::invalid_argument("order defines only " + std::to_string(named.order.defined_length()) +
                                " rounds");
  }
  return chores::to_sequence(named.order, len);
}

void check_agents(const PickingSequence& seq, std::size_t n) {
  for (AgentId a : seq.pickers) {
    if (a >= n) throw std::invalid_argument("sequence names agent " + std::to_string(a + 1) +
                                            " but the instance has " + std::to_string(n));
  }
}

json verdict_json(const chores::CoveringVerdict& v) {
  json out{{"verdict", chores::to_string(v.outcome)},
           {"ridge_ok", v.ridge_ok},
           {"r", v.covering_ratio},
           {"r_exact", optional_rational(v.covering_ratio_exact)},
           {"horizon", v.horizon}};
  out["failing_k"] = v.failing_k ? json(*v.failing_k) : json(nullptr);
  return out;
}

Outcome run_gen(const Options& o) {
  const auto b = entitlements_or_equal(o);
  const std::size_t n = b.size();
  const std::size_t m = need(o.m, "--m");
  std::mt19937_64 rng(o.seed);
  std::vector<CostRow> rows(n);
  for (auto& row : rows) {
    for (std::size_t j = 0; j < m; ++j) row.emplace_back(static_cast<long>(rng() % (o.max_cost + 1)));
    if (o.ido) row = chores::sorted_desc(row);
  }
  const auto inst = ChoreInstance::create(b, rows);
  if (!o.output.empty()) chores::save_instance(inst, o.output);
  json doc = report("gen");
  doc.update(chores::instance_to_json(inst));
  doc["seed"] = o.seed;
  return {doc};
}

Outcome run_shares(const Options& o) {
  if (o.input.empty()) throw std::invalid_argument("--input is required");
  const auto inst = chores::load_instance(o.input);
  const auto rep = chores::share_report(inst, !o.no_oracles, {o.max_chores, o.max_agents});
  json agents = json::array();
  for (std::size_t i = 0; i < rep.agents.size(); ++i) {
    const auto& a = rep.agents[i];
    agents.push_back({{"agent", i + 1},
                      {"entitlement", rational_to_json(inst.entitlement(i))},
                      {"proportional", rational_to_json(a.proportional)},
                      {"chore_share", rational_to_json(a.chore_share)},
                      {"mms", optional_rational(a.mms)},
                      {"aps", optional_rational(a.aps)}});
  }
  json doc = report("shares");
  doc["input"] = o.input;
  doc["agents"] = std::move(agents);
  return {doc};
}

Outcome run_build_arbitrary(const Options& o) {
  const auto b = entitlements_or_equal(o);
  const std::size_t m = o.m.value_or(20);
  chores::ScalingFunction s = chores::ScalingFunction::linear_half();
  if (o.scaling == "capped") {
    s = chores::ScalingFunction::capped(chores::solve_t());
  } else if (o.scaling != "half") {
    throw std::invalid_argument("--scaling must be capped or half");
  }
  const auto trace = chores::build_fractional_trace(b, s);
  const auto& fa = trace.final_allocation;
  const auto rounds = chores::round_to_order(fa, b, m).expand(m);

  json first = json::array();
  for (auto f : fa.first_fractional) first.push_back(f);
  json doc = report("build");
  doc["mode"] = "arbitrary";
  doc["entitlements"] = rationals(b);
  doc["scaling"] = s.describe();
  doc["m"] = m;
  doc["order"] = chores::agent_string(rounds);
  doc["rounds"] = one_based(rounds);
  doc["trace"] = {{"sorted", one_based(trace.sorted)},
                  {"cumulative", rationals(trace.cumulative)},
                  {"proportional", matrix(trace.proportional)},
                  {"relinquished", matrix(trace.relinquished)},
                  {"rerouted", matrix(trace.rerouted)},
                  {"scaled", matrix(trace.scaled)},
                  {"final", matrix(fa.a)},
                  {"first_fractional", std::move(first)},
                  {"uses_sentinel", fa.uses_sentinel}};
  return {doc};
}

Outcome run_build_ridge(const Options& o) {
  const std::size_t n = need(o.n, "--n");
  const auto mode = chores::parse_period_mode(o.mode);
  const Rational rho = rational_flag(o.rho, "--rho");
  const std::size_t m = o.m.value_or(4 * n);
  const auto schedule = chores::ridge_periods(n, rho, mode);
  const auto verdict = chores::covering_test(schedule);

  json agents = json::array();
  for (AgentId i = 0; i < n; ++i) {
    agents.push_back({{"agent", i + 1},
                      {"class", schedule.agents[i].cls},
                      {"period", rational_to_json(schedule.agents[i].period)},
                      {"thresholds", schedule.thresholds(i, static_cast<std::int64_t>(m))}});
  }
  json doc = report("build");
  doc["mode"] = chores::to_string(mode);
  doc["n"] = n;
  doc["rho"] = rational_to_json(rho);
  doc["m"] = m;
  doc["agents"] = std::move(agents);
  doc["covering"] = verdict_json(verdict);
  const bool blocked = verdict.failing_k && *verdict.failing_k <= static_cast<std::int64_t>(m);
  if (blocked) {
    doc["order"] = nullptr;
  } else {
    const auto order = chores::synthesize_order(schedule, m);
    doc["order"] = chores::agent_string(order.expand(m));
    doc["respects_thresholds"] = chores::respects_thresholds(order, schedule, m);
  }
  return {doc};
}

Outcome run_simulate(const Options& o) {
  if (o.input.empty()) throw std::invalid_argument("--input is required");
  const auto inst = chores::load_instance(o.input);
  const std::size_t n = inst.agents();
  const std::size_t m = inst.chores();
  const auto seq = sequence_from(o, m);
  if (seq.size() != m) throw std::invalid_argument("sequence length differs from the chore count");
  check_agents(seq, n);
  const auto alloc = chores::greedy_play(seq, inst);
  const auto rounds = chores::to_order(seq).expand(m);
  const bool equal = std::all_of(inst.entitlements().begin(), inst.entitlements().end(),
                                 [&](const Rational& b) { return b == inst.entitlement(0); });

  json agents = json::array();
  for (AgentId i = 0; i < n; ++i) {
    auto bundle = alloc.bundles[i];
    std::sort(bundle.begin(), bundle.end());
    const Rational cost = alloc.cost(i, inst.costs(i));
    const Rational cs = chores::chore_share(inst.costs(i), inst.entitlement(i));
    const auto positions = chores::positions_of(rounds, i);
    json entry{{"agent", i + 1},
               {"bundle", one_based(bundle)},
               {"cost", rational_to_json(cost)},
               {"chore_share", rational_to_json(cs)},
               {"positions", one_based(positions)}};
    entry["ratio"] = cs > 0 ? rational_to_json(cost / cs) : json(nullptr);
    if (inst.is_ido()) {
      const auto norm = equal ? chores::ShareNormalization::equal(n)
                              : chores::ShareNormalization::entitled(inst.entitlement(i));
      entry["worst_case_ratio"] = rational_to_json(chores::worst_case_ratio(positions, m, norm).ratio);
    }
    agents.push_back(std::move(entry));
  }
  json doc = report("simulate");
  doc["input"] = o.input;
  doc["sequence"] = chores::agent_string(seq.pickers);
  doc["ido"] = inst.is_ido();
  doc["agents"] = std::move(agents);
  return {doc};
}

Outcome run_evaluate(const Options& o) {
  if (o.order.empty()) throw std::invalid_argument("--order is required");
  const auto named = resolve_order(o.order);
  const std::size_t n = o.n.value_or(order_agents(named));
  const std::size_t m = need(o.m, "--m");
  const auto ev = chores::evaluate_order(named.order, n, m);
  json agents = json::array();
  for (std::size_t i = 0; i < ev.agents.size(); ++i) {
    const auto& a = ev.agents[i];
    agents.push_back({{"agent", i + 1},
                      {"positions", one_based(a.positions)},
                      {"ratio", rational_to_json(a.worst.ratio)},
                      {"valuation", rationals(a.worst.valuation)}});
  }
  json doc = report("evaluate");
  doc["order"] = o.order;
  doc["definition"] = order_json(named.order);
  doc["n"] = n;
  doc["m"] = m;
  doc["ratio"] = rational_to_json(ev.ratio);
  doc["agents"] = std::move(agents);
  return {doc};
}

Outcome run_ratio_test(const Options& o) {
  const std::size_t n = need(o.n, "--n");
  const auto mode = chores::parse_period_mode(o.mode);
  const Rational rho = rational_flag(o.rho, "--rho");
  chores::CoveringOptions opts;
  opts.fallback_horizon = o.horizon;
  const auto v = chores::covering_test(chores::ridge_periods(n, rho, mode), opts);
  json doc = report("ratio-test");
  doc["n"] = n;
  doc["rho"] = rational_to_json(rho);
  doc["mode"] = chores::to_string(mode);
  doc.update(verdict_json(v));
  return {doc};
}

Outcome run_search(const Options& o) {
  const std::size_t n = need(o.n, "--n");
  const auto mode = chores::parse_period_mode(o.mode);
  const Rational tol = rational_flag(o.tol, "--tol");
  chores::SearchOptions opts;
  if (!o.lo.empty()) opts.lo = rational_flag(o.lo, "--lo");
  if (!o.hi.empty()) opts.hi = rational_flag(o.hi, "--hi");
  opts.covering.fallback_horizon = o.horizon;
  const Rational rho = chores::best_ratio_search(n, mode, tol, opts);
  json doc = report("search");
  doc["n"] = n;
  doc["mode"] = chores::to_string(mode);
  doc["tol"] = rational_to_json(tol);
  doc["rho"] = rational_to_json(rho);
  doc["rho_decimal"] = chores::to_double(rho);
  return {doc};
}

Outcome run_algchores(const Options& o) {
  std::optional<ChoreInstance> loaded;
  if (o.tight) {
    loaded = chores::tight_example(need(o.n, "--n"));
  } else {
    if (o.input.empty()) throw std::invalid_argument("--input or --tight is required");
    loaded = chores::load_instance(o.input);
  }
  const ChoreInstance& inst = *loaded;
  const std::size_t n = inst.agents();
  const auto result = chores::alg_chores(inst);

  json bundles = json::array();
  for (auto bundle : result.allocation.bundles) {
    std::sort(bundle.begin(), bundle.end());
    bundles.push_back(one_based(bundle));
  }
  json rounds = json::array();
  for (const auto& r : result.rounds) {
    json rotations = json::array();
    for (const auto& cycle : r.rotations) rotations.push_back(one_based(cycle));
    rounds.push_back({{"chore", r.chore + 1}, {"recipient", r.recipient + 1}, {"rotations", rotations}});
  }

  const Rational bound = chores::ratio(4 * static_cast<long>(n) - 1, 3 * static_cast<long>(n));
  const chores::OracleLimits limits{o.max_chores, o.max_agents};
  json agents = json::array();
  std::optional<Rational> worst_aps;
  std::optional<Rational> worst_mms;
  for (AgentId i = 0; i < n; ++i) {
    const Rational cost = result.allocation.cost(i, inst.costs(i));
    json entry{{"agent", i + 1}, {"cost", rational_to_json(cost)}};
    if (!o.no_oracles) {
      const Rational aps = chores::aps_oracle(inst.costs(i), inst.entitlement(i), limits);
      const Rational mms = chores::mms_oracle(inst.costs(i), n, limits);
      entry["aps"] = rational_to_json(aps);
      entry["mms"] = rational_to_json(mms);
      if (aps > 0 && (!worst_aps || cost / aps > *worst_aps)) worst_aps = cost / aps;
      if (mms > 0 && (!worst_mms || cost / mms > *worst_mms)) worst_mms = cost / mms;
    }
    agents.push_back(std::move(entry));
  }
  json doc = report("algchores");
  doc["source"] = o.tight ? json("tight_example") : json(o.input);
  doc["instance"] = chores::instance_to_json(inst);
  doc["bundles"] = std::move(bundles);
  doc["rounds"] = std::move(rounds);
  doc["agents"] = std::move(agents);
  doc["bound"] = rational_to_json(bound);
  if (!o.no_oracles) {
    doc["max_ratio_aps"] = optional_rational(worst_aps);
    doc["max_ratio_mms"] = optional_rational(worst_mms);
    doc["within_bound"] = !worst_aps || *worst_aps <= bound;
  }
  return {doc};
}

Outcome run_envy_suffix(const Options& o) {
  const auto seq = sequence_from(o, o.m);
  std::size_t n = 0;
  for (AgentId a : seq.pickers) n = std::max(n, a + 1);
  n = o.n.value_or(n);
  check_agents(seq, n);
  json pairs = json::array();
  bool all = true;
  for (AgentId i = 0; i < n; ++i) {
    for (AgentId j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto c = chores::suffix_envy_condition(seq, i, j);
      all = all && c.holds;
      json entry{{"i", i + 1}, {"j", j + 1}, {"holds", c.holds}};
      entry["suffix_length"] = c.suffix_length ? json(*c.suffix_length) : json(nullptr);
      entry["witness"] = c.holds ? json(nullptr) : rationals(c.witness);
      pairs.push_back(std::move(entry));
    }
  }
  json doc = report("envy");
  doc["check"] = "suffix";
  doc["sequence"] = chores::agent_string(seq.pickers);
  doc["agents"] = n;
  doc["envy_free"] = all;
  doc["pairs"] = std::move(pairs);
  return {doc};
}

Outcome run_envy_audit(const Options& o) {
  if (o.input.empty()) throw std::invalid_argument("--audit needs --input");
  const auto inst = chores::load_instance(o.input);
  const auto seq = sequence_from(o, inst.chores());
  if (seq.size() != inst.chores()) {
    throw std::invalid_argument("sequence length differs from the chore count");
  }
  check_agents(seq, inst.agents());
  const auto stage = chores::parse_label_stage(o.stage);
  const auto audit = chores::ef_ra_audit(seq, stage, inst.costs(), inst.entitlements());
  const auto sample = chores::preliminary_stage(stage, seq, inst.costs(), inst.entitlements(), o.seed);

  json agents = json::array();
  for (std::size_t i = 0; i < audit.agents.size(); ++i) {
    const auto& a = audit.agents[i];
    agents.push_back({{"agent", i + 1},
                      {"proportional", rational_to_json(a.proportional)},
                      {"label_mean", rational_to_json(a.label_mean)},
                      {"expected", rational_to_json(a.expected)},
                      {"dominates_uniform", a.dominates_uniform}});
  }
  json doc = report("envy");
  doc["check"] = "audit";
  doc["stage"] = chores::to_string(stage);
  doc["sequence"] = chores::agent_string(seq.pickers);
  doc["outcomes"] = audit.outcomes;
  doc["mean_equals_proportional"] = audit.mean_equals_proportional;
  doc["dominance"] = audit.dominance;
  doc["no_ex_ante_envy"] = audit.no_ex_ante_envy;
  doc["all_below_proportional_ex_post"] = audit.all_below_proportional_ex_post;
  doc["agents"] = std::move(agents);
  doc["seed"] = o.seed;
  doc["sampled_labels"] = one_based(sample);
  return {doc};
}

Outcome run_envy_tension(const Options& o) {
  const auto ex = chores::envy_tension_example(*o.tension);
  json doc = report("envy");
  doc["check"] = "tension";
  doc["n"] = *o.tension;
  doc["k"] = ex.k;
  doc["instance"] = chores::instance_to_json(ex.instance);
  doc["aps_bound"] = rational_to_json(ex.aps_bound);
  if (!o.no_oracles) {
    const chores::OracleLimits limits{o.max_chores, std::max(o.max_agents, ex.instance.agents())};
    doc["aps_first"] =
        rational_to_json(chores::aps_oracle(ex.instance.costs(0), ex.instance.entitlement(0), limits));
  }
  if (!o.sequence.empty() || !o.order.empty()) {
    const auto seq = sequence_from(o, ex.instance.chores());
    check_agents(seq, ex.instance.agents());
    const auto a = chores::analyze_tension(ex, seq);
    doc["analysis"] = {{"sequence", chores::agent_string(seq.pickers)},
                       {"no_envy_toward_first", a.no_envy_toward_first},
                       {"first_guarantee", rational_to_json(a.first_guarantee)},
                       {"ratio_lower_bound", rational_to_json(a.ratio_lower_bound)}};
  }
  return {doc};
}

Outcome run_envy(const Options& o) {
  const int chosen = int{o.check_suffix} + int{o.audit} + int{o.tension.has_value()};
  if (chosen != 1) {
    throw std::invalid_argument("choose exactly one of --check-suffix, --audit, --tension-example");
  }
  if (o.check_suffix) return run_envy_suffix(o);
  if (o.audit) return run_envy_audit(o);
  return run_envy_tension(o);
}

Outcome run_verify(const Options& o) {
  const auto b = entitlements_or_equal(o);
  chores::GuaranteeOptions opts;
  opts.trials = o.trials;
  opts.seed = o.seed;
  opts.max_chores = o.m.value_or(40);
  const auto r = chores::verify_guarantee(b, opts);
  json doc = report("verify");
  doc["entitlements"] = rationals(b);
  doc["trials"] = r.trials;
  doc["seed"] = o.seed;
  doc["max_chores"] = opts.max_chores;
  doc["t"] = rational_to_json(r.t);
  doc["bound"] = rational_to_json(r.bound);
  doc["bound_decimal"] = chores::to_double(r.bound);
  doc["max_simulated"] = rational_to_json(r.max_simulated);
  doc["max_adversarial"] = rational_to_json(r.max_adversarial);
  doc["holds"] = r.holds();
  return {doc, r.holds() ? kOk : kGuaranteeViolation};
}

json error_doc(const std::string& command, const std::string& kind, const std::string& message) {
  json doc = report(command);
  doc["error"] = {{"kind", kind}, {"message", message}};
  return doc;
}

int emit(const json& doc, int code) {
  std::cout << doc.dump(2) << '\n';
  return code;
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"Picking sequences for chores: shares, orders, covering tests and audits", "chorepick"};
  app.require_subcommand(1);
  Options o;

  auto add_n = [&](CLI::App* s) { s->add_option("--n", o.n, "Number of agents"); };
  auto add_m = [&](CLI::App* s) { s->add_option("--m", o.m, "Number of chores (rounds)"); };
  auto add_seed = [&](CLI::App* s) { s->add_option("--seed", o.seed, "Random seed")->capture_default_str(); };
  auto add_entitlements = [&](CLI::App* s) {
    s->add_option("--entitlements", o.entitlements, "Comma-separated entitlements (p/q or decimal)")
        ->delimiter(',');
  };
  auto add_order = [&](CLI::App* s) {
    s->add_option("--order", o.order, "n2|n3|n4|super8 or a path to an order file");
  };
  auto add_limits = [&](CLI::App* s) {
    s->add_option("--max-chores", o.max_chores, "Share oracle chore limit")->capture_default_str();
    s->add_option("--max-agents", o.max_agents, "Share oracle agent limit")->capture_default_str();
    s->add_flag("--no-oracles", o.no_oracles, "Skip exact MMS/APS computation");
  };

  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  add_n(gen);
  add_m(gen);
  add_seed(gen);
  add_entitlements(gen);
  gen->add_option("--max-cost", o.max_cost, "Largest integer cost")->capture_default_str();
  gen->add_flag("--ido", o.ido, "Sort every row nonincreasing");
  gen->add_option("--output", o.output, "Also write the instance to this file");

  auto* shares = app.add_subcommand("shares", "Proportional, chore, MMS and APS shares");
  shares->add_option("--input", o.input, "Instance JSON file");
  add_limits(shares);

  auto* build = app.add_subcommand("build", "Build a picking order");
  build->add_option("--mode", o.mode, "arbitrary, or agent|super for ridge orders")->capture_default_str();
  add_n(build);
  add_m(build);
  add_entitlements(build);
  build->add_option("--rho", o.rho, "Target ratio for ridge orders");
  build->add_option("--scaling", o.scaling, "capped|half")->capture_default_str();

  auto* simulate = app.add_subcommand("simulate", "Greedy play of an order on an instance");
  simulate->add_option("--input", o.input, "Instance JSON file");
  add_order(simulate);
  simulate->add_option("--sequence", o.sequence, "Picking sequence, e.g. 1221");

  auto* evaluate = app.add_subcommand("evaluate", "Exact worst-case ratio of an order");
  add_order(evaluate);
  add_n(evaluate);
  add_m(evaluate);

  auto* ratio_test = app.add_subcommand("ratio-test", "Covering test for ridge thresholds");
  add_n(ratio_test);
  ratio_test->add_option("--rho", o.rho, "Target ratio");
  ratio_test->add_option("--mode", o.mode, "agent|super")->capture_default_str();
  ratio_test->add_option("--horizon", o.horizon, "Scan horizon when the covering ratio is one");

  auto* search = app.add_subcommand("search", "Smallest passing ratio on a tolerance grid");
  add_n(search);
  search->add_option("--mode", o.mode, "agent|super")->capture_default_str();
  search->add_option("--tol", o.tol, "Grid step")->capture_default_str();
  search->add_option("--lo", o.lo, "Lower end of the bracket");
  search->add_option("--hi", o.hi, "Upper end of the bracket");
  search->add_option("--horizon", o.horizon, "Scan horizon when the covering ratio is one");

  auto* alg = app.add_subcommand("algchores", "Envy-cycle allocation with share ratios");
  alg->add_option("--input", o.input, "Instance JSON file");
  alg->add_flag("--tight", o.tight, "Use the tight example for --n agents");
  add_n(alg);
  add_limits(alg);

  auto* envy = app.add_subcommand("envy", "Envy checks for picking sequences");
  envy->add_flag("--check-suffix", o.check_suffix, "Suffix condition for every ordered pair");
  envy->add_flag("--audit", o.audit, "Ex-ante audit of a label stage");
  envy->add_option("--tension-example", o.tension, "Envy versus share example for n agents");
  envy->add_option("--input", o.input, "Instance JSON file (audit)");
  envy->add_option("--stage", o.stage, "random_bijection|label_pick|prsd")->capture_default_str();
  envy->add_option("--sequence", o.sequence, "Picking sequence, e.g. 1221");
  add_order(envy);
  add_n(envy);
  add_m(envy);
  add_seed(envy);
  add_limits(envy);

  auto* verify = app.add_subcommand("verify", "Randomized check of the entitlement guarantee");
  add_entitlements(verify);
  add_n(verify);
  add_m(verify);
  add_seed(verify);
  verify->add_option("--trials", o.trials, "Cost rows per run")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return emit(error_doc("", "usage", e.what()), kUsage);
  }

  const CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  try {
    Outcome out;
    if (sub == gen) {
      out = run_gen(o);
    } else if (sub == shares) {
      out = run_shares(o);
    } else if (sub == build) {
      out = o.mode == "arbitrary" ? run_build_arbitrary(o) : run_build_ridge(o);
    } else if (sub == simulate) {
      out = run_simulate(o);
    } else if (sub == evaluate) {
      out = run_evaluate(o);
    } else if (sub == ratio_test) {
      out = run_ratio_test(o);
    } else if (sub == search) {
      out = run_search(o);
    } else if (sub == alg) {
      out = run_algchores(o);
    } else if (sub == envy) {
      out = run_envy(o);
    } else {
      out = run_verify(o);
    }
    return emit(out.doc, out.code);
  } catch (const chores::FileError& e) {
    return emit(error_doc(name, "file", e.what()), kFile);
  } catch (const chores::SizeGuardError& e) {
    return emit(error_doc(name, "size_guard", e.what()), kSizeGuard);
  } catch (const chores::SchemaError& e) {
    return emit(error_doc(name, "instance", e.what()), kInstance);
  } catch (const chores::InstanceError& e) {
    return emit(error_doc(name, "instance", e.what()), kInstance);
  } catch (const chores::Error& e) {
    return emit(error_doc(name, "computation", e.what()), kComputation);
  } catch (const std::invalid_argument& e) {
    return emit(error_doc(name, "usage", e.what()), kUsage);
  } catch (const std::out_of_range& e) {
    return emit(error_doc(name, "usage", e.what()), kUsage);
  }
}

}  // namespace chorepick_cli

int main(int argc, char** argv) { return chorepick_cli::run(argc, argv); }
