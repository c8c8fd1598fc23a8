// botecon — command-line front end for the botnet rental economy model:
// break-even and saddle analysis, seeded Monte Carlo simulation, parameter
// sweeps and defense comparisons, with reproducible JSON/CSV output.

#include <botecon/analysis.hpp>
#include <botecon/io.hpp>
#include <botecon/montecarlo.hpp>
#include <botecon/version.hpp>

#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <map>
#include <sstream>

namespace {

using namespace botecon;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;

struct CommonOptions {
  std::string scenario_path;
  std::string defense_path;
  std::string out_path;
  std::string format;  // resolved per command when empty
  std::string sweep_spec;
  std::uint64_t seed = kDefaultSeed;
  long trials = 0;  // 0 means "not given"
  int threads = 1;
  int grid_points = 1000;
  double tau_max = 0;  // 0 means "scenario horizon"
};

void emit(const CommonOptions& opt, const std::string& content) {
  if (opt.out_path.empty()) {
    std::cout << content;
  } else {
    write_text_file(opt.out_path, content);
  }
}

std::string resolve_format(const CommonOptions& opt, const char* fallback) {
  const std::string format = opt.format.empty() ? fallback : opt.format;
  if (format != "json" && format != "csv")
    throw std::invalid_argument("--format must be json or csv");
  return format;
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string row;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (k) row += ',';
    row += cells[k];
  }
  row += '\n';
  return row;
}

// ---------------------------------------------------------------- analyze --

int run_analyze(const CommonOptions& opt) {
  const Scenario s = load_scenario(opt.scenario_path);
  if (s.n_attackers < 2)
    throw std::invalid_argument("analyze requires at least two attackers");
  if (!(s.usagefee_max >= 0 && s.min_payout >= s.usagefee_max)) {
    std::cerr << "error: constraint violated: C_min >= usagefee_max >= 0 is required "
                 "for max-min/min-max analysis\n";
    return kExitInfeasible;
  }

  const std::string hash = scenario_hash(s);
  const AttackSchedule rotation = build_uniform_schedule(s.n_attackers, s.horizon_days);
  const SearchOptions search{0, opt.tau_max > 0 ? opt.tau_max : s.horizon_days,
                             opt.grid_points};

  bool any_infeasible = false;
  struct PerAttacker {
    BreakEvenResult breakeven;
    SaddleResult maxmin;
    SaddleResult minmax;
  };
  std::vector<PerAttacker> rows;
  rows.reserve(s.n_attackers);
  for (int i = 1; i <= s.n_attackers; ++i) {
    PerAttacker row{breakeven_success_prob(i, s), maxmin_attacker(i, s, search),
                    minmax_attacker(i, s, search)};
    any_infeasible = any_infeasible || !row.breakeven.feasible;
    rows.push_back(std::move(row));
  }
  const Money fee = breakeven_usagefee(s, rotation);

  // Viability bound from the observed market: the highest advertised rate
  // against the payout ceiling, at the quietest first-attack instant.
  json bound = nullptr;
  Money max_rate = 0;
  for (Index i = 0; i < s.rents.rows(); ++i)
    for (Index j = 0; j < s.rents.cols(); ++j)
      if (i != j) max_rate = std::max(max_rate, s.rents(i, j));
  Real reference_customers = std::numeric_limits<Real>::infinity();
  for (int i = 1; i <= s.n_attackers; ++i) {
    const Days t_end = uniform_first_slot_start(s, i) + uniform_slot_length(s);
    reference_customers = std::min(reference_customers, s.traffic.value(t_end));
  }
  if (s.payout_ceiling > 0 && reference_customers > 0) {
    const Real ratio = max_rate / s.payout_ceiling;
    bound = json{{"rent_rate_per_day", max_rate},
                 {"payout_ceiling", s.payout_ceiling},
                 {"ratio", ratio},
                 {"ratio_floor", std::floor(ratio)},
                 {"reference_customers", reference_customers},
                 {"min_n", min_attackers(max_rate, s.payout_ceiling, s.horizon_days,
                                         reference_customers)}};
  }

  const std::string format = resolve_format(opt, "json");
  if (format == "json") {
    json attackers = json::array();
    for (int i = 0; i < s.n_attackers; ++i)
      attackers.push_back({{"id", i + 1},
                           {"breakeven", to_json(rows[i].breakeven)},
                           {"maxmin", to_json(rows[i].maxmin, false)},
                           {"minmax", to_json(rows[i].minmax, false)}});
    const json out{{"command", "analyze"},
                   {"tool_version", kToolVersion},
                   {"scenario_hash", hash},
                   {"seed", opt.seed},
                   {"grid_points", opt.grid_points},
                   {"target", {{"breakeven_usagefee", fee}}},
                   {"attackers", attackers},
                   {"min_attackers", bound}};
    emit(opt, out.dump(2) + "\n");
  } else {
    std::string csv = csv_row({"player", "metric", "value", "scenario_hash", "seed",
                               "tool_version"});
    const std::string seed_str = std::to_string(opt.seed);
    auto add = [&](const std::string& player, const std::string& metric, Real value) {
      csv += csv_row({player, metric, format_g9(value), hash, seed_str, kToolVersion});
    };
    add("target", "breakeven_usagefee", fee);
    for (int i = 0; i < s.n_attackers; ++i) {
      const std::string player = "attacker_" + std::to_string(i + 1);
      add(player, "breakeven_required_success_prob", rows[i].breakeven.required_success_prob);
      add(player, "breakeven_feasible", rows[i].breakeven.feasible ? 1 : 0);
      add(player, "net_rent_paid", rows[i].breakeven.net_rent_paid);
      add(player, "slack_vs_bound", rows[i].breakeven.slack_vs_bound);
      add(player, "maxmin_duration_days", rows[i].maxmin.duration);
      add(player, "maxmin_value", rows[i].maxmin.value);
      add(player, "minmax_duration_days", rows[i].minmax.duration);
      add(player, "minmax_value", rows[i].minmax.value);
    }
    if (!bound.is_null()) {
      add("market", "rent_ratio", bound["ratio"].get<Real>());
      add("market", "rent_ratio_floor", bound["ratio_floor"].get<Real>());
      add("market", "min_attackers", bound["min_n"].get<Real>());
    }
    emit(opt, csv);
  }
  return any_infeasible ? kExitInfeasible : kExitOk;
}

// --------------------------------------------------------------- simulate --

DefenseConfig load_defense_or_empty(const CommonOptions& opt, int n_attackers) {
  if (opt.defense_path.empty()) return DefenseConfig{};
  return load_defense(opt.defense_path, n_attackers);
}

int run_simulate(const CommonOptions& opt) {
  const Scenario s = load_scenario(opt.scenario_path);
  const DefenseConfig cfg = load_defense_or_empty(opt, s.n_attackers);
  const long trials = opt.trials > 0 ? opt.trials : 1000;
  SimOptions sim;
  sim.threads = opt.threads;
  const SimulationSummary summary = run_monte_carlo(s, cfg, trials, opt.seed, sim);

  const std::string format = resolve_format(opt, "json");
  if (format == "json") {
    json out = to_json(summary);
    out["command"] = "simulate";
    out["tool_version"] = kToolVersion;
    if (!opt.defense_path.empty()) out["defense"] = to_json(cfg);
    emit(opt, out.dump(2) + "\n");
  } else {
    std::string csv = csv_row({"player", "metric", "value", "trials", "seed",
                               "scenario_hash", "tool_version"});
    const std::string trials_str = std::to_string(summary.trials);
    const std::string seed_str = std::to_string(summary.master_seed);
    const char* metrics[6] = {"mean", "stddev", "q05", "q50", "q95", "p_positive"};
    const Vector* stats[6] = {&summary.mean, &summary.stddev, &summary.q05,
                              &summary.q50,  &summary.q95,    &summary.p_positive};
    for (std::size_t p = 0; p < summary.players.size(); ++p)
      for (int m = 0; m < 6; ++m)
        csv += csv_row({summary.players[p], metrics[m],
                        format_g9((*stats[m])[static_cast<Index>(p)]), trials_str, seed_str,
                        summary.scenario_hash, kToolVersion});
    emit(opt, csv);
  }
  return kExitOk;
}

// ------------------------------------------------------------------ sweep --

struct SweepValues {
  std::string parameter;
  std::vector<Real> values;
};

SweepValues parse_sweep(const std::string& spec) {
  const auto eq = spec.find('=');
  if (eq == std::string::npos || eq == 0)
    throw std::invalid_argument("--sweep expects param=start:stop:steps or param=v1,v2,...");
  SweepValues sweep;
  sweep.parameter = spec.substr(0, eq);
  const std::string rhs = spec.substr(eq + 1);
  if (rhs.find(':') != std::string::npos) {
    Real start = 0, stop = 0;
    long steps = 0;
    char c1 = 0, c2 = 0;
    std::istringstream in(rhs);
    in >> start >> c1 >> stop >> c2 >> steps;
    if (in.fail() || c1 != ':' || c2 != ':' || steps < 1 || in.peek() != EOF)
      throw std::invalid_argument("--sweep range must be start:stop:steps with steps >= 1");
    for (long k = 0; k < steps; ++k)
      sweep.values.push_back(steps == 1 ? start
                                        : start + Real(k) * (stop - start) / Real(steps - 1));
  } else {
    std::istringstream in(rhs);
    std::string token;
    while (std::getline(in, token, ',')) {
      if (token.empty()) throw std::invalid_argument("--sweep list has an empty value");
      sweep.values.push_back(std::stod(token));
    }
    if (sweep.values.empty()) throw std::invalid_argument("--sweep needs at least one value");
  }
  for (Real v : sweep.values) require_finite(v, "sweep value");
  return sweep;
}

using ParamSetter = std::function<void(Scenario&, DefenseConfig&, Real)>;

void need_config(bool ok, const char* what) {
  if (!ok)
    throw std::invalid_argument(std::string("sweep parameter requires a defense file with ") +
                                what + " configured");
}

const std::map<std::string, ParamSetter>& parameter_registry() {
  static const std::map<std::string, ParamSetter> registry = {
      {"scenario.usagefee", [](Scenario& s, DefenseConfig&, Real v) { s.usagefee = v; }},
      {"scenario.usagefee_max", [](Scenario& s, DefenseConfig&, Real v) { s.usagefee_max = v; }},
      {"scenario.p_win", [](Scenario& s, DefenseConfig&, Real v) { s.win_prob = v; }},
      {"scenario.C", [](Scenario& s, DefenseConfig&, Real v) { s.payout_ceiling = v; }},
      {"scenario.C_min", [](Scenario& s, DefenseConfig&, Real v) { s.min_payout = v; }},
      {"defense.virtual_bot_fraction",
       [](Scenario&, DefenseConfig& d, Real v) { d.virtual_bot_fraction = v; }},
      {"defense.renegotiation_cost",
       [](Scenario&, DefenseConfig& d, Real v) { d.renegotiation_cost = v; }},
      {"defense.buffering.duty",
       [](Scenario&, DefenseConfig& d, Real v) {
         need_config(d.buffering.has_value(), "buffering");
         d.buffering->duty = v;
       }},
      {"defense.buffering.window_days",
       [](Scenario&, DefenseConfig& d, Real v) {
         need_config(d.buffering.has_value(), "buffering");
         d.buffering->window = v;
       }},
      {"defense.payout_split.realtime",
       [](Scenario&, DefenseConfig& d, Real v) {
         need_config(d.payout_split.has_value(), "payout_split");
         d.payout_split->realtime = v;
       }},
      {"defense.payout_split.deferred",
       [](Scenario&, DefenseConfig& d, Real v) {
         need_config(d.payout_split.has_value(), "payout_split");
         d.payout_split->deferred = v;
       }},
      {"defense.adaptive_policy.min_payout_multiplier",
       [](Scenario&, DefenseConfig& d, Real v) {
         need_config(d.adaptive.has_value(), "adaptive_policy");
         d.adaptive->min_payout_multiplier = v;
       }},
  };
  return registry;
}

struct SweepRow {
  Real value = 0;
  std::string player;
  Real mean = 0, stddev = 0, q05 = 0, q50 = 0, q95 = 0, p_positive = 0;
};

int run_sweep(const CommonOptions& opt) {
  const Scenario base = load_scenario(opt.scenario_path);
  const DefenseConfig base_cfg = load_defense_or_empty(opt, base.n_attackers);
  const SweepValues sweep = parse_sweep(opt.sweep_spec);

  const auto& registry = parameter_registry();
  const auto setter = registry.find(sweep.parameter);
  if (setter == registry.end()) {
    std::string known;
    for (const auto& [name, fn] : registry) known += " " + name;
    throw std::invalid_argument("unknown sweep parameter \"" + sweep.parameter +
                                "\"; known parameters:" + known);
  }
  const bool monte_carlo = opt.trials > 0;
  if (!monte_carlo && (!opt.defense_path.empty() || sweep.parameter.rfind("defense.", 0) == 0))
    throw std::invalid_argument(
        "sweeping defense settings needs Monte Carlo trials; pass --trials");

  std::vector<SweepRow> rows;
  for (Real value : sweep.values) {
    Scenario s = base;
    DefenseConfig cfg = base_cfg;
    setter->second(s, cfg, value);
    validate(s);
    validate(cfg, s.n_attackers);

    if (monte_carlo) {
      SimOptions sim;
      sim.threads = opt.threads;
      const SimulationSummary sum = run_monte_carlo(s, cfg, opt.trials, opt.seed, sim);
      for (std::size_t p = 0; p < sum.players.size(); ++p) {
        const auto k = static_cast<Index>(p);
        rows.push_back({value, sum.players[p], sum.mean[k], sum.stddev[k], sum.q05[k],
                        sum.q50[k], sum.q95[k], sum.p_positive[k]});
      }
    } else {
      // Deterministic expected-mode report; no attacks happen with a single
      // attacker (the rotation needs a counterparty).
      const AttackSchedule sched = s.n_attackers >= 2
                                       ? build_uniform_schedule(s.n_attackers, s.horizon_days)
                                       : AttackSchedule{};
      const RewardReport report = reward_report(s, sched);
      auto push = [&](const std::string& player, Money reward) {
        rows.push_back({value, player, reward, 0, reward, reward, reward,
                        reward > 0 ? Real(1) : Real(0)});
      };
      push("target", report.target);
      for (int i = 0; i < s.n_attackers; ++i)
        push("attacker_" + std::to_string(i + 1), report.attackers[i]);
      push("customer", report.per_customer);
    }
  }

  const std::string hash = scenario_hash(base);
  const std::string trials_str = std::to_string(monte_carlo ? opt.trials : 0);
  const std::string seed_str = std::to_string(opt.seed);
  const std::string format = resolve_format(opt, "csv");
  if (format == "csv") {
    std::string csv = csv_row({"sweep_param", "sweep_value", "player", "mean", "stddev",
                               "q05", "q50", "q95", "p_positive", "trials", "seed",
                               "scenario_hash", "tool_version"});
    for (const SweepRow& row : rows)
      csv += csv_row({sweep.parameter, format_g9(row.value), row.player, format_g9(row.mean),
                      format_g9(row.stddev), format_g9(row.q05), format_g9(row.q50),
                      format_g9(row.q95), format_g9(row.p_positive), trials_str, seed_str,
                      hash, kToolVersion});
    emit(opt, csv);
  } else {
    json arr = json::array();
    for (const SweepRow& row : rows)
      arr.push_back({{"sweep_value", row.value},
                     {"player", row.player},
                     {"mean", row.mean},
                     {"stddev", row.stddev},
                     {"q05", row.q05},
                     {"q50", row.q50},
                     {"q95", row.q95},
                     {"p_positive", row.p_positive}});
    const json out{{"command", "sweep"},
                   {"tool_version", kToolVersion},
                   {"scenario_hash", hash},
                   {"seed", opt.seed},
                   {"trials", monte_carlo ? opt.trials : 0},
                   {"sweep_param", sweep.parameter},
                   {"rows", arr}};
    emit(opt, out.dump(2) + "\n");
  }
  return kExitOk;
}

// --------------------------------------------------------- defense-compare --

int run_defense_compare(const CommonOptions& opt) {
  const Scenario s = load_scenario(opt.scenario_path);
  if (opt.defense_path.empty()) throw std::invalid_argument("--defense is required");
  const DefenseConfig cfg = load_defense(opt.defense_path, s.n_attackers);
  const long trials = opt.trials > 0 ? opt.trials : 1000;
  SimOptions sim;
  sim.threads = opt.threads;
  const DefenseComparison cmp = evaluate_defense(s, cfg, trials, opt.seed, sim);

  const std::string format = resolve_format(opt, "json");
  if (format == "json") {
    json out = to_json(cmp);
    out["command"] = "defense-compare";
    out["tool_version"] = kToolVersion;
    out["scenario_hash"] = cmp.baseline.scenario_hash;
    out["seed"] = opt.seed;
    out["trials"] = trials;
    out["defense"] = to_json(cfg);
    emit(opt, out.dump(2) + "\n");
  } else {
    std::string csv = csv_row({"player", "metric", "baseline", "defended", "delta", "trials",
                               "seed", "scenario_hash", "tool_version"});
    const std::string trials_str = std::to_string(trials);
    const std::string seed_str = std::to_string(opt.seed);
    for (std::size_t k = 0; k < cmp.players.size(); ++k) {
      const auto b = static_cast<Index>(std::find(cmp.baseline.players.begin(),
                                                  cmp.baseline.players.end(), cmp.players[k]) -
                                        cmp.baseline.players.begin());
      const auto d = static_cast<Index>(std::find(cmp.defended.players.begin(),
                                                  cmp.defended.players.end(), cmp.players[k]) -
                                        cmp.defended.players.begin());
      const auto idx = static_cast<Index>(k);
      csv += csv_row({cmp.players[k], "mean_reward", format_g9(cmp.baseline.mean[b]),
                      format_g9(cmp.defended.mean[d]), format_g9(cmp.mean_delta[idx]),
                      trials_str, seed_str, cmp.baseline.scenario_hash, kToolVersion});
      csv += csv_row({cmp.players[k], "p_positive", format_g9(cmp.baseline.p_positive[b]),
                      format_g9(cmp.defended.p_positive[d]),
                      format_g9(cmp.p_positive_delta[idx]), trials_str, seed_str,
                      cmp.baseline.scenario_hash, kToolVersion});
    }
    emit(opt, csv);
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"botecon — botnet rental economy analyzer and simulator"};
  app.require_subcommand(1);
  CommonOptions opt;

  auto add_common = [&](CLI::App* cmd, bool with_defense, bool with_trials) {
    cmd->add_option("--scenario", opt.scenario_path, "Scenario JSON file")->required();
    cmd->add_option("--seed", opt.seed, "Master seed (fixed default for reproducibility)");
    cmd->add_option("--out", opt.out_path, "Output file (stdout when omitted)");
    cmd->add_option("--format", opt.format, "Output format: json or csv");
    if (with_defense) cmd->add_option("--defense", opt.defense_path, "Defense JSON file");
    if (with_trials) {
      cmd->add_option("--trials", opt.trials, "Monte Carlo trials");
      cmd->add_option("--threads", opt.threads, "Worker threads (output is identical)");
    }
  };

  CLI::App* analyze =
      app.add_subcommand("analyze", "Break-even and max-min/min-max analysis");
  add_common(analyze, false, false);
  analyze->add_option("--grid", opt.grid_points, "Saddle search grid resolution");
  analyze->add_option("--tau-max", opt.tau_max, "Upper end of the duration search");

  CLI::App* simulate = app.add_subcommand("simulate", "Seeded Monte Carlo simulation");
  add_common(simulate, true, true);

  CLI::App* sweep =
      app.add_subcommand("sweep", "Sweep one parameter, one row per value and player");
  add_common(sweep, true, true);
  sweep->add_option("--sweep", opt.sweep_spec, "param=start:stop:steps or param=v1,v2,...")
      ->required();

  CLI::App* compare =
      app.add_subcommand("defense-compare", "Baseline vs defended simulation deltas");
  add_common(compare, true, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (opt.trials < 0 || (simulate->count("--trials") + sweep->count("--trials") +
                               compare->count("--trials") > 0 &&
                           opt.trials == 0))
      throw std::invalid_argument("--trials must be a positive integer");
    if (opt.threads < 1) throw std::invalid_argument("--threads must be a positive integer");
    if (analyze->parsed()) return run_analyze(opt);
    if (simulate->parsed()) return run_simulate(opt);
    if (sweep->parsed()) return run_sweep(opt);
    if (compare->parsed()) return run_defense_compare(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
