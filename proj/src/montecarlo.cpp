#include <botecon/montecarlo.hpp>

#include <botecon/rng.hpp>

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

namespace botecon {

namespace {

struct PreparedSlot {
  int tenant = 0;
  Prob success_prob = 0;
  Money payout_on_success = 0;  // active payout times n(slot end)
};

// Everything about one rotation that does not depend on the dice.
struct PreparedSchedule {
  std::vector<PreparedSlot> slots;
  Vector base_rewards;  // per attacker: rent ledger minus renegotiation charges
};

int window_of(Days t, Days window, int n_windows) {
  const int w = static_cast<int>(std::floor(t / window));
  return std::clamp(w, 0, n_windows - 1);
}

PreparedSchedule prepare_schedule(const Scenario& s, const DefenseConfig& cfg,
                                  const AttackSchedule& sched,
                                  const TrafficProfile& base_profile,
                                  const TrafficProfile* buffered_profile) {
  PreparedSchedule prep;
  prep.base_rewards = rent_ledger(s.rents, sched);

  if (cfg.renegotiation_cost > 0) {
    // A tenant renegotiates whenever the rate of its next slot differs from
    // the rate it last traded at; the first slot is free.
    std::vector<Real> last_rate(s.n_attackers + 1, 0);
    std::vector<bool> has_prior(s.n_attackers + 1, false);
    for (const AttackSlot& slot : sched.slots) {
      const Real rate = s.rents(slot.tenant - 1, slot.landlord - 1);
      if (has_prior[slot.tenant] && rate != last_rate[slot.tenant])
        prep.base_rewards[slot.tenant - 1] -= cfg.renegotiation_cost;
      last_rate[slot.tenant] = rate;
      has_prior[slot.tenant] = true;
    }
  }

  // Adaptive response: a window is boosted when the previous window's
  // realized attack density crossed the threshold. Attacks land in the
  // window containing their end time.
  std::vector<bool> boosted;
  int n_windows = 0;
  if (cfg.adaptive) {
    n_windows = std::max(1, static_cast<int>(std::ceil(s.horizon_days / cfg.adaptive->window)));
    std::vector<int> attack_count(n_windows, 0);
    for (const AttackSlot& slot : sched.slots)
      ++attack_count[window_of(slot.end(), cfg.adaptive->window, n_windows)];
    boosted.assign(n_windows, false);
    for (int w = 1; w < n_windows; ++w)
      boosted[w] = Real(attack_count[w - 1]) / cfg.adaptive->window >
                   cfg.adaptive->attacks_per_day_threshold;
  }

  const Money payout_base = cfg.payout_split ? cfg.payout_split->realtime : s.payout_ceiling;
  const bool toggle_mode = cfg.adaptive && cfg.adaptive->toggle_buffering;
  const TrafficProfile* steady_profile =
      (cfg.buffering && !toggle_mode) ? buffered_profile : &base_profile;

  prep.slots.reserve(sched.slots.size());
  for (const AttackSlot& slot : sched.slots) {
    const bool slot_boosted =
        cfg.adaptive && boosted[window_of(slot.end(), cfg.adaptive->window, n_windows)];
    const Money payout =
        slot_boosted ? payout_base * cfg.adaptive->min_payout_multiplier : payout_base;
    const TrafficProfile* profile =
        (toggle_mode && slot_boosted) ? buffered_profile : steady_profile;
    prep.slots.push_back({slot.tenant, s.curves[slot.tenant - 1](slot.duration),
                          payout * profile->value(slot.end())});
  }
  return prep;
}

Real quantile_sorted(const std::vector<Real>& sorted, Real q) {
  const Real h = q * Real(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const Real frac = h - Real(lo);
  if (frac == 0 || lo + 1 == sorted.size()) return sorted[lo];
  return sorted[lo] + frac * (sorted[lo + 1] - sorted[lo]);
}

}  // namespace

SimulationSummary run_monte_carlo(const Scenario& s, const DefenseConfig& cfg,
                                  long trials, std::uint64_t master_seed,
                                  const SimOptions& opts) {
  validate(s);
  validate(cfg, s.n_attackers);
  require(trials >= 1, "simulation requires at least one trial");

  const Scenario eff = cfg.virtual_attacker ? apply_virtual_attacker(s, *cfg.virtual_attacker) : s;
  const int n = eff.n_attackers;

  TrafficProfile buffered;
  if (cfg.buffering)
    buffered = buffer_traffic(eff.traffic, cfg.buffering->window, cfg.buffering->duty);
  const TrafficProfile* buffered_ptr = cfg.buffering ? &buffered : nullptr;

  if (opts.markov) validate(*opts.markov, n);
  AttackSchedule uniform_sched;
  PreparedSchedule uniform_prep;
  if (!opts.markov) {
    uniform_sched = build_uniform_schedule(n, eff.horizon_days);
    uniform_prep = prepare_schedule(eff, cfg, uniform_sched, eff.traffic, buffered_ptr);
  }

  // Mirrors the expression structure of reward_target / reward_customer so a
  // degenerate run (p in {0,1}, no dice-driven defenses) reproduces the
  // analytical report bit for bit.
  const Real session_cost = eff.target_cost_mode == TargetCostMode::Consistent
                                ? eff.win_prob * eff.payout_ceiling
                                : eff.win_prob;
  const Money income_term =
      (eff.usagefee - session_cost) * integrate(eff.traffic, 0, eff.horizon_days);
  const Money customer = eff.win_prob * eff.payout_ceiling - eff.usagefee;
  const bool has_split = cfg.payout_split.has_value();
  const Money customer_realtime =
      has_split ? eff.win_prob * cfg.payout_split->realtime - eff.usagefee : 0;

  const int players = 1 + n + 1 + (has_split ? 1 : 0);
  Matrix samples(trials, players);

  const Prob void_prob = cfg.virtual_bot_fraction;
  auto run_trial = [&](long trial) {
    SplitMix64 rng(derive_seed(master_seed, static_cast<std::uint64_t>(trial)));
    AttackSchedule markov_sched;
    PreparedSchedule markov_prep;
    const PreparedSchedule* prep = &uniform_prep;
    if (opts.markov) {
      markov_sched = build_markov_schedule(n, eff.horizon_days, *opts.markov, rng);
      markov_prep = prepare_schedule(eff, cfg, markov_sched, eff.traffic, buffered_ptr);
      prep = &markov_prep;
    }

    Vector intrusion = Vector::Zero(n);
    Money target_loss = 0;
    for (const PreparedSlot& slot : prep->slots) {
      // Both draws happen for every slot, so outcomes stay coupled across
      // defense settings run on the same seed.
      const Real u_success = rng.uniform01();
      const Real u_void = rng.uniform01();
      if (u_success < slot.success_prob && !(u_void < void_prob)) {
        intrusion[slot.tenant - 1] += slot.payout_on_success;
        target_loss += slot.payout_on_success;
      }
    }

    samples(trial, 0) = income_term - target_loss;
    for (int i = 0; i < n; ++i)
      samples(trial, 1 + i) = prep->base_rewards[i] + intrusion[i];
    samples(trial, 1 + n) = customer;
    if (has_split) samples(trial, 2 + n) = customer_realtime;
  };

  const int threads = std::clamp(opts.threads, 1, 256);
  if (threads == 1 || trials < 2 * threads) {
    for (long t = 0; t < trials; ++t) run_trial(t);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const long chunk = (trials + threads - 1) / threads;
    for (int w = 0; w < threads; ++w) {
      const long begin = w * chunk;
      const long end = std::min(trials, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back([&, begin, end] {
        for (long t = begin; t < end; ++t) run_trial(t);
      });
    }
    for (auto& th : pool) th.join();
  }

  SimulationSummary summary;
  summary.trials = trials;
  summary.master_seed = master_seed;
  summary.scenario_hash = scenario_hash(s);
  summary.players.reserve(players);
  summary.players.emplace_back("target");
  for (int i = 1; i <= n; ++i) summary.players.push_back("attacker_" + std::to_string(i));
  summary.players.emplace_back("customer");
  if (has_split) summary.players.emplace_back("customer_realtime");

  summary.mean = samples.colwise().mean();
  summary.stddev = Vector::Zero(players);
  summary.q05 = Vector(players);
  summary.q50 = Vector(players);
  summary.q95 = Vector(players);
  summary.p_positive = Vector(players);
  std::vector<Real> column(trials);
  for (int p = 0; p < players; ++p) {
    if (trials > 1) {
      const Real centered = (samples.col(p).array() - summary.mean[p]).square().sum();
      summary.stddev[p] = std::sqrt(centered / Real(trials - 1));
    }
    for (long t = 0; t < trials; ++t) column[t] = samples(t, p);
    std::sort(column.begin(), column.end());
    summary.q05[p] = quantile_sorted(column, 0.05);
    summary.q50[p] = quantile_sorted(column, 0.50);
    summary.q95[p] = quantile_sorted(column, 0.95);
    summary.p_positive[p] = Real((samples.col(p).array() > 0).count()) / Real(trials);
  }
  if (opts.keep_samples) summary.samples = std::move(samples);
  return summary;
}

DefenseComparison evaluate_defense(const Scenario& s, const DefenseConfig& cfg,
                                   long trials, std::uint64_t master_seed,
                                   const SimOptions& opts) {
  DefenseComparison cmp;
  cmp.baseline = run_monte_carlo(s, DefenseConfig{}, trials, master_seed, opts);
  cmp.defended = run_monte_carlo(s, cfg, trials, master_seed, opts);

  for (const std::string& name : cmp.baseline.players) {
    const auto it = std::find(cmp.defended.players.begin(), cmp.defended.players.end(), name);
    if (it != cmp.defended.players.end()) cmp.players.push_back(name);
  }
  cmp.mean_delta = Vector(cmp.players.size());
  cmp.p_positive_delta = Vector(cmp.players.size());
  for (std::size_t k = 0; k < cmp.players.size(); ++k) {
    const auto b = std::find(cmp.baseline.players.begin(), cmp.baseline.players.end(),
                             cmp.players[k]) - cmp.baseline.players.begin();
    const auto d = std::find(cmp.defended.players.begin(), cmp.defended.players.end(),
                             cmp.players[k]) - cmp.defended.players.begin();
    cmp.mean_delta[k] = cmp.defended.mean[d] - cmp.baseline.mean[b];
    cmp.p_positive_delta[k] = cmp.defended.p_positive[d] - cmp.baseline.p_positive[b];
  }
  return cmp;
}

}  // namespace botecon
