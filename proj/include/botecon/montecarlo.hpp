#pragma once

#include <botecon/defense.hpp>
#include <botecon/rewards.hpp>
#include <botecon/schedule.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace botecon {

struct SimOptions {
  int threads = 1;
  bool keep_samples = false;           // retain the trials x players sample matrix
  std::optional<MarkovSpec> markov;    // sample a fresh rotation per trial
};

/// Realized-reward distribution over seeded trials. Players are listed as
/// "target", "attacker_1".."attacker_N", "customer" and, when a payout split
/// is active, "customer_realtime" (the per-session reward if winners only
/// ever saw the real-time payout). Identical inputs give identical summaries
/// regardless of thread count.
struct SimulationSummary {
  long trials = 0;
  std::uint64_t master_seed = 0;
  std::string scenario_hash;
  std::vector<std::string> players;
  Vector mean;
  Vector stddev;
  Vector q05, q50, q95;
  Vector p_positive;  // fraction of trials with reward > 0
  Matrix samples;     // empty unless SimOptions::keep_samples
};

/// Runs seeded trials of the game. Each trial draws its own stream from
/// (master_seed, trial index); per slot the intrusion succeeds with
/// probability p(tenant, duration) and is then voided with probability
/// virtual_bot_fraction (rent is paid regardless). Successful, un-voided
/// intrusions transfer the active payout (the real-time split value when
/// configured, else the ceiling, times any adaptive multiplier) times
/// n(slot end) from the target to the tenant.
SimulationSummary run_monte_carlo(const Scenario& s, const DefenseConfig& cfg,
                                  long trials, std::uint64_t master_seed,
                                  const SimOptions& opts = {});

/// Baseline (no defenses) vs defended runs on the same master seed.
struct DefenseComparison {
  SimulationSummary baseline;
  SimulationSummary defended;
  std::vector<std::string> players;  // players present in both runs
  Vector mean_delta;                 // defended minus baseline
  Vector p_positive_delta;
};

DefenseComparison evaluate_defense(const Scenario& s, const DefenseConfig& cfg,
                                   long trials, std::uint64_t master_seed,
                                   const SimOptions& opts = {});

}  // namespace botecon
