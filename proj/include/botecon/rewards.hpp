#pragma once

#include <botecon/scenario.hpp>
#include <botecon/schedule.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace botecon {

struct ReportMeta {
  std::string scenario_hash;
  TargetCostMode target_cost_mode = TargetCostMode::AsWritten;
  IntrusionCostMode intrusion_cost_mode = IntrusionCostMode::WorstCase;
  std::optional<std::uint64_t> seed;  // set when the schedule was sampled
};

/// Cumulated rewards over the horizon: the target, each attacker (index i-1
/// for attacker i), and the net reward of one paying customer per session.
struct RewardReport {
  Money target = 0;
  Vector attackers;
  Money per_customer = 0;
  ReportMeta meta;
};

/// Net reward of one paying customer per game session:
/// win probability times the payout ceiling, minus the usage fee.
Money reward_customer(const Scenario& s);

/// Target reward over the horizon: session income across all traffic minus
/// the intrusion cost of every attack slot (full ceiling per slot in
/// worst-case mode, success-probability scaled in expected mode).
Money reward_target(const Scenario& s, const AttackSchedule& sched);

/// Attacker reward: net rent flows from walking the slots, plus the expected
/// intrusion income p(duration) * C * n(slot end) over the attacker's slots.
Money reward_attacker(int attacker, const Scenario& s, const AttackSchedule& sched);

/// Bundles the three reward functionals into one report.
RewardReport reward_report(const Scenario& s, const AttackSchedule& sched);

/// Per-attacker rent flows from the slots: each tenant pays
/// rate(tenant, landlord) * duration to its landlord; paymaster (diagonal)
/// slots credit the tenant its diagonal rate instead. Off-diagonal transfers
/// conserve money across attackers.
Vector rent_ledger(const Matrix& rents, const AttackSchedule& sched);

/// The intrusion-cost sum of reward_target alone (worst-case or expected per
/// the scenario's mode). Exposed for break-even analysis.
Money intrusion_cost(const Scenario& s, const AttackSchedule& sched);

}  // namespace botecon
