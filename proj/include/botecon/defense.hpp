#pragma once

#include <botecon/scenario.hpp>

#include <optional>

namespace botecon {

/// Rent rows a defender-controlled decoy attacker advertises to the market.
/// charge_per_day[i] is what real attacker i+1 pays when renting from the
/// decoy; pay_per_day[i] is what the decoy pays attacker i+1 when renting.
struct VirtualAttackerConfig {
  Vector charge_per_day;
  Vector pay_per_day;
};

/// Collect arriving traffic for a window and release it in a burst over the
/// final duty fraction of that window, volume preserved.
struct BufferingConfig {
  Days window = 0;
  Prob duty = 1;
};

/// Pay winners a low real-time amount on-line and the full ceiling later via
/// time-shifted bank orders; intruders can only siphon the real-time ledger.
struct PayoutSplitConfig {
  Money realtime = 0;
  Money deferred = 0;  // must be >= realtime
};

/// Re-tune the defense every window from the realized attack density of the
/// previous window: scale the active payout and optionally buffer traffic
/// only in the windows following a busy one.
struct AdaptivePolicyConfig {
  Days window = 0;
  Real attacks_per_day_threshold = 0;
  Real min_payout_multiplier = 1;
  bool toggle_buffering = false;  // requires a BufferingConfig to toggle
};

struct DefenseConfig {
  Prob virtual_bot_fraction = 0;  // chance a successful intrusion hit a decoy bot
  std::optional<VirtualAttackerConfig> virtual_attacker;
  std::optional<BufferingConfig> buffering;
  Money renegotiation_cost = 0;  // charged to a tenant whenever its rent rate changes
  std::optional<PayoutSplitConfig> payout_split;
  std::optional<AdaptivePolicyConfig> adaptive;
};

/// Throws std::invalid_argument naming the violated constraint.
void validate(const DefenseConfig& cfg, int n_attackers);

/// Reshapes the profile window by window: each window's whole volume arrives
/// at rate volume / (duty * window length) over the window's final duty
/// fraction. duty = 1 returns the profile unchanged; the total integral over
/// [0, horizon] is preserved exactly.
TrafficProfile buffer_traffic(const TrafficProfile& profile, Days window, Prob duty);

/// Expands the scenario with one decoy attacker (id N+1) advertising the
/// given rents. The decoy never intrudes (zero learning curve); it exists to
/// skew every real attacker's rental differential.
Scenario apply_virtual_attacker(const Scenario& s, const VirtualAttackerConfig& cfg);

}  // namespace botecon
