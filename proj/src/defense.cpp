#include <botecon/defense.hpp>

#include <vector>

namespace botecon {

void validate(const DefenseConfig& cfg, int n_attackers) {
  require_prob(cfg.virtual_bot_fraction, "virtual_bot_fraction");
  require_finite(cfg.renegotiation_cost, "renegotiation_cost");
  require(cfg.renegotiation_cost >= 0, "renegotiation_cost must be non-negative");
  if (cfg.virtual_attacker) {
    const auto& va = *cfg.virtual_attacker;
    require(va.charge_per_day.size() == n_attackers && va.pay_per_day.size() == n_attackers,
            "virtual attacker rents need one entry per real attacker");
    for (Index k = 0; k < va.charge_per_day.size(); ++k) {
      require_finite(va.charge_per_day[k], "virtual attacker rent");
      require_finite(va.pay_per_day[k], "virtual attacker rent");
      require(va.charge_per_day[k] >= 0 && va.pay_per_day[k] >= 0,
              "virtual attacker rents must be non-negative");
    }
  }
  if (cfg.buffering) {
    require_finite(cfg.buffering->window, "buffering window");
    require(cfg.buffering->window > 0, "buffering window must be positive");
    require_finite(cfg.buffering->duty, "buffering duty");
    require(cfg.buffering->duty > 0 && cfg.buffering->duty <= 1,
            "buffering duty must lie in (0, 1]");
  }
  if (cfg.payout_split) {
    require_finite(cfg.payout_split->realtime, "payout_split.realtime");
    require_finite(cfg.payout_split->deferred, "payout_split.deferred");
    require(cfg.payout_split->realtime >= 0, "payout_split.realtime must be non-negative");
    require(cfg.payout_split->realtime <= cfg.payout_split->deferred,
            "payout_split.realtime must not exceed payout_split.deferred");
  }
  if (cfg.adaptive) {
    require_finite(cfg.adaptive->window, "adaptive window");
    require(cfg.adaptive->window > 0, "adaptive window must be positive");
    require_finite(cfg.adaptive->attacks_per_day_threshold, "adaptive threshold");
    require(cfg.adaptive->attacks_per_day_threshold >= 0,
            "adaptive threshold must be non-negative");
    require_finite(cfg.adaptive->min_payout_multiplier, "adaptive payout multiplier");
    require(cfg.adaptive->min_payout_multiplier >= 0,
            "adaptive payout multiplier must be non-negative");
    require(!cfg.adaptive->toggle_buffering || cfg.buffering.has_value(),
            "adaptive buffering toggle requires a buffering config");
  }
}

TrafficProfile buffer_traffic(const TrafficProfile& profile, Days window, Prob duty) {
  require(!profile.empty(), "traffic profile is empty");
  require_finite(window, "buffering window");
  require(window > 0, "buffering window must be positive");
  require_finite(duty, "buffering duty");
  require(duty > 0 && duty <= 1, "buffering duty must lie in (0, 1]");
  require(profile.horizon() / window <= 5e6,
          "buffering window is too small relative to the horizon");
  if (duty == 1) return profile;

  const Days horizon = profile.horizon();
  std::vector<Real> times, counts;
  for (Days a = 0; a < horizon;) {
    const Days b = std::min(a + window, horizon);
    const Real volume = integrate(profile, a, b);
    const Days burst_len = duty * (b - a);
    const Days burst_start = b - burst_len;
    if (volume > 0 && burst_start > a) {
      times.push_back(a);
      counts.push_back(0);
      times.push_back(burst_start);
      counts.push_back(volume / burst_len);
    } else {
      // Empty window, or duty so close to 1 the burst fills the window.
      times.push_back(a);
      counts.push_back(volume > 0 ? volume / burst_len : 0);
    }
    a = b;
  }
  return TrafficProfile(horizon,
                        Eigen::Map<const Vector>(times.data(), static_cast<Index>(times.size())),
                        Eigen::Map<const Vector>(counts.data(), static_cast<Index>(counts.size())));
}

Scenario apply_virtual_attacker(const Scenario& s, const VirtualAttackerConfig& cfg) {
  validate(s);
  const Index n = s.n_attackers;
  require(cfg.charge_per_day.size() == n && cfg.pay_per_day.size() == n,
          "virtual attacker rents need one entry per real attacker");

  Scenario out = s;
  out.n_attackers = s.n_attackers + 1;
  out.rents = Matrix::Zero(n + 1, n + 1);
  out.rents.topLeftCorner(n, n) = s.rents;
  out.rents.col(n).head(n) = cfg.charge_per_day;  // real tenants pay the decoy landlord
  out.rents.row(n).head(n) = cfg.pay_per_day.transpose();  // decoy tenant pays real landlords
  out.curves.push_back(LearningCurve::zero());
  validate(out);
  return out;
}

}  // namespace botecon
