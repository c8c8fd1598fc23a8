#include <botecon/analysis.hpp>

#include <botecon/optimize.hpp>

#include <algorithm>
#include <cmath>

namespace botecon {

namespace {

// Net rent the attacker pays out over the whole uniform rotation (paid minus
// received; the negated net income rate times the slot length). The leading
// zero keeps a balanced ledger at +0.0 rather than -0.0.
Money net_rent_paid_uniform(const Scenario& s, int attacker) {
  const Vector income_rate = net_rent_income_rate(s.rents);
  return 0.0 - income_rate[attacker - 1] * uniform_slot_length(s);
}

Real customers_at_first_attack(const Scenario& s, int attacker) {
  const Days t_end = uniform_first_slot_start(s, attacker) + uniform_slot_length(s);
  return s.traffic.value(t_end);
}

void require_payout_floor_constraint(const Scenario& s) {
  require(s.usagefee_max >= 0 && s.min_payout >= s.usagefee_max,
          "constraint violated: C_min >= usagefee_max >= 0 is required for "
          "max-min/min-max analysis");
}

// Pre-resolved adversarial objective of one attacker, cheap to evaluate many
// times. Built once per analysis call after full validation.
struct AdversarialObjective {
  bool constant_traffic = false;
  Real rent_term = 0;    // net rent income rate of the attacker
  Real gain_factor = 0;  // constant case: min_payout * n * N(N-1) / horizon
  Real min_payout = 0;
  Days first_start = 0;  // general case: attacker's first tenancy start
  const LearningCurve* curve = nullptr;
  const TrafficProfile* traffic = nullptr;
  Days horizon = 0;

  Real operator()(Days tau) const {
    const Prob p = (*curve)(tau);
    if (constant_traffic) return rent_term + p * gain_factor;
    const Real n = traffic->value(std::min(first_start + tau, horizon));
    return rent_term * tau + p * min_payout * n;
  }
};

AdversarialObjective make_objective(int attacker, const Scenario& s, bool force_constant) {
  validate(s);
  require(attacker >= 1 && attacker <= s.n_attackers, "attacker id out of range");
  require_payout_floor_constraint(s);
  AdversarialObjective obj;
  obj.constant_traffic = s.traffic.is_constant();
  if (force_constant) require(obj.constant_traffic, "constant traffic required");
  obj.rent_term = net_rent_income_rate(s.rents)[attacker - 1];
  obj.min_payout = s.min_payout;
  obj.curve = &s.curves[attacker - 1];
  obj.traffic = &s.traffic;
  obj.horizon = s.horizon_days;
  if (obj.constant_traffic) {
    const Real pairs = Real(s.n_attackers) * Real(s.n_attackers - 1);
    obj.gain_factor = s.min_payout * s.traffic.value(0) * pairs / s.horizon_days;
  } else {
    obj.first_start = uniform_first_slot_start(s, attacker);
  }
  return obj;
}

}  // namespace

BreakEvenResult breakeven_success_prob(int attacker, const Scenario& s) {
  validate(s);
  require(attacker >= 1 && attacker <= s.n_attackers, "attacker id out of range");
  const Money net_paid = net_rent_paid_uniform(s, attacker);
  const Real n_end = customers_at_first_attack(s, attacker);
  const Money max_income = s.payout_ceiling * n_end;
  if (max_income <= 0)
    throw std::domain_error(
        "break-even undefined: C * n(t_i + dt) is zero, the attacker can never "
        "recover rent from intrusion");
  BreakEvenResult result;
  result.required_success_prob = net_paid / max_income;
  result.feasible = result.required_success_prob <= 1.0;
  result.net_rent_paid = net_paid;
  result.slack_vs_bound = max_income - net_paid;
  return result;
}

Money rent_bound_slack(int attacker, const Scenario& s) {
  validate(s);
  require(attacker >= 1 && attacker <= s.n_attackers, "attacker id out of range");
  const Money net_paid = net_rent_paid_uniform(s, attacker);
  return s.payout_ceiling * customers_at_first_attack(s, attacker) - net_paid;
}

int min_attackers(Money rent_rate_per_day, Money payout_ceiling, Days horizon,
                  Real customers) {
  require_finite(rent_rate_per_day, "rent rate");
  require(rent_rate_per_day >= 0, "rent rate must be non-negative");
  require_finite(payout_ceiling, "C");
  require(payout_ceiling > 0, "C must be positive");
  require_finite(horizon, "horizon");
  require(horizon > 0, "horizon must be positive");
  require_finite(customers, "customers");
  require(customers > 0, "customers must be positive");

  const Real threshold = (rent_rate_per_day / payout_ceiling) * (horizon / customers);
  require(std::isfinite(threshold) && threshold <= 1e12,
          "parameters imply an implausibly large market");
  // Closed-form start from N(N-1) = threshold, then local fixup.
  int n = std::max(2, static_cast<int>(std::ceil((1.0 + std::sqrt(1.0 + 4.0 * threshold)) / 2.0)));
  while (Real(n) * Real(n - 1) < threshold) ++n;
  while (n > 2 && Real(n - 1) * Real(n - 2) >= threshold) --n;
  return n;
}

Money breakeven_usagefee(const Scenario& s, const AttackSchedule& sched) {
  validate(s);
  validate(sched, s.n_attackers, s.horizon_days);
  const Real total_traffic = integrate(s.traffic, 0, s.horizon_days);
  if (total_traffic <= 0) throw std::domain_error("break-even fee undefined: zero total traffic");
  const Real session_cost = s.target_cost_mode == TargetCostMode::Consistent
                                ? s.win_prob * s.payout_ceiling
                                : s.win_prob;
  return session_cost + intrusion_cost(s, sched) / total_traffic;
}

Money adversarial_value_constant(int attacker, const Scenario& s, Days tau) {
  require(tau >= 0, "attack duration must be non-negative");
  return make_objective(attacker, s, /*force_constant=*/true)(tau);
}

Money adversarial_value(int attacker, const Scenario& s, Days tau) {
  require(tau >= 0, "attack duration must be non-negative");
  return make_objective(attacker, s, /*force_constant=*/false)(tau);
}

Vector adversarial_values(int attacker, const Scenario& s, const Vector& taus) {
  const AdversarialObjective obj = make_objective(attacker, s, false);
  Vector out(taus.size());
  for (Index k = 0; k < taus.size(); ++k) {
    require(taus[k] >= 0, "attack duration must be non-negative");
    out[k] = obj(taus[k]);
  }
  return out;
}

namespace {

SaddleResult saddle_search(int attacker, const Scenario& s, const SearchOptions& opts,
                           SaddleKind kind) {
  const AdversarialObjective obj = make_objective(attacker, s, false);
  const Days hi = opts.hi > 0 ? opts.hi : s.horizon_days;
  require(opts.lo >= 0, "search interval must start at or after 0");
  require(hi <= s.horizon_days, "search interval must end within the horizon");
  require(opts.lo < hi, "empty search interval");

  ScalarSearchResult found =
      grid_golden_search(obj, opts.lo, hi, opts.grid_points, kind == SaddleKind::MaxMin);
  SaddleResult result;
  result.duration = found.x;
  result.value = found.fx;
  result.kind = kind;
  result.trace = std::move(found.trace);
  return result;
}

}  // namespace

SaddleResult maxmin_attacker(int attacker, const Scenario& s, const SearchOptions& opts) {
  return saddle_search(attacker, s, opts, SaddleKind::MaxMin);
}

SaddleResult minmax_attacker(int attacker, const Scenario& s, const SearchOptions& opts) {
  return saddle_search(attacker, s, opts, SaddleKind::MinMax);
}

}  // namespace botecon
