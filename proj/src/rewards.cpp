#include <botecon/rewards.hpp>

namespace botecon {

Money reward_customer(const Scenario& s) {
  validate(s);
  return s.win_prob * s.payout_ceiling - s.usagefee;
}

Money intrusion_cost(const Scenario& s, const AttackSchedule& sched) {
  Money cost = 0;
  for (const AttackSlot& slot : sched.slots) {
    const Real n_end = s.traffic.value(slot.end());
    const Real weight = s.intrusion_cost_mode == IntrusionCostMode::Expected
                            ? s.curves[slot.tenant - 1](slot.duration)
                            : Real(1);
    cost += weight * s.payout_ceiling * n_end;
  }
  return cost;
}

Money reward_target(const Scenario& s, const AttackSchedule& sched) {
  validate(s);
  validate(sched, s.n_attackers, s.horizon_days);
  const Real session_cost = s.target_cost_mode == TargetCostMode::Consistent
                                ? s.win_prob * s.payout_ceiling
                                : s.win_prob;
  const Money income = (s.usagefee - session_cost) * integrate(s.traffic, 0, s.horizon_days);
  return income - intrusion_cost(s, sched);
}

Vector rent_ledger(const Matrix& rents, const AttackSchedule& sched) {
  Vector ledger = Vector::Zero(rents.rows());
  for (const AttackSlot& slot : sched.slots) {
    const Money amount = rents(slot.tenant - 1, slot.landlord - 1) * slot.duration;
    if (slot.tenant == slot.landlord) {
      ledger[slot.tenant - 1] += amount;  // paymaster income from outside the market
    } else {
      ledger[slot.tenant - 1] -= amount;
      ledger[slot.landlord - 1] += amount;
    }
  }
  return ledger;
}

Money reward_attacker(int attacker, const Scenario& s, const AttackSchedule& sched) {
  validate(s);
  require(attacker >= 1 && attacker <= s.n_attackers, "attacker id out of range");
  validate(sched, s.n_attackers, s.horizon_days);
  const Vector ledger = rent_ledger(s.rents, sched);
  Money intrusion = 0;
  for (const AttackSlot& slot : sched.slots) {
    if (slot.tenant != attacker) continue;
    const Prob p = s.curves[attacker - 1](slot.duration);
    intrusion += p * s.payout_ceiling * s.traffic.value(slot.end());
  }
  return ledger[attacker - 1] + intrusion;
}

RewardReport reward_report(const Scenario& s, const AttackSchedule& sched) {
  RewardReport report;
  report.target = reward_target(s, sched);
  report.attackers = Vector(s.n_attackers);
  for (int i = 1; i <= s.n_attackers; ++i)
    report.attackers[i - 1] = reward_attacker(i, s, sched);
  report.per_customer = reward_customer(s);
  require(std::isfinite(report.target) && report.attackers.allFinite() &&
              std::isfinite(report.per_customer),
          "reward overflow: report entries must be finite");
  report.meta.scenario_hash = scenario_hash(s);
  report.meta.target_cost_mode = s.target_cost_mode;
  report.meta.intrusion_cost_mode = s.intrusion_cost_mode;
  return report;
}

}  // namespace botecon
