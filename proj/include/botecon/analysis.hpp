#pragma once

#include <botecon/rewards.hpp>
#include <botecon/scenario.hpp>

#include <utility>
#include <vector>

namespace botecon {

/// Break-even condition of one attacker under the uniform rotation: the
/// success probability that exactly recovers the rent it pays out net.
/// required_success_prob may be negative (rents already favour the attacker)
/// or exceed 1, in which case break-even is infeasible.
struct BreakEvenResult {
  Real required_success_prob = 0;
  bool feasible = true;      // required_success_prob <= 1
  Money net_rent_paid = 0;   // rent paid minus rent received over the rotation
  Money slack_vs_bound = 0;  // C * n(t_i + dt) - net_rent_paid; >= 0 iff feasible
};

BreakEvenResult breakeven_success_prob(int attacker, const Scenario& s);

/// The bound slack alone: C * n(t_i + dt) minus the attacker's net rent
/// payout. Well defined even when the break-even ratio is not (C or n zero).
Money rent_bound_slack(int attacker, const Scenario& s);

/// Smallest N >= 2 whose N*(N-1) rotation slots make the per-slot rent
/// affordable: N*(N-1) >= (rent_rate / C) * (horizon / customers).
int min_attackers(Money rent_rate_per_day, Money payout_ceiling, Days horizon,
                  Real customers);

/// The usage fee that zeroes the target's reward for the given schedule under
/// the scenario's modes. The target reward is affine in the fee, so this is
/// closed form: session cost plus intrusion cost over total traffic.
Money breakeven_usagefee(const Scenario& s, const AttackSchedule& sched);

/// Attacker objective under the defender's adversarial corner (fee at its
/// ceiling, payout at its floor), for constant traffic n: the net rent income
/// rate plus p(tau) * min_payout * n * N*(N-1) / horizon. Requires
/// min_payout >= usagefee_max >= 0.
Money adversarial_value_constant(int attacker, const Scenario& s, Days tau);

/// The objective the saddle searches optimize over the attack duration tau:
/// the constant-traffic form above when the profile is flat, otherwise the
/// tau-scaled net rent income plus p(tau) * min_payout * n(t_i + tau).
Money adversarial_value(int attacker, const Scenario& s, Days tau);

/// Batch form of adversarial_value: validates once, evaluates many.
Vector adversarial_values(int attacker, const Scenario& s, const Vector& taus);

struct SearchOptions {
  Days lo = 0;
  Days hi = 0;  // <= 0 means the scenario horizon
  int grid_points = 1000;
};

enum class SaddleKind { MaxMin, MinMax };

struct SaddleResult {
  Days duration = 0;
  Money value = 0;
  SaddleKind kind = SaddleKind::MaxMin;
  std::vector<std::pair<Days, Money>> trace;  // every (duration, value) evaluated
};

/// Best reward the attacker can secure when the defender plays its
/// adversarial corner: maximizes adversarial_value over the duration.
SaddleResult maxmin_attacker(int attacker, const Scenario& s,
                             const SearchOptions& opts = {});

/// The attacker's guaranteed floor: minimizes the same objective.
SaddleResult minmax_attacker(int attacker, const Scenario& s,
                             const SearchOptions& opts = {});

}  // namespace botecon
