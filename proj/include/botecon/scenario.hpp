#pragma once

#include <botecon/learning.hpp>
#include <botecon/traffic.hpp>
#include <botecon/types.hpp>

#include <vector>

namespace botecon {

/// How the target's per-session income nets out the expected customer win.
/// AsWritten subtracts the bare win probability from the usage fee; Consistent
/// subtracts the expected win payout (probability times ceiling).
enum class TargetCostMode { AsWritten, Consistent };

/// How intrusions are charged to the target: the full payout ceiling per
/// attack slot (WorstCase) or scaled by the attacker's success probability
/// (Expected).
enum class IntrusionCostMode { WorstCase, Expected };

/// One full parameterization of the (N+1)-player game: a target service,
/// n_attackers bot-renting attackers, and a paying customer population.
///
/// Attacker ids are 1..N throughout; player 0 is the target. rents(i-1, j-1)
/// is the USD/day rate tenant i pays landlord j for botnet access; diagonal
/// entries are paymaster rates paid to an attacker from outside the market.
struct Scenario {
  int n_attackers = 0;
  Days horizon_days = 0;
  Money payout_ceiling = 0;   // max payout per winning session
  Money min_payout = 0;       // adversarially lowered payout floor
  Money usagefee = 0;         // fee charged per game session
  Money usagefee_max = 0;     // highest fee the target may charge
  Prob win_prob = 0;          // average customer win probability per session
  TrafficProfile traffic;
  Matrix rents;
  std::vector<LearningCurve> curves;  // one per attacker
  TargetCostMode target_cost_mode = TargetCostMode::AsWritten;
  IntrusionCostMode intrusion_cost_mode = IntrusionCostMode::WorstCase;
};

/// Throws std::invalid_argument naming the violated constraint.
void validate(const Scenario& s);

/// Net rental income rate per attacker in USD/day when every ordered pair
/// trades once per unit time: received minus paid, diagonal cancelling.
Vector net_rent_income_rate(const Matrix& rents);

/// FNV-1a over a canonical rendering of every field; stable across runs and
/// platforms, used to stamp reports with the scenario they came from.
std::string scenario_hash(const Scenario& s);

/// Tenancy slot length of the uniform rotation: horizon / (N * (N-1)).
Days uniform_slot_length(const Scenario& s);

/// Start of attacker i's first tenancy under the uniform rotation.
Days uniform_first_slot_start(const Scenario& s, int attacker);

}  // namespace botecon
