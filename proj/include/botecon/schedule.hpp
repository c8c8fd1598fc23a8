#pragma once

#include <botecon/types.hpp>

#include <cstdint>
#include <vector>

namespace botecon {

/// One tenancy: the tenant rents the botnet from the landlord and attacks for
/// the whole slot. tenant == landlord marks a paymaster slot (the tenant is
/// paid its diagonal rate from outside the market instead of trading rent).
struct AttackSlot {
  int tenant = 0;    // attacker id, 1..N
  int landlord = 0;  // attacker id, 1..N
  Days start = 0;
  Days duration = 0;

  Days end() const { return start + duration; }
};

/// Ordered, pairwise-disjoint attack slots; at most one attack is ever active.
struct AttackSchedule {
  std::vector<AttackSlot> slots;
};

/// Throws std::invalid_argument if ids are out of 1..n_attackers, any slot
/// leaves [0, horizon], durations are non-positive, or slots overlap.
void validate(const AttackSchedule& sched, int n_attackers, Days horizon);

/// The equal-duration rotation: one slot per ordered (tenant, landlord) pair
/// in lexicographic order, N*(N-1) slots of length horizon/(N*(N-1)) packed
/// back to back over [0, horizon] with no idle gaps.
AttackSchedule build_uniform_schedule(int n_attackers, Days horizon);

/// Random rotation drawn from a Markov chain over {idle = 0, attackers 1..N}.
/// Row k of the kernel holds the transition weights out of state k; row 0
/// doubles as the initial distribution. Idle dwells create gaps, not slots.
struct MarkovSpec {
  Matrix kernel;                       // (N+1) x (N+1), non-negative, rows sum > 0
  Days mean_duration = 0;              // dwell time of every state
  bool exponential_durations = false;  // false: fixed dwells of mean_duration
};

void validate(const MarkovSpec& spec, int n_attackers);

/// Samples dwells from time 0 until the horizon is reached; the final slot is
/// truncated at the horizon. A slot's landlord is the most recent previous
/// tenant (the player who granted access), or the tenant itself for the first
/// slot. Deterministic for a fixed seed.
AttackSchedule build_markov_schedule(int n_attackers, Days horizon,
                                     const MarkovSpec& spec, std::uint64_t seed);

class SplitMix64;
/// As above but drawing from an existing stream (used by the Monte Carlo
/// engine so schedule draws come first in each trial's stream).
AttackSchedule build_markov_schedule(int n_attackers, Days horizon,
                                     const MarkovSpec& spec, SplitMix64& rng);

}  // namespace botecon
