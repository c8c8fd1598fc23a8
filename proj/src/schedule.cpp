#include <botecon/schedule.hpp>

#include <botecon/rng.hpp>

#include <algorithm>

namespace botecon {

void validate(const AttackSchedule& sched, int n_attackers, Days horizon) {
  const Days slack = 1e-9 * std::max(Real(1), horizon);
  Days prev_end = 0;
  for (const AttackSlot& slot : sched.slots) {
    require(slot.tenant >= 1 && slot.tenant <= n_attackers, "slot tenant id out of range");
    require(slot.landlord >= 1 && slot.landlord <= n_attackers, "slot landlord id out of range");
    require_finite(slot.start, "slot start");
    require_finite(slot.duration, "slot duration");
    require(slot.duration > 0, "slot durations must be positive");
    require(slot.start >= -slack && slot.end() <= horizon + slack,
            "slots must lie within [0, horizon]");
    require(slot.start >= prev_end - slack, "slots must not overlap");
    prev_end = slot.end();
  }
}

AttackSchedule build_uniform_schedule(int n_attackers, Days horizon) {
  require(n_attackers >= 2, "uniform schedule requires at least two attackers");
  require_finite(horizon, "horizon");
  require(horizon > 0, "horizon must be positive");

  const int pairs = n_attackers * (n_attackers - 1);
  const Days dt = horizon / Real(pairs);
  AttackSchedule sched;
  sched.slots.reserve(pairs);
  int k = 0;
  for (int tenant = 1; tenant <= n_attackers; ++tenant)
    for (int landlord = 1; landlord <= n_attackers; ++landlord) {
      if (landlord == tenant) continue;
      const Days start = Real(k) * dt;
      // Last slot absorbs the rounding so the rotation ends exactly at the horizon.
      const Days duration = (k == pairs - 1) ? horizon - start : dt;
      sched.slots.push_back({tenant, landlord, start, duration});
      ++k;
    }
  return sched;
}

void validate(const MarkovSpec& spec, int n_attackers) {
  const Index states = n_attackers + 1;
  require(spec.kernel.rows() == states && spec.kernel.cols() == states,
          "Markov kernel must be (N+1) x (N+1) over {idle, attackers}");
  for (Index r = 0; r < states; ++r) {
    Real row_sum = 0;
    for (Index c = 0; c < states; ++c) {
      require_finite(spec.kernel(r, c), "Markov kernel weight");
      require(spec.kernel(r, c) >= 0, "Markov kernel weights must be non-negative");
      row_sum += spec.kernel(r, c);
    }
    require(row_sum > 0, "every Markov kernel row needs a positive sum");
  }
  require_finite(spec.mean_duration, "Markov dwell duration");
  require(spec.mean_duration > 0, "Markov dwell duration must be positive");
}

namespace {

int sample_state(SplitMix64& rng, const Matrix& kernel, int from) {
  const Real u = rng.uniform01() * kernel.row(from).sum();
  Real acc = 0;
  for (Index c = 0; c < kernel.cols(); ++c) {
    acc += kernel(from, c);
    if (u < acc) return static_cast<int>(c);
  }
  return static_cast<int>(kernel.cols()) - 1;  // u landed on the top edge
}

}  // namespace

AttackSchedule build_markov_schedule(int n_attackers, Days horizon,
                                     const MarkovSpec& spec, SplitMix64& rng) {
  require(n_attackers >= 1, "n_attackers must be at least 1");
  require(horizon > 0, "horizon must be positive");
  validate(spec, n_attackers);
  require(horizon / spec.mean_duration <= 5e6,
          "Markov dwell duration is too small relative to the horizon");

  AttackSchedule sched;
  int state = 0;        // idle; row 0 is also the initial distribution
  int last_active = 0;  // 0 until some attacker has held the botnet
  Days t = 0;
  while (t < horizon) {
    state = sample_state(rng, spec.kernel, state);
    Days dwell = spec.exponential_durations ? rng.exponential(spec.mean_duration)
                                            : spec.mean_duration;
    dwell = std::max(dwell, Days(1e-12));
    if (state != 0) {
      const int landlord = last_active == 0 ? state : last_active;
      sched.slots.push_back({state, landlord, t, std::min(dwell, horizon - t)});
      last_active = state;
    }
    t += dwell;
  }
  return sched;
}

AttackSchedule build_markov_schedule(int n_attackers, Days horizon,
                                     const MarkovSpec& spec, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return build_markov_schedule(n_attackers, horizon, spec, rng);
}

}  // namespace botecon
