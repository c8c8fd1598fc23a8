#include <botecon/schedule.hpp>

#include <botecon/rng.hpp>

#include <doctest.h>

#include "test_support.hpp"

using namespace botecon;

TEST_CASE("uniform schedule for two attackers") {
  const AttackSchedule sched = build_uniform_schedule(2, 2);
  REQUIRE(sched.slots.size() == 2);
  CHECK(sched.slots[0].tenant == 1);
  CHECK(sched.slots[0].landlord == 2);
  CHECK(sched.slots[0].start == 0.0);
  CHECK(sched.slots[0].duration == 1.0);
  CHECK(sched.slots[1].tenant == 2);
  CHECK(sched.slots[1].landlord == 1);
  CHECK(sched.slots[1].start == 1.0);
  CHECK(sched.slots[1].duration == 1.0);
}

TEST_CASE("uniform schedule covers all ordered pairs lexicographically") {
  const AttackSchedule sched = build_uniform_schedule(3, 6);
  REQUIRE(sched.slots.size() == 6);
  const int expected[6][2] = {{1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}};
  for (int k = 0; k < 6; ++k) {
    CHECK(sched.slots[k].tenant == expected[k][0]);
    CHECK(sched.slots[k].landlord == expected[k][1]);
    CHECK(sched.slots[k].duration == doctest::Approx(1.0));
    CHECK(sched.slots[k].start == doctest::Approx(Real(k)));
  }
}

TEST_CASE("uniform schedule rejects fewer than two attackers") {
  CHECK_THROWS_WITH(build_uniform_schedule(1, 1),
                    "uniform schedule requires at least two attackers");
  CHECK_THROWS(build_uniform_schedule(2, 0));
}

TEST_CASE("uniform schedule is gapless and ends exactly at the horizon") {
  SplitMix64 rng(31);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = test::uniform_int(rng, 2, 7);
    const Days horizon = test::uniform(rng, 0.1, 365);
    const AttackSchedule sched = build_uniform_schedule(n, horizon);
    REQUIRE(static_cast<int>(sched.slots.size()) == n * (n - 1));
    validate(sched, n, horizon);
    const Real slack = 1e-12 * std::max(Real(1), horizon);
    Real total = 0;
    Days prev_end = 0;
    for (const AttackSlot& slot : sched.slots) {
      CHECK(std::abs(slot.start - prev_end) <= slack);  // back to back, no idle gaps
      total += slot.duration;
      prev_end = slot.end();
    }
    CHECK(std::abs(prev_end - horizon) <= slack);
    CHECK(std::abs(total - horizon) <= 1e-9 * horizon);
  }
}

TEST_CASE("schedule validation") {
  AttackSchedule sched;
  sched.slots = {{1, 2, 0, 1}, {2, 1, 0.5, 1}};
  CHECK_THROWS(validate(sched, 2, 2));  // overlapping
  sched.slots = {{1, 2, 0, 0}};
  CHECK_THROWS(validate(sched, 2, 2));  // zero duration
  sched.slots = {{3, 1, 0, 1}};
  CHECK_THROWS(validate(sched, 2, 2));  // tenant out of range
  sched.slots = {{1, 2, 1.5, 1}};
  CHECK_THROWS(validate(sched, 2, 2));  // past the horizon
  sched.slots = {{1, 2, 0, 1}, {2, 1, 1, 1}};
  CHECK_NOTHROW(validate(sched, 2, 2));
}

TEST_CASE("markov chain that never leaves idle yields an empty schedule") {
  MarkovSpec spec;
  spec.kernel = Matrix::Zero(3, 3);
  spec.kernel(0, 0) = 1;
  spec.kernel(1, 0) = 1;
  spec.kernel(2, 0) = 1;
  spec.mean_duration = 0.5;
  const AttackSchedule sched = build_markov_schedule(2, 3, spec, 99);
  CHECK(sched.slots.empty());
}

TEST_CASE("deterministic alternating chain reproduces the hand trace") {
  // idle -> 1, 1 -> 2, 2 -> 1, fixed dwell of one day.
  MarkovSpec spec;
  spec.kernel = Matrix::Zero(3, 3);
  spec.kernel(0, 1) = 1;
  spec.kernel(1, 2) = 1;
  spec.kernel(2, 1) = 1;
  spec.mean_duration = 1;
  const AttackSchedule sched = build_markov_schedule(2, 3, spec, 7);
  REQUIRE(sched.slots.size() == 3);
  const int tenants[3] = {1, 2, 1};
  for (int k = 0; k < 3; ++k) {
    CHECK(sched.slots[k].tenant == tenants[k]);
    CHECK(sched.slots[k].start == doctest::Approx(Real(k)));
    CHECK(sched.slots[k].duration == doctest::Approx(1.0));
  }
  // Landlord is whoever held the botnet before; the first slot self-rents.
  CHECK(sched.slots[0].landlord == 1);
  CHECK(sched.slots[1].landlord == 1);
  CHECK(sched.slots[2].landlord == 2);
}

TEST_CASE("markov schedules are deterministic per seed and truncated at the horizon") {
  MarkovSpec spec;
  spec.kernel = Matrix::Constant(4, 4, 1.0);
  spec.mean_duration = 0.7;
  spec.exponential_durations = true;
  for (std::uint64_t seed : {1ull, 42ull, 0xDEADull}) {
    const AttackSchedule a = build_markov_schedule(3, 5, spec, seed);
    const AttackSchedule b = build_markov_schedule(3, 5, spec, seed);
    REQUIRE(a.slots.size() == b.slots.size());
    for (std::size_t k = 0; k < a.slots.size(); ++k) {
      CHECK(a.slots[k].tenant == b.slots[k].tenant);
      CHECK(a.slots[k].landlord == b.slots[k].landlord);
      CHECK(a.slots[k].start == b.slots[k].start);
      CHECK(a.slots[k].duration == b.slots[k].duration);
    }
    validate(a, 3, 5);
    if (!a.slots.empty()) CHECK(a.slots.back().end() <= 5.0);
  }
}

TEST_CASE("markov kernel validation") {
  MarkovSpec spec;
  spec.kernel = Matrix::Zero(3, 3);
  spec.mean_duration = 1;
  CHECK_THROWS(build_markov_schedule(2, 1, spec, 1));  // zero row sums
  spec.kernel = Matrix::Constant(3, 3, 1.0);
  spec.kernel(1, 1) = -0.5;
  CHECK_THROWS(build_markov_schedule(2, 1, spec, 1));  // negative weight
  spec.kernel = Matrix::Constant(2, 2, 1.0);
  CHECK_THROWS(build_markov_schedule(2, 1, spec, 1));  // wrong size
  spec.kernel = Matrix::Constant(3, 3, 1.0);
  spec.mean_duration = 0;
  CHECK_THROWS(build_markov_schedule(2, 1, spec, 1));  // non-positive dwell
  spec.mean_duration = 1e-12;
  CHECK_THROWS(build_markov_schedule(2, 1e6, spec, 1));  // absurd slot count
}
