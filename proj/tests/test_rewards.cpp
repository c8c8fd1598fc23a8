#include <botecon/rewards.hpp>

#include <doctest.h>

#include "test_support.hpp"

using namespace botecon;

TEST_CASE("customer reward formula") {
  Scenario s = test::make_scenario(2, 10, 100);
  s.win_prob = 0;
  s.usagefee = 0;
  CHECK(reward_customer(s) == 0.0);

  s.win_prob = 0.01;
  s.payout_ceiling = 2800;
  s.usagefee = 10;
  CHECK(reward_customer(s) == doctest::Approx(18.0));

  // Break-even customer: expected win exactly covers the fee.
  s.win_prob = 0.005;
  s.usagefee = 14;
  CHECK(reward_customer(s) == doctest::Approx(0.0));
}

TEST_CASE("target reward vanishes with no attacks and fee equal to the session cost") {
  Scenario s = test::make_scenario(2, 10, 100);
  s.usagefee = s.win_prob = 0.01;
  CHECK(reward_target(s, AttackSchedule{}) == 0.0);
}

TEST_CASE("target reward, worst-case and expected intrusion modes") {
  Scenario s = test::make_scenario(2, 10, 100);
  s.usagefee = 10;
  s.win_prob = 0.01;
  s.payout_ceiling = 2800;
  const AttackSchedule sched = build_uniform_schedule(2, 10);  // two slots of 5 days

  // (10 - 0.01) * 1000 - 2800 * (100 + 100)
  CHECK(reward_target(s, sched) == doctest::Approx(-550010.0));

  // Expected mode with p(., 5) = 0.5 halves the intrusion term.
  Vector t(2), p(2);
  t << 0, 5;
  p << 0, 0.5;
  s.curves.assign(2, LearningCurve::tabulated(t, p));
  s.intrusion_cost_mode = IntrusionCostMode::Expected;
  CHECK(reward_target(s, sched) == doctest::Approx(9990.0 - 0.5 * 560000.0));

  // Consistent mode charges the expected win payout per session.
  s.intrusion_cost_mode = IntrusionCostMode::WorstCase;
  s.target_cost_mode = TargetCostMode::Consistent;
  CHECK(reward_target(s, sched) == doctest::Approx((10.0 - 0.01 * 2800) * 1000 - 560000.0));
}

TEST_CASE("attacker reward: rent differential plus expected intrusion income") {
  Scenario s = test::make_scenario(2, 2, 100);
  SUBCASE("symmetric rents and a never-succeeding curve give zero") {
    s.rents << 0, 500, 500, 0;
    s.curves.assign(2, LearningCurve::zero());
    CHECK(reward_attacker(1, s, build_uniform_schedule(2, 2)) == 0.0);
    CHECK(reward_attacker(2, s, build_uniform_schedule(2, 2)) == 0.0);
  }
  SUBCASE("intrusion income alone") {
    // p(1, dt) = 0.5 at dt = 1, C = 2800, n = 100 -> 140000.
    Vector t(2), p(2);
    t << 0, 1;
    p << 0, 0.5;
    s.curves.assign(2, LearningCurve::tabulated(t, p));
    s.rents << 0, 500, 500, 0;
    CHECK(reward_attacker(1, s, build_uniform_schedule(2, 2)) == doctest::Approx(140000.0));
  }
  SUBCASE("rent ledger oracle") {
    s.rents << 0, 1000, 0, 0;
    s.curves.assign(2, LearningCurve::zero());
    const AttackSchedule sched = build_uniform_schedule(2, 2);
    CHECK(reward_attacker(1, s, sched) == doctest::Approx(-1000.0));
    CHECK(reward_attacker(2, s, sched) == doctest::Approx(1000.0));
  }
}

TEST_CASE("paymaster slots credit the diagonal rate") {
  Matrix rents(2, 2);
  rents << 300, 0, 0, 0;
  AttackSchedule sched;
  sched.slots = {{1, 1, 0, 2}};  // attacker 1 paid by its paymaster for two days
  const Vector ledger = rent_ledger(rents, sched);
  CHECK(ledger[0] == 600.0);
  CHECK(ledger[1] == 0.0);
}

TEST_CASE("off-diagonal rent transfers conserve money for any schedule") {
  SplitMix64 rng(47);
  for (int rep = 0; rep < 100; ++rep) {
    const int n = test::uniform_int(rng, 2, 6);
    Matrix rents(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) rents(i, j) = test::uniform(rng, 0, 5000);
    AttackSchedule sched;
    Days t = 0;
    Real diagonal_income = 0;
    Real volume = 0;
    for (int k = 0, slots = test::uniform_int(rng, 0, 12); k < slots; ++k) {
      const int tenant = test::uniform_int(rng, 1, n);
      const int landlord = test::uniform_int(rng, 1, n);
      const Days dur = test::uniform(rng, 0.01, 1);
      sched.slots.push_back({tenant, landlord, t, dur});
      if (tenant == landlord) diagonal_income += rents(tenant - 1, landlord - 1) * dur;
      volume += rents(tenant - 1, landlord - 1) * dur;
      t += dur + test::uniform(rng, 0, 0.2);
    }
    const Vector ledger = rent_ledger(rents, sched);
    // Everything except paymaster income nets to zero across attackers.
    CHECK(std::abs(ledger.sum() - diagonal_income) <= 1e-9 * std::max(Real(1), volume));
  }
}

TEST_CASE("report fields match the single-operation results") {
  Scenario s = test::make_scenario(2, 10, 100);
  const AttackSchedule sched = build_uniform_schedule(2, 10);
  const RewardReport report = reward_report(s, sched);
  CHECK(report.target == reward_target(s, sched));
  CHECK(report.attackers[0] == reward_attacker(1, s, sched));
  CHECK(report.attackers[1] == reward_attacker(2, s, sched));
  CHECK(report.per_customer == reward_customer(s));
  CHECK(report.meta.scenario_hash == scenario_hash(s));
  CHECK(report.target == doctest::Approx(-550010.0));
}

TEST_CASE("two scenarios differing only in the fee have different system totals") {
  Scenario low = test::make_scenario(2, 2, 100);
  low.rents << 0, 1000, 800, 0;
  Scenario high = low;
  high.usagefee = 50;
  const AttackSchedule sched = build_uniform_schedule(2, 2);
  const RewardReport a = reward_report(low, sched);
  const RewardReport b = reward_report(high, sched);
  const Money total_a = a.target + a.attackers.sum();
  const Money total_b = b.target + b.attackers.sum();
  CHECK(total_a != total_b);  // not a zero-sum game
}

TEST_CASE("attacker reward is non-decreasing in the payout ceiling") {
  SplitMix64 rng(53);
  for (int rep = 0; rep < 50; ++rep) {
    Scenario s = test::make_scenario(test::uniform_int(rng, 2, 5), test::uniform(rng, 1, 20),
                                     test::uniform(rng, 1, 500));
    for (int i = 0; i < s.n_attackers; ++i)
      for (int j = 0; j < s.n_attackers; ++j)
        if (i != j) s.rents(i, j) = test::uniform(rng, 0, 3000);
    const AttackSchedule sched = build_uniform_schedule(s.n_attackers, s.horizon_days);
    Scenario bigger = s;
    bigger.payout_ceiling = s.payout_ceiling + test::uniform(rng, 0, 5000);
    for (int i = 1; i <= s.n_attackers; ++i)
      CHECK(reward_attacker(i, bigger, sched) >= reward_attacker(i, s, sched));
  }
}

TEST_CASE("target reward is non-increasing as slots accumulate") {
  Scenario s = test::make_scenario(3, 9, 50);
  const AttackSchedule full = build_uniform_schedule(3, 9);
  AttackSchedule prefix;
  Money prev = reward_target(s, prefix);
  for (const AttackSlot& slot : full.slots) {
    prefix.slots.push_back(slot);
    const Money cur = reward_target(s, prefix);
    CHECK(cur <= prev);
    prev = cur;
  }
}

TEST_CASE("reward operations validate their inputs") {
  Scenario s = test::make_scenario(2, 2, 10);
  CHECK_THROWS(reward_attacker(0, s, AttackSchedule{}));
  CHECK_THROWS(reward_attacker(3, s, AttackSchedule{}));
  s.rents(0, 1) = -5;
  CHECK_THROWS(reward_target(s, AttackSchedule{}));
}
