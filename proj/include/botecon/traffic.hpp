#pragma once

#include <botecon/types.hpp>

namespace botecon {

/// Piecewise-constant customer count n(t) on [0, horizon].
///
/// Breakpoints are (start time, count) pairs; each count holds until the next
/// breakpoint. Evaluation is right-continuous: n(t) is the count of the
/// segment starting at or before t. The first breakpoint must sit at t = 0 and
/// times must be strictly increasing.
class TrafficProfile {
 public:
  TrafficProfile() = default;  // empty; invalid until assigned
  TrafficProfile(Days horizon, Vector times, Vector counts);

  static TrafficProfile constant(Days horizon, Real count);

  /// Count in effect at time t. Negative t is an error; t past the horizon is
  /// clamped to the last segment (integration stays strict, see integrate()).
  Real value(Days t) const;

  bool is_constant() const;
  bool empty() const { return times_.size() == 0; }

  Days horizon() const { return horizon_; }
  const Vector& times() const { return times_; }
  const Vector& counts() const { return counts_; }

 private:
  Days horizon_ = 0;
  Vector times_;
  Vector counts_;
};

/// Exact integral of the profile over [a, b] in customer-days: the sum of
/// count times overlapped segment length. Requires 0 <= a <= b <= horizon.
Real integrate(const TrafficProfile& profile, Days a, Days b);

}  // namespace botecon
