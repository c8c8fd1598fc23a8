#include <botecon/traffic.hpp>

#include <algorithm>

namespace botecon {

namespace {

Days domain_slack(Days horizon) { return 1e-9 * std::max(Real(1), horizon); }

}  // namespace

TrafficProfile::TrafficProfile(Days horizon, Vector times, Vector counts)
    : horizon_(horizon), times_(std::move(times)), counts_(std::move(counts)) {
  require_finite(horizon_, "traffic horizon");
  require(horizon_ > 0, "traffic horizon must be positive");
  require(times_.size() > 0, "traffic profile needs at least one breakpoint");
  require(times_.size() == counts_.size(),
          "traffic breakpoint times and counts must have equal length");
  require(times_[0] == 0.0, "first traffic breakpoint must be at time 0");
  for (Index k = 0; k < times_.size(); ++k) {
    require_finite(times_[k], "traffic breakpoint time");
    require_finite(counts_[k], "traffic count");
    require(counts_[k] >= 0, "traffic counts must be non-negative");
    require(times_[k] < horizon_, "traffic breakpoints must lie within [0, horizon)");
    if (k > 0) require(times_[k] > times_[k - 1], "traffic breakpoint times must be strictly increasing");
  }
}

TrafficProfile TrafficProfile::constant(Days horizon, Real count) {
  Vector t(1), c(1);
  t << 0.0;
  c << count;
  return TrafficProfile(horizon, std::move(t), std::move(c));
}

Real TrafficProfile::value(Days t) const {
  require(!empty(), "traffic profile is empty");
  const Days slack = domain_slack(horizon_);
  require(t >= -slack, "traffic evaluation time must be non-negative");
  t = std::clamp(t, Days(0), horizon_);
  // Last breakpoint at or before t (right-continuous convention).
  const Real* begin = times_.data();
  const Real* end = begin + times_.size();
  const auto it = std::upper_bound(begin, end, t);
  return counts_[static_cast<Index>(it - begin) - 1];
}

bool TrafficProfile::is_constant() const {
  if (empty()) return false;
  return (counts_.array() == counts_[0]).all();
}

Real integrate(const TrafficProfile& profile, Days a, Days b) {
  require(!profile.empty(), "traffic profile is empty");
  const Days slack = domain_slack(profile.horizon());
  require(a >= -slack && b <= profile.horizon() + slack,
          "integration interval must lie within [0, horizon]");
  require(a <= b, "integration interval is inverted");
  a = std::clamp(a, Days(0), profile.horizon());
  b = std::clamp(b, Days(0), profile.horizon());

  const Vector& times = profile.times();
  const Vector& counts = profile.counts();
  Real total = 0;
  for (Index k = 0; k < times.size(); ++k) {
    const Days seg_start = times[k];
    const Days seg_end = (k + 1 < times.size()) ? times[k + 1] : profile.horizon();
    const Days lo = std::max(a, seg_start);
    const Days hi = std::min(b, seg_end);
    if (hi > lo) total += counts[k] * (hi - lo);
  }
  return total;
}

}  // namespace botecon
