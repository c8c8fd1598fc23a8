#include <botecon/learning.hpp>

#include <algorithm>

namespace botecon {

LearningCurve LearningCurve::exponential(Days alpha) {
  require_finite(alpha, "learning curve alpha");
  require(alpha > 0, "learning curve alpha must be positive");
  return LearningCurve(alpha, Vector(), Vector());
}

LearningCurve LearningCurve::tabulated(Vector times, Vector probs) {
  require(times.size() > 0 && times.size() == probs.size(),
          "tabulated learning curve needs matching, non-empty times and probabilities");
  require(times[0] == 0.0 && probs[0] == 0.0,
          "tabulated learning curve must start at (0, 0)");
  for (Index k = 0; k < times.size(); ++k) {
    require_finite(times[k], "learning curve time");
    require_prob(probs[k], "learning curve probability");
    if (k > 0) {
      require(times[k] > times[k - 1], "learning curve times must be strictly increasing");
      require(probs[k] >= probs[k - 1], "learning curve must be non-decreasing");
    }
  }
  return LearningCurve(0, std::move(times), std::move(probs));
}

LearningCurve LearningCurve::zero() {
  Vector t(1), p(1);
  t << 0.0;
  p << 0.0;
  return LearningCurve(0, std::move(t), std::move(p));
}

Prob LearningCurve::operator()(Days t) const {
  require(t >= 0, "learning curve evaluated at negative time");
  if (alpha_ > 0) return -std::expm1(-t / alpha_);
  const Real* begin = times_.data();
  const Real* end = begin + times_.size();
  const auto it = std::upper_bound(begin, end, t);
  const Index k = static_cast<Index>(it - begin);  // >= 1 since times_[0] == 0 <= t
  if (k == times_.size()) return probs_[k - 1];    // clamp past the last point
  const Real w = (t - times_[k - 1]) / (times_[k] - times_[k - 1]);
  return probs_[k - 1] + w * (probs_[k] - probs_[k - 1]);
}

}  // namespace botecon
