#pragma once

#include <botecon/types.hpp>

namespace botecon {

/// Success probability p(t) of an attacker after attacking for time t.
///
/// Every curve starts at p(0) = 0 and is non-decreasing with values in [0,1].
/// The default is the saturating form 1 - exp(-t/alpha); tabulated curves are
/// linearly interpolated between their points and clamped to the last value
/// beyond them.
class LearningCurve {
 public:
  LearningCurve() : LearningCurve(exponential(1.0)) {}

  static LearningCurve exponential(Days alpha);
  static LearningCurve tabulated(Vector times, Vector probs);
  static LearningCurve zero();  // never succeeds

  Prob operator()(Days t) const;

  bool is_exponential() const { return alpha_ > 0; }
  Days alpha() const { return alpha_; }
  const Vector& times() const { return times_; }
  const Vector& probs() const { return probs_; }

 private:
  LearningCurve(Days alpha, Vector times, Vector probs)
      : alpha_(alpha), times_(std::move(times)), probs_(std::move(probs)) {}

  Days alpha_ = 0;  // > 0 selects the exponential form
  Vector times_;
  Vector probs_;
};

}  // namespace botecon
