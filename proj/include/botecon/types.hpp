#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace botecon {

// All money is USD, all time is days, probabilities live in [0,1].
using Real = double;
using Money = Real;
using Days = Real;
using Prob = Real;

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

inline void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

inline void require_finite(Real x, const std::string& what) {
  if (!std::isfinite(x)) throw std::invalid_argument(what + " must be finite");
}

inline void require_prob(Real p, const std::string& what) {
  require_finite(p, what);
  require(p >= 0.0 && p <= 1.0, what + " must lie in [0,1]");
}

// Relative closeness with a unit floor, for comparing computed money values.
inline bool rel_close(Real a, Real b, Real tol) {
  const Real scale = std::max({std::abs(a), std::abs(b), Real(1)});
  return std::abs(a - b) <= tol * scale;
}

}  // namespace botecon
