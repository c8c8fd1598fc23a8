#pragma once

#include <botecon/types.hpp>

#include <utility>
#include <vector>

namespace botecon {

struct ScalarSearchResult {
  Real x = 0;
  Real fx = 0;
  std::vector<std::pair<Real, Real>> trace;  // every (x, f(x)) evaluated, in order
};

/// Scans a uniform grid over [lo, hi], then polishes the best cell with a
/// golden-section pass over its two neighbouring cells. Only strict
/// improvements replace the incumbent, so ties resolve to the smallest x.
/// Objectives need not be unimodal: the grid dominates, the polish refines.
template <class F>
ScalarSearchResult grid_golden_search(F&& f, Real lo, Real hi, int grid_points,
                                      bool maximize, Real tol_rel = 1e-11) {
  require(lo < hi, "empty search interval");
  require(grid_points >= 2, "grid needs at least two points");
  require(grid_points <= 20'000'000, "grid resolution is unreasonably large");

  ScalarSearchResult res;
  res.trace.reserve(static_cast<std::size_t>(grid_points) + 128);
  const auto better = [maximize](Real a, Real b) { return maximize ? a > b : a < b; };
  const auto eval = [&](Real x) {
    const Real fx = f(x);
    res.trace.emplace_back(x, fx);
    return fx;
  };

  const Real step = (hi - lo) / Real(grid_points - 1);
  int best_k = 0;
  for (int k = 0; k < grid_points; ++k) {
    const Real x = (k == grid_points - 1) ? hi : lo + Real(k) * step;
    const Real fx = eval(x);
    if (k == 0 || better(fx, res.fx)) {
      res.x = x;
      res.fx = fx;
      best_k = k;
    }
  }

  // Golden-section polish on the cells bracketing the best grid point.
  Real a = std::max(lo, lo + Real(best_k - 1) * step);
  Real b = std::min(hi, lo + Real(best_k + 1) * step);
  constexpr Real invphi = 0.6180339887498949;
  const Real span_tol = tol_rel * (hi - lo);
  Real x1 = b - invphi * (b - a);
  Real x2 = a + invphi * (b - a);
  Real f1 = eval(x1);
  Real f2 = eval(x2);
  if (better(f1, res.fx)) { res.x = x1; res.fx = f1; }
  if (better(f2, res.fx)) { res.x = x2; res.fx = f2; }
  for (int iter = 0; iter < 200 && (b - a) > span_tol; ++iter) {
    if (better(f2, f1)) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + invphi * (b - a);
      f2 = eval(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - invphi * (b - a);
      f1 = eval(x1);
    }
    const Real cand_x = better(f1, f2) ? x1 : x2;
    const Real cand_f = better(f1, f2) ? f1 : f2;
    if (better(cand_f, res.fx)) {
      res.x = cand_x;
      res.fx = cand_f;
    }
  }
  return res;
}

}  // namespace botecon
