#pragma once

#include <functional>

namespace ldpc {

/// One application of the linearized-GalB density evolution map: the check
/// side is a minimum (output bad iff any input bad, y = (1-x)^(r-1) good),
/// the variable side a majority vote with the half-weight ties term exactly
/// when l is even.
double lgalb_map(double x, double eps, int l, int r);

/// One exact density-evolution step for Gallager B over BSC: check-output
/// error q = (1 - (1-2x)^(r-1))/2, then the exact binomial majority over the
/// l-1 incoming messages plus the received value; ties get weight 1/2.
double galb_de_step(double x, double eps, int l, int r);

/// A one-step DE map x -> f(x, eps).
using DEMap = std::function<double(double x, double eps)>;

struct ThresholdResult {
  double threshold = 0.0;  ///< bracket midpoint
  double lo = 0.0;         ///< largest eps known to converge
  double hi = 0.0;         ///< smallest eps known not to converge
};

/// True iff iterating `map` from x0 = eps drives x below 1e-12 within l_max
/// iterations.
bool de_converges(const DEMap& map, double eps, int l_max = 5000);

/// Bisection on eps of the convergence predicate; `map` must be monotone in
/// eps (spot-checked; violations raise std::runtime_error).
ThresholdResult find_threshold(const DEMap& map, double tol = 1e-6, int l_max = 5000);

/// Alternative threshold route: smallest eps for which the fixed point
/// equation x = map(x, eps) has a solution in (0, eps], located by scanning
/// x for a sign change of map(x, eps) - x. Cross-checks find_threshold.
double threshold_by_fixed_point_scan(const DEMap& map, double tol = 1e-6, int grid = 4096);

}  // namespace ldpc
