#include "ldpc/de_scalar.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ldpc {

namespace {

double binom(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

void check_probability(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) throw std::invalid_argument(std::string(name) + " outside [0,1]");
}

}  // namespace

double lgalb_map(double x, double eps, int l, int r) {
  check_probability(x, "lgalb_map: x");
  check_probability(eps, "lgalb_map: eps");
  if (l < 3) throw std::invalid_argument("lgalb_map: requires l >= 3");
  const double y = std::pow(1.0 - x, r - 1);  // P{check output good}
  const double eps_bar = 1.0 - eps;

  double bad_channel = 0.0;  // bad received value, at most floor((l-1)/2) good inputs
  for (int k = 0; k <= (l - 1) / 2; ++k)
    bad_channel += binom(l - 1, k) * std::pow(y, k) * std::pow(1.0 - y, l - 1 - k);

  double good_channel = 0.0;  // good received value, more than floor(l/2) bad inputs
  for (int k = l / 2 + 1; k <= l - 1; ++k)
    good_channel += binom(l - 1, k) * std::pow(1.0 - y, k) * std::pow(y, l - 1 - k);

  double ties = 0.0;
  if (l % 2 == 0) {
    const int h = l / 2;
    ties = 0.5 * binom(l - 1, h) *
           (eps * std::pow(y, h) * std::pow(1.0 - y, h - 1) +
            eps_bar * std::pow(1.0 - y, h) * std::pow(y, h - 1));
  }
  return eps * bad_channel + eps_bar * good_channel + ties;
}

double galb_de_step(double x, double eps, int l, int r) {
  check_probability(x, "galb_de_step: x");
  check_probability(eps, "galb_de_step: eps");
  const double q = 0.5 * (1.0 - std::pow(1.0 - 2.0 * x, r - 1));  // check-output error

  // Majority over l votes: l-1 incoming plus the received value. For even l
  // a tie of l/2 bad votes goes bad with probability 1/2.
  auto weight = [&](int bad_votes) {
    if (2 * bad_votes > l) return 1.0;
    if (2 * bad_votes == l) return 0.5;
    return 0.0;
  };
  double out = 0.0;
  for (int j = 0; j <= l - 1; ++j) {
    const double pj = binom(l - 1, j) * std::pow(q, j) * std::pow(1.0 - q, l - 1 - j);
    out += pj * (eps * weight(j + 1) + (1.0 - eps) * weight(j));
  }
  return out;
}

bool de_converges(const DEMap& map, double eps, int l_max) {
  double x = eps;
  for (int i = 0; i < l_max; ++i) {
    if (x < 1e-12) return true;
    x = map(x, eps);
  }
  return x < 1e-12;
}

ThresholdResult find_threshold(const DEMap& map, double tol, int l_max) {
  if (!(tol > 0.0)) throw std::invalid_argument("find_threshold: tol must be positive");
  double lo = 0.0, hi = 0.5;
  if (!de_converges(map, 1e-6, l_max)) throw std::runtime_error("find_threshold: map does not converge even at eps=1e-6");
  while (de_converges(map, hi, l_max)) {
    lo = hi;
    hi = std::min(1.0, 2.0 * hi);
    if (hi >= 1.0) break;
  }
  // Monotonicity spot check across the bracket.
  if (!de_converges(map, lo, l_max) && lo > 0.0)
    throw std::runtime_error("find_threshold: non-monotone convergence predicate");
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (de_converges(map, mid, l_max))
      lo = mid;
    else
      hi = mid;
  }
  return {0.5 * (lo + hi), lo, hi};
}

double threshold_by_fixed_point_scan(const DEMap& map, double tol, int grid) {
  auto has_fixed_point = [&](double eps) {
    for (int i = 1; i <= grid; ++i) {
      const double x = eps * i / grid;
      if (map(x, eps) - x >= 0.0) return true;
    }
    return false;
  };
  double lo = 0.0, hi = 0.5;
  while (!has_fixed_point(hi) && hi < 1.0) hi = std::min(1.0, 2.0 * hi);
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if (has_fixed_point(mid))
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace ldpc
