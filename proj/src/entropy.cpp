#include "ldpc/entropy.hpp"

#include <cmath>
#include <stdexcept>

namespace ldpc {

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw std::invalid_argument("binary_entropy: x outside [0,1]");
  if (x == 0.0 || x == 1.0) return 0.0;
  return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

double shannon_threshold(double rate) {
  if (!(rate >= 0.0 && rate <= 1.0)) throw std::invalid_argument("shannon_threshold: rate outside [0,1]");
  const double target = 1.0 - rate;
  double lo = 0.0, hi = 0.5;
  // h2 is increasing on [0, 1/2].
  while (hi - lo > 1e-10) {
    const double mid = 0.5 * (lo + hi);
    if (binary_entropy(mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace ldpc
