#include "ldpc/fkg.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace ldpc {

namespace {

int table_bits(std::size_t size) {
  if (size == 0 || (size & (size - 1)) != 0)
    throw std::invalid_argument("fkg: table size must be a power of two");
  return std::countr_zero(size);
}

}  // namespace

bool is_monotone(const std::vector<double>& f, Monotonicity dir,
                 std::pair<std::uint64_t, std::uint64_t>* violating_pair) {
  const int n = table_bits(f.size());
  for (std::uint64_t mask = 0; mask < f.size(); ++mask) {
    for (int b = 0; b < n; ++b) {
      if (mask & (1ULL << b)) continue;
      const std::uint64_t up = mask | (1ULL << b);
      const bool ok =
          dir == Monotonicity::Increasing ? f[up] >= f[mask] : f[up] <= f[mask];
      if (!ok) {
        if (violating_pair) *violating_pair = {mask, up};
        return false;
      }
    }
  }
  return true;
}

double product_expectation(const std::vector<double>& f, double eps) {
  const int n = table_bits(f.size());
  double sum = 0.0;
  for (std::uint64_t mask = 0; mask < f.size(); ++mask) {
    const int ones = std::popcount(mask);
    sum += f[mask] * std::pow(eps, ones) * std::pow(1.0 - eps, n - ones);
  }
  return sum;
}

bool fkg_verify(double eps, const std::vector<double>& f, const std::vector<double>& g,
                Monotonicity dir) {
  if (f.size() != g.size()) throw std::invalid_argument("fkg_verify: table size mismatch");
  if (!(eps >= 0.0 && eps <= 1.0)) throw std::invalid_argument("fkg_verify: eps out of range");
  std::pair<std::uint64_t, std::uint64_t> bad;
  if (!is_monotone(f, dir, &bad))
    throw std::invalid_argument("fkg_verify: f not monotone at masks " +
                                std::to_string(bad.first) + " <= " + std::to_string(bad.second));
  if (!is_monotone(g, dir, &bad))
    throw std::invalid_argument("fkg_verify: g not monotone at masks " +
                                std::to_string(bad.first) + " <= " + std::to_string(bad.second));
  std::vector<double> fg(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) fg[i] = f[i] * g[i];
  const double lhs = product_expectation(fg, eps);
  const double rhs = product_expectation(f, eps) * product_expectation(g, eps);
  const double scale = 1.0 + std::abs(lhs) + std::abs(rhs);
  return lhs >= rhs - 1e-12 * scale;
}

}  // namespace ldpc
