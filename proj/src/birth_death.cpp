#include "ldpc/birth_death.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "ldpc/rng.hpp"

namespace ldpc {

namespace {

// Population after t steps with k extensions, scaled by p to stay exact-ish:
// X = a - t + k mu / p, alive iff X > 0.
bool alive(const BDParams& q, long long t, long long k) {
  return (double)(q.a - t) * q.p + (double)k * q.mu > 1e-9;
}

double chernoff_bound(const BDParams& q, long long b) {
  const double num = (q.beta - 1.0) * (1.0 - q.p);
  const double den = q.p + q.beta * (q.mu - q.p);
  if (!(num > 0.0) || !(den > 0.0)) return 1.0;
  const double s = (q.p / q.mu) * std::log(num / den);
  if (!(s > 0.0)) return 1.0;
  const double base = (1.0 - q.p) * std::exp(-s) + q.p * std::exp((q.mu / q.p - 1.0) * s);
  const double val = std::exp(q.a * s) * std::pow(base, (double)b);
  return std::min(val, 1.0);
}

double exact_tail(const BDParams& q, long long b) {
  // dp[k]: probability of being alive after t steps with k extensions.
  std::vector<double> dp(b + 1, 0.0), nx(b + 1, 0.0);
  dp[0] = 1.0;
  for (long long t = 1; t <= b; ++t) {
    std::fill(nx.begin(), nx.end(), 0.0);
    for (long long k = 0; k <= t; ++k) {
      double mass = 0.0;
      if (k <= t - 1 && dp[k] > 0.0) mass += dp[k] * (1.0 - q.p);
      if (k >= 1 && dp[k - 1] > 0.0) mass += dp[k - 1] * q.p;
      if (mass > 0.0 && alive(q, t, k)) nx[k] = mass;
    }
    dp.swap(nx);
  }
  double sum = 0.0;
  for (double x : dp) sum += x;
  return sum;
}

}  // namespace

BDTail bd_tail(const BDParams& params, long long trials, std::uint64_t seed,
               long long max_exact_b) {
  if (params.a < 1) throw std::invalid_argument("bd_tail: a must be >= 1");
  if (!(params.p > 0.0 && params.p <= 1.0))
    throw std::invalid_argument("bd_tail: need 0 < p <= 1");
  if (!(params.mu > 0.0 && params.mu < 1.0))
    throw std::invalid_argument("bd_tail: need 0 < mu < 1");
  const double ba = params.beta * params.a;
  const long long b = std::llround(ba);
  if (b < 1 || std::abs(ba - (double)b) > 1e-9)
    throw std::invalid_argument("bd_tail: beta * a must be a positive integer");

  BDTail out;
  if (params.mu < params.p && params.beta >= params.p / (params.p - params.mu) - 1e-12) {
    // X_t <= a + t (mu/p - 1), which is <= 0 for every t >= beta a.
    out.exactly_zero = true;
    out.chernoff = 0.0;
    out.exact = 0.0;
    return out;
  }

  out.chernoff = chernoff_bound(params, b);
  if (b <= max_exact_b) out.exact = exact_tail(params, b);

  long long survived = 0;
  for (long long tr = 0; tr < trials; ++tr) {
    auto eng = derive_engine(seed, (std::uint64_t)tr);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    long long k = 0;
    bool ok = true;
    for (long long t = 1; t <= b; ++t) {
      if (u(eng) < params.p) ++k;
      if (!alive(params, t, k)) {
        ok = false;
        break;
      }
    }
    if (ok) ++survived;
  }
  if (trials > 0) {
    out.empirical = (double)survived / trials;
    out.mc_sigma = std::sqrt(out.empirical * (1.0 - out.empirical) / trials);
  }
  return out;
}

}  // namespace ldpc
