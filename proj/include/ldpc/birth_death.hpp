#pragma once

#include <cstdint>
#include <optional>

namespace ldpc {

/// Population process X_0 = a, X_t = X_{t-1} - 1 + Y_t while X_{t-1} > 0,
/// where Y_t = mu/p with probability p and 0 otherwise (so E[Y] = mu).
/// T is the first t with X_t <= 0.
struct BDParams {
  int a = 1;          ///< initial population
  double p = 0.5;     ///< extension probability
  double mu = 0.5;    ///< mean offspring, 0 < mu < 1
  double beta = 4.0;  ///< horizon multiple; beta * a must be an integer
};

struct BDTail {
  double empirical = 0.0;            ///< Monte Carlo estimate of P{T > beta a}
  double mc_sigma = 0.0;             ///< binomial standard error of the estimate
  double chernoff = 1.0;             ///< exponential-moment upper bound
  std::optional<double> exact;       ///< dynamic program over (t, #extensions)
  bool exactly_zero = false;         ///< mu < p and beta >= p/(p - mu)
};

/// Tail probability P{T > beta a} three ways: Monte Carlo, the closed-form
/// bound e^{as}((1-p)e^{-s} + p e^{(mu/p-1)s})^{beta a} with
/// s = (p/mu) ln((beta-1)(1-p)/(p + beta(mu-p))), and an exact dynamic
/// program on the lattice X = a - t + k mu/p (skipped when beta a exceeds
/// max_exact_b). When mu < p and beta >= p/(p-mu) the tail is exactly 0
/// because each step adds at most mu/p - 1.
BDTail bd_tail(const BDParams& params, long long trials, std::uint64_t seed,
               long long max_exact_b = 20000);

}  // namespace ldpc
