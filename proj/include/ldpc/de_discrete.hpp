#pragma once

#include <Eigen/Core>

namespace ldpc {

/// Pmf over a contiguous integer message alphabet [min_value, max_value].
struct DiscreteDensity {
  int min_value = 0;
  Eigen::ArrayXd pmf;  ///< pmf[i] = P{message = min_value + i}

  int max_value() const { return min_value + (int)pmf.size() - 1; }
  double prob(int value) const {
    const int i = value - min_value;
    return (i >= 0 && i < (int)pmf.size()) ? pmf[i] : 0.0;
  }
  double total() const { return pmf.sum(); }
  /// P{message >= value}
  double tail_geq(int value) const;
};

enum class MinSumVariant {
  MS,   ///< check output: sign product times minimum reliability
  LMS,  ///< linearized: check output is the plain minimum (all-one convention)
};

/// Channel-only density for BSC under the all-one-codeword convention:
/// +1 with probability 1-eps, -1 with probability eps.
DiscreteDensity bsc_channel_density(double eps);

/// One exact DE iteration of the bounded min-sum decoder MS(M) or its
/// linearized variant LMS(M): combine r-1 variable-output messages at the
/// check (clipping the result to [-M, M]), then add the channel value and
/// l-1 check outputs at the variable. The variable-output alphabet
/// [-(l-1)M-1, (l-1)M+1] is kept exactly; no quantization.
DiscreteDensity ms_de_step(const DiscreteDensity& d, double eps, int M, int l, int r,
                           MinSumVariant variant);

/// Bit error probability of a density under the all-one convention
/// (mass below zero plus half the mass at zero).
double error_probability(const DiscreteDensity& d);

/// DE threshold of MS(M): largest eps for which the variable-output error
/// probability falls below 1e-10 within l_max iterations.
double ms_threshold(int M, int l, int r, double tol = 1e-4, int l_max = 2000);

/// LMS(M) convergence boundary: largest eps for which the mass of
/// variable-output messages >= M tends to 1 (deficit below 1e-8) within
/// l_max iterations.
double lms_all_plus_m_boundary(int M, int l, int r, double tol = 1e-4, int l_max = 2000);

}  // namespace ldpc
