#pragma once

#include <array>

namespace ldpc {

/// Value/derivative pair of a witness-size generating polynomial at x = 1:
/// val = p(1) (probability), der = p'(1) (expected witness size contribution).
struct ValDer {
  double val = 0.0;
  double der = 0.0;
};

/// Augmented density evolution for the LGalB witness, l = 3. The value track
/// reproduces the scalar LGalB recursion exactly; the derivative track is the
/// expected witness size per edge.
struct WitnessDEState {
  ValDer p;          ///< variable-to-check bad-message polynomial p_l
  int iteration = 0;
  bool terminated = false;  ///< p.val reached 0; absorbing
};

/// State p_1(x) = eps * x.
WitnessDEState witness_de_init(double eps);

/// One exact (value, derivative) propagation step. Requires l = 3.
WitnessDEState witness_de_step(const WitnessDEState& s, double eps, int r);

/// Scalar inequality companion of the derivative track:
/// p_l <= 2 eps (r-1) p_{l-1} + 2 eps (r-1) x_{l-1}
///        + (1-eps)(r-1)^2 x_{l-1}^2 + 2 (1-eps)(r-1)^2 x_{l-1} p_{l-1}.
double witness_der_bound_step(double der_bound, double x_prev, double eps, int r);

/// Witness-size augmented DE for LMS(2), l = 3: one (val, der) pair per
/// variable-output message class mu in {-2,...,+2} (outputs beyond +-2 are
/// merged into the end classes; class +2 is good and carries no witness).
struct Ms2WitnessDEState {
  std::array<ValDer, 5> p;  ///< index mu + 2
  int iteration = 0;

  double bad_mass() const;          ///< sum of values over mu in {-2..+1}
  double witness_size() const;      ///< sum of derivatives over mu in {-2..+1}
  double total() const;             ///< sum of values over all mu
};

/// State p_1^{-1} = (eps, eps), p_1^{+1} = (1-eps, 1-eps), others zero.
Ms2WitnessDEState ms2_witness_de_init(double eps);

/// One exact propagation of the five-component system. Requires l = 3, M = 2.
Ms2WitnessDEState ms2_witness_de_step(const Ms2WitnessDEState& s, double eps, int r);

}  // namespace ldpc
