#pragma once

namespace ldpc {

/// Binary entropy h2(x) = -x log2 x - (1-x) log2(1-x), with h2(0)=h2(1)=0.
/// Throws std::invalid_argument outside [0,1].
double binary_entropy(double x);

/// The epsilon in [0, 1/2] with h2(epsilon) = 1 - rate, by bisection to 1e-10.
double shannon_threshold(double rate);

}  // namespace ldpc
