#pragma once

#include <cstdint>
#include <vector>

namespace ldpc {

enum class Monotonicity { Increasing, Decreasing };

/// Exhaustive single-bit-flip monotonicity check of a table over {0,1}^n
/// (index = bitmask). If violating_pair is non-null and the check fails, it
/// receives (mask, mask | bit) witnessing the violation.
bool is_monotone(const std::vector<double>& f, Monotonicity dir,
                 std::pair<std::uint64_t, std::uint64_t>* violating_pair = nullptr);

/// E[f] under the product measure P{x} = eps^|x| (1-eps)^(n-|x|).
double product_expectation(const std::vector<double>& f, double eps);

/// Positive-correlation inequality E[f g] >= E[f] E[g] for f and g both
/// increasing or both decreasing under the product measure, computed
/// exhaustively. Throws std::invalid_argument (naming a violating pair) if
/// either table is not monotone in the requested direction, or if the
/// tables are not the same power-of-two size.
bool fkg_verify(double eps, const std::vector<double>& f, const std::vector<double>& g,
                Monotonicity dir);

}  // namespace ldpc
