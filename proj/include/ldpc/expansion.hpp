#pragma once

#include <cstdint>

#include "ldpc/tanner_graph.hpp"

namespace ldpc {

enum class ExpanderSide { Left, Right };

/// (alpha, gamma) vertex-expansion requirement: every node subset of size up
/// to floor(alpha * side size) must have at least gamma * |subset| * degree
/// distinct neighbors.
struct ExpansionSpec {
  double alpha = 0.0;  ///< fraction of nodes, (0, 1]
  double gamma = 0.0;  ///< expansion factor, (0, 1)
  ExpanderSide side = ExpanderSide::Left;
};

/// Exact check by exhaustive subset enumeration. Refuses (std::runtime_error)
/// when the number of subset evaluations exceeds `work_budget`; there is
/// deliberately no sampling fallback so the result stays usable as an oracle.
bool check_expander(const TannerGraph& g, const ExpansionSpec& spec,
                    std::uint64_t work_budget = (1ull << 24));

/// Smallest positive root of
///   (l-1)/l h2(a) - (l/r) h2(a g r) - a g r h2(1/(g r)) = 0,
/// bracketed by a 1024-point scan of (0, min(1, 1/(g r))) and bisected to
/// 1e-10. For the right-expander version call with l and r exchanged.
/// Throws std::domain_error for gamma >= 1 - 1/l, std::runtime_error if no
/// sign change is found.
double alpha_max(int l, int r, double gamma);

}  // namespace ldpc
