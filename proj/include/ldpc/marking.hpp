#pragma once

#include <cstdint>
#include <vector>

#include "ldpc/channel.hpp"
#include "ldpc/tanner_graph.hpp"

namespace ldpc {

enum class MarkSchedule { Fifo, Lifo, Random };

struct MarkingResult {
  std::vector<std::uint8_t> marked;    ///< per-variable marked flag
  std::vector<std::uint8_t> internal_; ///< marked variables that re-broadcast
  int marked_count = 0;
};

/// Asynchronous marking closure. Starting from a set of marked
/// variable-to-check edges, a fired v->c edge marks all sibling edges of its
/// check as check-to-variable; a c->v arrival at a variable with a bad
/// received value (or an already-marked good variable) marks the variable
/// and fires all its outgoing edges; a first arrival at a good unmarked
/// variable only marks it. Facts only grow, so the process terminates and
/// the result is a fixed point; the schedule argument exists so tests can
/// assert order invariance.
MarkingResult run_marking(const TannerGraph& g, const NoiseRealization& e,
                          const std::vector<int>& initial_vc_edges,
                          MarkSchedule schedule = MarkSchedule::Fifo, std::uint64_t seed = 0);

}  // namespace ldpc
