#pragma once

#include <cstdint>
#include <vector>

#include "ldpc/channel.hpp"
#include "ldpc/tanner_graph.hpp"

namespace ldpc {

enum class DecoderKind {
  GalB,  ///< sign product at checks, majority vote at variables
  LGalB, ///< minimum at checks (all-one convention), GalB variable rule
  MS,    ///< min-sum on the integer message lattice of the BSC
  LMS,   ///< linearized min-sum: plain minimum at checks
  BP,    ///< belief propagation on log-likelihood reals
};

struct DecoderSpec {
  DecoderKind kind = DecoderKind::GalB;
  int M = 0;                       ///< check-output reliability clip; 0 = unbounded
  double channel_llr_bound = 0.0;  ///< BP only: clip channel LLRs first; 0 = none
};

struct IterationStats {
  double ber = 0.0;                ///< fraction of wrong bit decisions
  bool block_error = false;        ///< any wrong bit decision
  double bad_edge_fraction = 0.0;  ///< fraction of bad variable-to-check messages
};

struct DecodeResult {
  std::vector<IterationStats> trace;  ///< entry per iteration 1..iters
};

/// Parallel (flooding) schedule. Iteration 1 sends the received values;
/// iteration k >= 2 is a check step on iteration k-1 messages followed by a
/// variable step. GalB/LGalB ties are broken by a coin derived from
/// (tie_seed, edge, iteration), so runs with a shared tie_seed are exactly
/// coupled; bit-decision ties use a per-(variable, iteration) coin.
DecodeResult run_decoder(const TannerGraph& g, const NoiseRealization& e, const DecoderSpec& spec,
                         int iters, std::uint64_t tie_seed);

/// GalB/LGalB only: per-iteration bad flags of the variable-to-check
/// messages, msgs[k][e] for iteration k+1 (msgs[0] is the received value).
std::vector<std::vector<std::uint8_t>> run_binary_decoder_messages(const TannerGraph& g,
                                                                   const NoiseRealization& e,
                                                                   DecoderKind kind, int iters,
                                                                   std::uint64_t tie_seed);

}  // namespace ldpc
