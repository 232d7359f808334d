#pragma once

#include <cstdint>
#include <vector>

namespace ldpc {

enum class Channel { BSC, BEC };

/// Per-variable channel outcome under the all-one-codeword convention:
/// bad[v] = 1 means flipped (BSC) or erased (BEC).
struct NoiseRealization {
  Channel channel = Channel::BSC;
  double eps = 0.0;
  std::vector<std::uint8_t> bad;

  int n() const { return (int)bad.size(); }
  int bad_count() const;
};

/// iid outcomes, bad with probability eps; deterministic given seed.
NoiseRealization sample_noise(int n, Channel channel, double eps, std::uint64_t seed);

}  // namespace ldpc
