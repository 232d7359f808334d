#include "ldpc/channel.hpp"

#include <numeric>
#include <stdexcept>

#include "ldpc/rng.hpp"

namespace ldpc {

int NoiseRealization::bad_count() const {
  return std::accumulate(bad.begin(), bad.end(), 0);
}

NoiseRealization sample_noise(int n, Channel channel, double eps, std::uint64_t seed) {
  if (!(eps >= 0.0 && eps <= 1.0)) throw std::invalid_argument("sample_noise: eps outside [0,1]");
  NoiseRealization e;
  e.channel = channel;
  e.eps = eps;
  e.bad.resize(n);
  auto rng = derive_engine(seed, 1);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < n; ++i) e.bad[i] = u(rng) < eps ? 1 : 0;
  return e;
}

}  // namespace ldpc
