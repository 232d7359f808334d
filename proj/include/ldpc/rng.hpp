#pragma once

#include <cstdint>
#include <random>

namespace ldpc {

/// splitmix64 finalizer; used both as a mixer and to seed engines.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
  return mix64(mix64(a) ^ (0x9e3779b97f4a7c15ULL + b));
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return mix64(mix64(a, b) ^ (0xd1342543de82ef95ULL + c));
}

/// Engine for stream `stream` derived from a master seed. Trial k of an
/// experiment uses derive_engine(master, k) so runs are reproducible in
/// isolation and independent of thread count.
inline std::mt19937_64 derive_engine(std::uint64_t master, std::uint64_t stream) {
  return std::mt19937_64(mix64(master, stream));
}

/// Deterministic coin for (seed, a, b), e.g. per (edge, iteration) tie breaks.
inline bool coin(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  return (mix64(seed, a, b) & 1u) != 0;
}

}  // namespace ldpc
