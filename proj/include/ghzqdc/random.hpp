#pragma once

#include <cstdint>
#include <random>

namespace ghzqdc {

using Rng = std::mt19937_64;

// SplitMix64 finalizer.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Per-trial seed: splitmix64(seed ^ splitmix64(index)). `stream` separates
// independent consumers of the same trial (session, adversary, message).
constexpr std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index, std::uint64_t stream = 0) {
  return splitmix64(seed ^ splitmix64(index + 0x632BE59BD9B4E019ULL * stream));
}

}  // namespace ghzqdc
