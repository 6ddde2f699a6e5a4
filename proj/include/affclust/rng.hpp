#pragma once

#include <cmath>
#include <cstdint>

namespace affclust {

// SplitMix64: portable, seedable, O(1)-splittable stream generator.
// Streams are derived by hashing a seed with stream keys (e.g. triangle
// index, voxel key), so parallel producers get identical output for a
// fixed seed regardless of scheduling.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 bits of randomness.
  double next_double() { return double(next_u64() >> 11) * 0x1.0p-53; }

  // Standard normal via Box-Muller (two uniforms per pair of calls;
  // we draw fresh uniforms every call to stay stateless-per-call).
  double next_normal() {
    double u1 = next_double();
    double u2 = next_double();
    // Guard log(0).
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

 private:
  uint64_t state_;
};

// Derives a child seed from a parent seed and stream keys.
inline uint64_t mix_seed(uint64_t seed, uint64_t a, uint64_t b = 0, uint64_t c = 0) {
  SplitMix64 g(seed ^ (a * 0x9e3779b97f4a7c15ull) ^ (b * 0xc2b2ae3d27d4eb4full) ^
               (c * 0x165667b19e3779f9ull));
  return g.next_u64();
}

}  // namespace affclust
