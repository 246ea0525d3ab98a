#pragma once

// Seeded random numbers for the samplers and the Monte-Carlo harness.
//
// splitmix64 underneath: tiny, fast, and fully specified, so a seed produces
// the same stream on every platform and compiler. The standard <random>
// distributions give no such guarantee, and the harness contracts require
// bit-for-bit reproducibility.

#include <cmath>
#include <cstdint>

namespace pairrank {

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;

inline std::uint64_t splitmix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Deterministic per-stream seed derivation (stream = trial index or a role
// tag). Distinct streams of one base seed are independent splitmix outputs,
// so execution order cannot change results.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t stream) {
  return splitmix64(base + (stream + 1) * kGoldenGamma);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += kGoldenGamma;
    return splitmix64(state_);
  }

  // Strictly inside (0,1); never returns 0, so log(uniform01()) is safe.
  double uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Box-Muller; two uniforms per draw, no state carried between calls.
  double normal() {
    double u1 = uniform01();
    double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
  }

  double exponential() { return -std::log(uniform01()); }

  // Inclusive range; modulo bias is irrelevant at the tiny ranges used here.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(next_u64() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

}  // namespace pairrank
