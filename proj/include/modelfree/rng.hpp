#pragma once

#include <cstdint>

namespace modelfree {

// Deterministic counter-based random stream. Every resampling replicate gets
// its own stream keyed by (seed, method id, replicate index), so parallel and
// serial execution produce bit-identical draws and no state is shared across
// replicates.
//
// The generator is a splitmix64 walk; keys are absorbed through the finalizer
// so distinct (seed, key_a, key_b) triples start in well-separated states.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : state_(mix(seed + kGamma)) {}

  RngStream(std::uint64_t seed, std::uint64_t key_a, std::uint64_t key_b)
      : state_(mix(mix(mix(seed + kGamma) ^ (key_a + kGamma)) ^
                   (key_b + kGamma))) {}

  std::uint64_t next_u64() {
    state_ += kGamma;
    return mix(state_);
  }

  // Uniform on the open interval (0, 1); 53-bit resolution, never 0 or 1,
  // so inverse-CDF transforms stay finite.
  double next_uniform() {
    const std::uint64_t bits = next_u64() >> 11;
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
  }

  // Standard normal via the inverse CDF; consumes exactly one uniform.
  double next_normal();

  // Uniform index in [0, n) by 128-bit multiply-shift (fixed draw count,
  // bias O(n / 2^64)).
  std::size_t next_index(std::size_t n) {
    const unsigned __int128 wide =
        static_cast<unsigned __int128>(next_u64()) * n;
    return static_cast<std::size_t>(wide >> 64);
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

// Stream key namespaces, one per randomized subsystem.
namespace rng_key {
inline constexpr std::uint64_t kEmpiricalBoot = 1;
inline constexpr std::uint64_t kMultiplierBoot = 2;
inline constexpr std::uint64_t kResidualBoot = 3;
inline constexpr std::uint64_t kSubsampling = 4;
inline constexpr std::uint64_t kDiagnosticBoot = 5;
inline constexpr std::uint64_t kSimData = 6;
}  // namespace rng_key

}  // namespace modelfree
