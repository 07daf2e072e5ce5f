#pragma once

#include <cmath>
#include <cstdint>

namespace vcnet {

namespace detail {
// SplitMix64 finalizer. Bijective on 64-bit words.
inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}
inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
}  // namespace detail

// Counter-based random stream: draw i is a pure function of
// (seed, stream, substream, i), so disjoint streams can be consumed
// in any order by any number of workers with identical results.
class Rng {
 public:
  using result_type = std::uint64_t;

  Rng(std::uint64_t seed, std::uint64_t stream = 0, std::uint64_t substream = 0)
      : state_(detail::mix64(detail::mix64(seed + detail::kGolden) ^
                             detail::mix64(stream * 0xD1342543DE82EF95ull + 0x63652362EC2F1DE5ull) ^
                             detail::mix64(substream * 0xC2B2AE3D27D4EB4Full + 0x165667B19E3779F9ull))) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~0ull; }

  result_type operator()() {
    state_ += detail::kGolden;
    return detail::mix64(state_);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  // Uniform in (0, 1]; safe to pass through log().
  double uniform_open0() { return 1.0 - uniform01(); }

  double exponential(double mean = 1.0) { return -std::log(uniform_open0()) * mean; }

 private:
  std::uint64_t state_;
};

// Named substream purposes; keeps draws for one trial independent of
// how many draws another purpose consumed.
namespace rng_domain {
inline constexpr std::uint64_t geometry = 1;
inline constexpr std::uint64_t marks = 2;
inline constexpr std::uint64_t gains = 3;
inline constexpr std::uint64_t fading = 4;
inline constexpr std::uint64_t distances = 5;
inline constexpr std::uint64_t oracle = 6;
}  // namespace rng_domain

// Factory for reproducible per-trial streams under one master seed.
struct StreamFamily {
  std::uint64_t seed = 0;

  Rng stream(std::uint64_t index, std::uint64_t domain = 0, std::uint64_t sub = 0) const {
    return Rng(seed, index, domain * 0x100000000ull + sub);
  }
};

// Deterministic derived seed (used to give each sweep row its own seed).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  return detail::mix64(detail::mix64(master + detail::kGolden) + index * detail::kGolden);
}

}  // namespace vcnet
