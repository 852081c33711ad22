#pragma once

#include <cstdint>
#include <limits>

namespace sti {

/// SplitMix64 (Steele, Lea and Flood 2014; the seeding generator used by the
/// xoshiro family). The state update and output mix are pinned here, so a
/// seed determines the same stream on every platform.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  constexpr result_type operator()() noexcept {
    state_ += 0x9e3779b97f4a7c15ULL;
    return mix(state_);
  }

  /// Uniform double in the open interval (0, 1): the top 53 bits offset by
  /// half a step, so neither endpoint is produced.
  constexpr double uniform_open() noexcept {
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Independent child stream: seeded with the mixed next output, which
  /// advances this stream by one step.
  constexpr SplitMix64 split() noexcept { return SplitMix64(mix((*this)())); }

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

}  // namespace sti
