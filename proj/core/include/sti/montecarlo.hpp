#pragma once

#include "sti/angles.hpp"
#include "sti/rng.hpp"

#include <cstdint>
#include <optional>

namespace sti {

/// One proposal: three i.i.d. uniform angles on (0, pi). Returns nullopt when
/// their sum is not below pi (rejected).
std::optional<AngleTriple> propose_triple(SplitMix64& rng) noexcept;

/// Repeats propose_triple until a proposal is accepted (probability 1/6).
AngleTriple sample_triple(SplitMix64& rng) noexcept;

struct McEstimate {
  double p_hat;
  double std_error;
  std::uint64_t samples;
  std::uint64_t seed;
  double conditional_p_hat;  // among samples with gamma < pi/2
  double conditional_std_error;
  std::uint64_t conditional_samples;
  std::uint64_t obtuse_samples;    // gamma >= pi/2
  std::uint64_t obtuse_successes;  // always 0 in exact arithmetic
  std::uint64_t proposals;
};

/// Draws `samples` accepted triples from a SplitMix64 stream seeded with
/// `seed` and counts those with a + b > c + h. Single-threaded; (samples,
/// seed) fully determine the result. Throws DomainError when samples == 0.
McEstimate estimate(std::uint64_t samples, std::uint64_t seed);

}  // namespace sti
