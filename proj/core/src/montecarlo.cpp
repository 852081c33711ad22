#include "sti/montecarlo.hpp"

#include "sti/hyptrig.hpp"

#include <cmath>

namespace sti {

namespace {

double binomial_std_error(double p, std::uint64_t n) noexcept {
  return n == 0 ? 0.0 : std::sqrt(p * (1.0 - p) / static_cast<double>(n));
}

double ratio(std::uint64_t num, std::uint64_t den) noexcept {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

}  // namespace

std::optional<AngleTriple> propose_triple(SplitMix64& rng) noexcept {
  const double alpha = kPi * rng.uniform_open();
  const double beta = kPi * rng.uniform_open();
  const double gamma = kPi * rng.uniform_open();
  return AngleTriple::try_make(alpha, beta, gamma);
}

AngleTriple sample_triple(SplitMix64& rng) noexcept {
  for (;;) {
    if (auto t = propose_triple(rng)) return *t;
  }
}

McEstimate estimate(std::uint64_t samples, std::uint64_t seed) {
  if (samples == 0) throw DomainError("estimate: samples must be at least 1");

  SplitMix64 rng(seed);
  std::uint64_t proposals = 0;
  std::uint64_t successes = 0;
  std::uint64_t acute = 0;
  std::uint64_t acute_successes = 0;
  std::uint64_t obtuse_successes = 0;

  for (std::uint64_t n = 0; n < samples; ++n) {
    std::optional<AngleTriple> t;
    while (!t) {
      ++proposals;
      t = propose_triple(rng);
    }
    const bool holds = sti_holds(*t);
    successes += holds;
    if (t->gamma() < kHalfPi) {
      ++acute;
      acute_successes += holds;
    } else {
      obtuse_successes += holds;
    }
  }

  McEstimate out{};
  out.samples = samples;
  out.seed = seed;
  out.p_hat = ratio(successes, samples);
  out.std_error = binomial_std_error(out.p_hat, samples);
  out.conditional_samples = acute;
  out.conditional_p_hat = ratio(acute_successes, acute);
  out.conditional_std_error = binomial_std_error(out.conditional_p_hat, acute);
  out.obtuse_samples = samples - acute;
  out.obtuse_successes = obtuse_successes;
  out.proposals = proposals;
  return out;
}

}  // namespace sti
