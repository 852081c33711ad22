#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace sti {

/// Outcome of one sampled identity or property check.
struct CheckResult {
  std::string name;
  std::uint64_t checked = 0;   // samples on which the property was evaluated
  std::uint64_t failures = 0;
  double worst = 0.0;          // largest residual / smallest margin observed
  double threshold = 0.0;

  bool passed() const noexcept { return checked > 0 && failures == 0; }
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  std::size_t passed_count() const noexcept;
  std::size_t failed_count() const noexcept;
  bool all_passed() const noexcept { return failed_count() == 0; }
};

inline constexpr std::size_t kDefaultVerifySamples = 10000;
inline constexpr std::size_t kDefaultLimitTargets = 100;

/// (sin a + sin b - sin g) / (sin a sin b): the ratio (a + b - c)/h of a
/// Euclidean triangle with angles (a, b, g), a + b + g = pi.
double euclidean_limit_ratio(double alpha, double beta, double gamma) noexcept;

/// Sampled identities on the region max(alpha, beta) < gamma < pi/2,
/// alpha + beta + gamma < pi, each check drawing `samples` points from its
/// own stream split off `seed`:
///
///   area_identity          |sinh c sinh h - sinh a sinh b sin g| < 1e-10 rel
///   altitude_identity      cosh^2 h = cos^2 b + ((cos b cos g + cos a)/sin g)^2
///   sign_agreement         sign f = sign strength wherever |f| > 1e-8
///   f_decreasing_in_gamma  f(a, b, g1) > f(a, b, g2) for g1 < g2
///   nonnegative_quotient   (cos a cos b + cos g)/(cos g + 1 - sin g) > 1
///   plus_branch_negative   the other root of the quadratic is negative
///   zero_curve_involution  z(z(x)) = x within 1e-9 where both are unclamped,
///                          x the steeper end of the pair (a, z(a))
///   isosceles_failure      f(a, a, g) < 0 for g in [bb_bound, pi/2 - 1e-6)
VerifyReport run_identity_suite(std::uint64_t seed,
                                std::size_t samples = kDefaultVerifySamples);

/// For `targets` seeded Euclidean angle triples and directions d > 0, checks
/// that |(a+b-c)/h - euclidean_limit_ratio| at angles target - t d decreases
/// over t = 1e-3, 1e-4, 1e-5 and is below 1e-3 at t = 1e-5.
CheckResult check_infinitesimal_limit(std::uint64_t seed,
                                      std::size_t targets = kDefaultLimitTargets);

}  // namespace sti
