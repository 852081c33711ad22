#include "sti/verify.hpp"

#include "sti/angles.hpp"
#include "sti/criterion.hpp"
#include "sti/hyptrig.hpp"
#include "sti/rng.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

namespace sti {

namespace {

double relative(double x, double y) noexcept {
  return std::abs(x - y) / std::max(std::abs(x), std::abs(y));
}

double uniform(SplitMix64& rng, double lo, double hi) noexcept {
  return lo + (hi - lo) * rng.uniform_open();
}

// Uniform point of the criterion region by rejection from (0, pi/2)^3.
AngleTriple sample_region(SplitMix64& rng) {
  for (;;) {
    const double a = uniform(rng, 0.0, kHalfPi);
    const double b = uniform(rng, 0.0, kHalfPi);
    const double g = uniform(rng, 0.0, kHalfPi);
    if (auto t = AngleTriple::try_make(a, b, g); t && t->in_criterion_region()) {
      return *t;
    }
  }
}

// Runs `body` on `samples` region points; body returns the residual or the
// margin, and whether the property held (nullopt = not applicable).
struct Observation {
  bool applicable;
  bool ok;
  double value;
};

CheckResult sampled_check(std::string name, double threshold,
                          SplitMix64 rng, std::size_t samples,
                          bool track_max,
                          const std::function<Observation(SplitMix64&)>& body) {
  CheckResult r;
  r.name = std::move(name);
  r.threshold = threshold;
  r.worst = track_max ? 0.0 : INFINITY;
  for (std::size_t i = 0; i < samples; ++i) {
    const Observation o = body(rng);
    if (!o.applicable) continue;
    ++r.checked;
    if (!o.ok) ++r.failures;
    r.worst = track_max ? std::max(r.worst, o.value) : std::min(r.worst, o.value);
  }
  return r;
}

}  // namespace

std::size_t VerifyReport::passed_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); }));
}

std::size_t VerifyReport::failed_count() const noexcept {
  return checks.size() - passed_count();
}

double euclidean_limit_ratio(double alpha, double beta, double gamma) noexcept {
  const double sa = std::sin(alpha);
  const double sb = std::sin(beta);
  return (sa + sb - std::sin(gamma)) / (sa * sb);
}

VerifyReport run_identity_suite(std::uint64_t seed, std::size_t samples) {
  SplitMix64 root(seed);
  VerifyReport report;
  report.seed = seed;
  const double g_crit = gamma_crit();
  const double g_bb = bb_bound();

  report.checks.push_back(sampled_check(
      "area_identity", 1e-10, root.split(), samples, true, [](SplitMix64& rng) {
        const AngleTriple t = sample_region(rng);
        const TriangleSolution s = solve_triangle(t);
        const double lhs = std::sinh(s.c) * std::sinh(s.h);
        const double rhs = std::sinh(s.a) * std::sinh(s.b) * std::sin(t.gamma());
        const double res = relative(lhs, rhs);
        return Observation{true, res < 1e-10, res};
      }));

  report.checks.push_back(sampled_check(
      "altitude_identity", 1e-10, root.split(), samples, true,
      [](SplitMix64& rng) {
        const AngleTriple t = sample_region(rng);
        const TriangleSolution s = solve_triangle(t);
        const double ch = std::cosh(s.h);
        const double cb = std::cos(t.beta());
        const double q =
            (cb * std::cos(t.gamma()) + std::cos(t.alpha())) / std::sin(t.gamma());
        const double res = relative(ch * ch, cb * cb + q * q);
        return Observation{true, res < 1e-10, res};
      }));

  report.checks.push_back(sampled_check(
      "sign_agreement", 1e-8, root.split(), samples, false, [](SplitMix64& rng) {
        const AngleTriple t = sample_region(rng);
        const double f = f_value(t.alpha(), t.beta(), t.gamma());
        if (std::abs(f) <= 1e-8) return Observation{false, true, 0.0};
        const double s = solve_triangle(t).strength;
        return Observation{true, (f > 0.0) == (s > 0.0), std::abs(f)};
      }));

  report.checks.push_back(sampled_check(
      "f_decreasing_in_gamma", 0.0, root.split(), samples, false,
      [](SplitMix64& rng) {
        const AngleTriple t = sample_region(rng);
        const double g1 =
            uniform(rng, std::max(t.alpha(), t.beta()), t.gamma());
        const double f1 = f_value(t.alpha(), t.beta(), g1);
        const double f2 = f_value(t.alpha(), t.beta(), t.gamma());
        return Observation{true, f1 > f2, f1 - f2};
      }));

  report.checks.push_back(sampled_check(
      "nonnegative_quotient", 1.0, root.split(), samples, false,
      [](SplitMix64& rng) {
        const AngleTriple t = sample_region(rng);
        const double cg = std::cos(t.gamma());
        const double q = (std::cos(t.alpha()) * std::cos(t.beta()) + cg) /
                         (cg + 1.0 - std::sin(t.gamma()));
        return Observation{true, q > 1.0, q};
      }));

  report.checks.push_back(sampled_check(
      "plus_branch_negative", 0.0, root.split(), samples, true,
      [](SplitMix64& rng) {
        const AngleTriple t = sample_region(rng);
        const QuadCoeffs q = quad_coeffs(t.alpha(), t.gamma());
        const double d = q.discriminant();
        if (d < 0.0 || q.qa == 0.0) return Observation{false, true, 0.0};
        // (-qb + sqrt d) / (2 qa) rewritten as 2 qc / (-qb - sqrt d).
        const double plus = 2.0 * q.qc / (-q.qb - std::sqrt(d));
        return Observation{true, plus < 0.0 && q.qb > 0.0 && q.qc > 0.0, plus};
      }));

  report.checks.push_back(sampled_check(
      "zero_curve_involution", 1e-9, root.split(), samples, true,
      [g_crit](SplitMix64& rng) {
        const double gamma = uniform(rng, g_crit, kHalfPi);
        const double alpha = uniform(rng, 0.0, i_of_gamma(gamma));
        const auto usable = [](const ZeroCurvePoint& p) {
          return !p.discriminant_negative && !p.out_of_range &&
                 !p.clamped_to_diagonal && p.value > 0.0;
        };
        const ZeroCurvePoint pair = evaluate_zero_curve(gamma, alpha);
        if (!usable(pair) || !(pair.value < gamma)) {
          return Observation{false, true, 0.0};
        }
        // The round trip multiplies the rounding of the inner value by
        // 1/|z'(x)|, and |z'(x)| |z'(z(x))| = 1 on the curve. Start from the
        // larger member of the pair, where the curve is the steeper one.
        const double x = std::max(alpha, pair.value);
        const ZeroCurvePoint first = evaluate_zero_curve(gamma, x);
        if (!usable(first) || !(first.value < gamma)) {
          return Observation{false, true, 0.0};
        }
        const ZeroCurvePoint back = evaluate_zero_curve(gamma, first.value);
        if (!usable(back)) return Observation{false, true, 0.0};
        const double res = std::abs(back.value - x);
        return Observation{true, res < 1e-9, res};
      }));

  report.checks.push_back(sampled_check(
      "isosceles_failure", 0.0, root.split(), samples, true,
      [g_bb](SplitMix64& rng) {
        const double gamma = uniform(rng, g_bb, kHalfPi - 1e-6);
        const double alpha = uniform(rng, 0.0, (kPi - gamma) / 2.0);
        const double f = f_value(alpha, alpha, gamma);
        return Observation{true, f < 0.0, f};
      }));

  return report;
}

CheckResult check_infinitesimal_limit(std::uint64_t seed, std::size_t targets) {
  constexpr std::array<double, 3> kSteps{1e-3, 1e-4, 1e-5};
  // The error is C t with C growing like 1 / (sin a sin b sin g); below about
  // 0.1 a thin target needs t < 1e-5 to reach the threshold.
  constexpr double kMinAngle = 0.15;
  SplitMix64 rng(seed);

  CheckResult r;
  r.name = "infinitesimal_limit";
  r.threshold = 1e-3;
  for (std::size_t n = 0; n < targets; ++n) {
    double a = 0.0;
    double b = 0.0;
    double g = 0.0;
    do {
      a = uniform(rng, 0.0, kPi);
      b = uniform(rng, 0.0, kPi);
      g = kPi - a - b;
    } while (a < kMinAngle || b < kMinAngle || g < kMinAngle);
    const double da = uniform(rng, 0.5, 1.5);
    const double db = uniform(rng, 0.5, 1.5);
    const double dg = uniform(rng, 0.5, 1.5);
    const double target = euclidean_limit_ratio(a, b, g);

    std::array<double, kSteps.size()> err{};
    bool ok = true;
    for (std::size_t k = 0; k < kSteps.size(); ++k) {
      const double t = kSteps[k];
      const auto angles = AngleTriple::try_make(a - t * da, b - t * db, g - t * dg);
      if (!angles) {
        ok = false;
        break;
      }
      err[k] = std::abs(euclidean_strength_ratio(*angles) - target);
      if (k > 0 && !(err[k] < err[k - 1])) ok = false;
    }
    ok = ok && err.back() < r.threshold;
    ++r.checked;
    if (!ok) ++r.failures;
    r.worst = std::max(r.worst, err.back());
  }
  return r;
}

}  // namespace sti
