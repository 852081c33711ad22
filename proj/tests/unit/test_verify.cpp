#include <doctest.h>

#include "sti/angles.hpp"
#include "sti/hyptrig.hpp"
#include "sti/verify.hpp"

#include <cmath>
#include <string>

using namespace sti;

TEST_CASE("euclidean_limit_ratio") {
  // Equilateral: (1 + 1 - 1) / (sqrt(3)/2)
  const double third = std::acos(-1.0) / 3.0;
  CHECK(euclidean_limit_ratio(third, third, third) == doctest::Approx(2.0 / std::sqrt(3.0)));
  // Right isosceles with the right angle at gamma: (2 - sqrt 2) / (1/sqrt 2)... scaled by sin
  const double q = std::acos(-1.0) / 4.0;
  CHECK(euclidean_limit_ratio(q, q, 2 * q) == doctest::Approx(2.0 * std::sqrt(2.0) - 2.0));
}

TEST_CASE("identity suite passes") {
  const VerifyReport r = run_identity_suite(42, 4000);
  CHECK(r.seed == 42);
  REQUIRE(r.checks.size() == 8);
  for (const CheckResult& c : r.checks) {
    CAPTURE(c.name);
    CAPTURE(c.worst);
    CHECK(c.checked > 0);
    CHECK(c.failures == 0);
  }
  CHECK(r.all_passed());
  CHECK(r.passed_count() == 8);

  const VerifyReport again = run_identity_suite(42, 4000);
  for (std::size_t k = 0; k < r.checks.size(); ++k) {
    CHECK(again.checks[k].worst == r.checks[k].worst);
  }
}

TEST_CASE("infinitesimal limit") {
  const CheckResult c = check_infinitesimal_limit(42, 50);
  CAPTURE(c.worst);
  CHECK(c.checked == 50);
  CHECK(c.passed());
  CHECK(c.worst < 1e-3);
}

TEST_CASE("strength ratio converges linearly, also for thin targets") {
  // Two small angles and one near pi: slow but still first order.
  const double a = 0.077;
  const double g = 0.076;
  const double b = std::acos(-1.0) - a - g;
  const double target = euclidean_limit_ratio(a, b, g);
  double prev = 0.0;
  for (double t : {1e-3, 1e-4, 1e-5, 1e-6}) {
    const double err =
        std::abs(euclidean_strength_ratio(AngleTriple::make(a - t, b - t, g - t)) - target);
    if (prev > 0.0) CHECK(prev / err == doctest::Approx(10.0).epsilon(0.01));
    prev = err;
  }
}

TEST_CASE("infinitesimal limit across seeds") {
  for (std::uint64_t seed : {1u, 2u, 3u, 99u, 1234u}) {
    CAPTURE(seed);
    CHECK(check_infinitesimal_limit(seed).passed());
  }
}

TEST_CASE("CheckResult with nothing checked does not pass") {
  CheckResult c;
  CHECK_FALSE(c.passed());
  VerifyReport r;
  r.checks.push_back(c);
  CHECK(r.failed_count() == 1);
  CHECK_FALSE(r.all_passed());
}
