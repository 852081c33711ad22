#include <doctest.h>

#include "sti/criterion.hpp"
#include "sti/hyptrig.hpp"
#include "sti/montecarlo.hpp"

#include <cmath>

using namespace sti;

TEST_CASE("SplitMix64 reference stream") {
  // Published reference outputs for seed 1234567.
  SplitMix64 rng(1234567);
  CHECK(rng() == 6457827717110365317ULL);
  CHECK(rng() == 3203168211198807973ULL);
  CHECK(rng() == 9817491932198370423ULL);

  SplitMix64 a(42);
  SplitMix64 b(42);
  SplitMix64 child = a.split();
  b();
  CHECK(a() == b());
  CHECK(child() != a());
}

TEST_CASE("uniform_open never hits the endpoints") {
  SplitMix64 rng(1);
  for (int i = 0; i < 100000; ++i) {
    const double u = rng.uniform_open();
    REQUIRE(u > 0.0);
    REQUIRE(u < 1.0);
  }
}

TEST_CASE("first accepted triple for seed 42") {
  SplitMix64 rng(42);
  const AngleTriple t = sample_triple(rng);
  CHECK(t.alpha() == 0.6391102448598415);
  CHECK(t.beta() == 0.32538805791117487);
  CHECK(t.gamma() == 1.5566549443052635);
  SplitMix64 again(42);
  CHECK(sample_triple(again) == t);
}

TEST_CASE("acceptance rate and marginal mean") {
  SplitMix64 rng(2718);
  const int proposals = 1'000'000;
  int accepted = 0;
  double gamma_sum = 0.0;
  double gamma_sq = 0.0;
  for (int i = 0; i < proposals; ++i) {
    if (auto t = propose_triple(rng)) {
      ++accepted;
      gamma_sum += t->gamma();
      gamma_sq += t->gamma() * t->gamma();
    }
  }
  const double p = 1.0 / 6.0;
  const double sigma = std::sqrt(p * (1 - p) / proposals);
  CHECK(std::abs(static_cast<double>(accepted) / proposals - p) < 3 * sigma);

  // On the tetrahedron gamma / pi has density 3 (1 - z)^2: mean 1/4,
  // variance 3/80.
  const double mean = gamma_sum / accepted;
  const double var = 3.0 * kPi * kPi / 80.0;
  CHECK(std::abs(mean - kPi / 4.0) < 3 * std::sqrt(var / accepted));
  CHECK(gamma_sq / accepted - mean * mean == doctest::Approx(var).epsilon(0.02));
}

TEST_CASE("estimate is deterministic and consistent") {
  const McEstimate a = estimate(200000, 42);
  const McEstimate b = estimate(200000, 42);
  CHECK(a.p_hat == b.p_hat);
  CHECK(a.proposals == b.proposals);
  CHECK(a.conditional_p_hat == b.conditional_p_hat);

  CHECK(a.samples == 200000);
  CHECK(a.seed == 42);
  CHECK(a.std_error == doctest::Approx(std::sqrt(a.p_hat * (1 - a.p_hat) / 200000)));
  CHECK(a.obtuse_successes == 0);
  CHECK(a.obtuse_samples + a.conditional_samples == a.samples);
  CHECK(std::abs(a.p_hat - 0.78675) < 4 * a.std_error);
  CHECK(a.conditional_p_hat * a.conditional_samples ==
        doctest::Approx(a.p_hat * a.samples).epsilon(1e-12));
  CHECK(a.proposals > a.samples * 5);

  CHECK(estimate(200000, 43).p_hat != a.p_hat);
  CHECK_THROWS_AS(estimate(0, 1), DomainError);
}

TEST_CASE("sampled triangles in the criterion region agree with f") {
  SplitMix64 rng(42);
  int checked = 0;
  for (int n = 0; n < 200000; ++n) {
    const AngleTriple t = sample_triple(rng);
    if (!t.in_criterion_region()) continue;
    ++checked;
    CHECK(sti_holds(t) == (f_value(t.alpha(), t.beta(), t.gamma()) > 0.0));
  }
  CHECK(checked > 20000);
}
