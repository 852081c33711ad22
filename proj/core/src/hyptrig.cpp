#include "sti/hyptrig.hpp"

#include <algorithm>
#include <cmath>

namespace sti {

namespace {

// cosh(x) - 1 for the side opposite `opposite`, with `adjacent1`/`adjacent2`
// the other two angles. half_cos_sum is cos(S/2). Both cosine factors are
// positive for a valid triple, so the clamp only guards against underflow
// to -0.
double cosh_minus_one(double half_cos_sum, double opposite, double adjacent1,
                      double adjacent2) noexcept {
  const double num =
      2.0 * half_cos_sum * std::cos(((adjacent1 + adjacent2) - opposite) / 2.0);
  return std::max(num / (std::sin(adjacent1) * std::sin(adjacent2)), 0.0);
}

// arccosh(1 + t) and sinh(arccosh(1 + t)) without cancellation.
struct Length {
  double value;
  double sinh;
};

Length length_from(double t) noexcept {
  const double s = std::sqrt(t * (t + 2.0));
  return {std::log1p(t + s), s};
}

}  // namespace

TriangleSolution solve_triangle(const AngleTriple& angles) noexcept {
  const double al = angles.alpha();
  const double be = angles.beta();
  const double ga = angles.gamma();
  const double half_cos_sum = std::cos(angles.angle_sum() / 2.0);

  const Length a = length_from(cosh_minus_one(half_cos_sum, al, be, ga));
  const Length b = length_from(cosh_minus_one(half_cos_sum, be, al, ga));
  const Length c = length_from(cosh_minus_one(half_cos_sum, ga, al, be));

  const double sinh_h = (b.sinh * std::sin(al) + a.sinh * std::sin(be)) / 2.0;
  const double h = std::asinh(sinh_h);

  return {a.value, b.value, c.value, h, (a.value + b.value) - (c.value + h)};
}

bool sti_holds(const AngleTriple& angles) noexcept {
  return solve_triangle(angles).strength > 0.0;
}

double euclidean_strength_ratio(const AngleTriple& angles) noexcept {
  const TriangleSolution s = solve_triangle(angles);
  return ((s.a + s.b) - s.c) / s.h;
}

}  // namespace sti
