#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

namespace sti {

/// Closed interval [lo, hi] enclosing a real quantity.
struct BoundInterval {
  double lo;
  double hi;

  double width() const noexcept { return hi - lo; }
  double midpoint() const noexcept { return 0.5 * (lo + hi); }
  bool contains(double x) const noexcept { return lo <= x && x <= hi; }
  bool contains(const BoundInterval& other, double slack = 0.0) const noexcept {
    return lo - slack <= other.lo && other.hi <= hi + slack;
  }
  bool overlaps(const BoundInterval& other) const noexcept {
    return lo <= other.hi && other.lo <= hi;
  }
};

enum class Method { RiemannCertified, Quadrature };
std::string_view to_string(Method method) noexcept;

struct ProbabilityResult {
  double estimate;
  std::optional<BoundInterval> bounds;
  Method method;
  std::size_t outer_resolution;
  std::size_t inner_resolution;
};

inline constexpr std::size_t kDefaultResolution = 2048;
inline constexpr std::size_t kDefaultQuadratureNodes = 64;

/// Relative slack added to every summed term of a certified bound.
inline constexpr double kTermSlack = 1e-13;

/// Area (pi - gamma)^2 / 2 of the admissible (alpha, beta) triangle.
double admissible_area(double gamma) noexcept;

/// Enclosure of the area of the failure set at fixed gamma, for
/// gamma_crit < gamma < pi/2 and inner_resolution >= 2 (DomainError
/// otherwise).
///
/// Below bb_bound the set is the region under the zero curve on (0, i_gamma);
/// from bb_bound on it is the region under both the zero curve and the
/// Euclidean diagonal, whose area is
///
///   2 * int_0^e z - e^2 + (pi - gamma - 2e)^2 / 2,   e = e_of_gamma(gamma).
///
/// The curve is decreasing, so its right Riemann sum on a uniform grid is a
/// lower bound and its left sum an upper bound. The endpoint values are the
/// analytic limits (i_gamma at 0; 0 or pi - gamma - e at the right end).
BoundInterval failure_area(double gamma, std::size_t inner_resolution);

/// Enclosure of the failure volume int_{gamma_crit}^{pi/2} area(gamma) dgamma.
///
/// The failure area itself is not monotone in gamma (it ends at the shrinking
/// cap (pi - gamma)^2 / 2), but the success area cap - area is decreasing.
/// Bracketing that with left/right sums over each outer cell [g0, g1] of
/// width d, with u = pi - g, gives
///
///   lower += area.lo(g0) * d - d^2 (2 u0 + u1) / 6
///   upper += area.hi(g1) * d + d^2 (u0 + 2 u1) / 6
///
/// where area(gamma_crit) = 0 and area(pi/2) = cap(pi/2). The outer grid is
/// uniform on [gamma_crit, bb_bound] and on [bb_bound, pi/2] with
/// outer_resolution cells each. Node evaluations run on `threads` workers
/// (0 = hardware concurrency) and are combined in index order, so the result
/// does not depend on the worker count.
BoundInterval failure_volume(std::size_t outer_resolution,
                             std::size_t inner_resolution,
                             unsigned threads = 0);

/// [7/8 - (6/pi^3) vol.hi, 7/8 - (6/pi^3) vol.lo].
BoundInterval probability_from_volume(const BoundInterval& volume) noexcept;

/// Certified probability that a random hyperbolic triangle satisfies
/// a + b > c + h; estimate is the interval midpoint.
ProbabilityResult probability(std::size_t outer_resolution = kDefaultResolution,
                              std::size_t inner_resolution = kDefaultResolution,
                              unsigned threads = 0);

/// Same nested integrals by Gauss-Legendre quadrature with `nodes` points in
/// every dimension and regime (nodes >= 4). No error bound.
ProbabilityResult probability_quadrature(
    std::size_t nodes = kDefaultQuadratureNodes);

}  // namespace sti
