#pragma once

#include "sti/angles.hpp"

namespace sti {

/// Coefficients of qa cos^2(beta) + qb cos(beta) + qc, which vanishes exactly
/// where the sign criterion f does (for fixed alpha and gamma).
struct QuadCoeffs {
  double qa;
  double qb;
  double qc;

  double discriminant() const noexcept { return qb * qb - 4.0 * qa * qc; }
  double eval(double cos_beta) const noexcept {
    return (qa * cos_beta + qb) * cos_beta + qc;
  }
};

/// Thresholds on gamma. Below gamma_crit every triangle satisfies the strong
/// inequality; bb_bound = arctan(24/7) is the Euclidean threshold and the
/// point where the failure region starts to meet the Euclidean diagonal.
struct RegionConstants {
  double gamma_crit;
  double bb_bound;
};

/// Computed on first use and cached; safe to call from any thread.
const RegionConstants& region_constants();
double gamma_crit();
double bb_bound();

/// -1 - cos g + sin g + sin(g/2) sin g, whose root in [0, pi/2] is gamma_crit.
double critical_angle_function(double gamma) noexcept;

/// Angle-only criterion: on the region max(alpha, beta) < gamma < pi/2,
/// alpha + beta + gamma < pi its sign is the sign of a + b - c - h.
/// Throws DomainError outside that region.
double f_value(double alpha, double beta, double gamma);

/// Requires 0 < alpha < gamma < pi/2.
QuadCoeffs quad_coeffs(double alpha, double gamma);

/// Full record of one zero-curve evaluation, including which fallback rules
/// fired. `value` is what z_of_alpha returns.
struct ZeroCurvePoint {
  double value;
  double cos_beta;              // root (or vertex) of the quadratic
  bool discriminant_negative;   // vertex -qb/(2 qa) used instead of a root
  bool out_of_range;            // |cos_beta| > 1, value forced to 0
  bool clamped_to_diagonal;     // value = pi - alpha - gamma
};

ZeroCurvePoint evaluate_zero_curve(double gamma, double alpha);

/// beta on the zero curve of f at fixed gamma, from the minus-branch root of
/// the quadratic with the fallback rules: vertex when the discriminant is
/// negative, 0 when the root leaves [-1, 1], and never above the Euclidean
/// diagonal pi - alpha - gamma. Requires 0 < alpha < gamma and
/// gamma_crit < gamma < pi/2.
double z_of_alpha(double gamma, double alpha);

/// Limit of z_of_alpha as alpha -> 0+, in closed form. Requires
/// gamma_crit <= gamma < pi/2.
double i_of_gamma(double gamma);

/// alpha at which the zero curve meets the Euclidean diagonal (the smaller of
/// the two symmetric solutions). Below bb_bound the expression under the root
/// is negative and the value 2 arctan(1/2) is returned. Requires
/// 0 < gamma < pi/2.
double e_of_gamma(double gamma);

}  // namespace sti
