#include "sti/criterion.hpp"

#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace sti {

namespace {

[[noreturn]] void domain_violation(const char* op, const char* bound,
                                   double alpha, double beta, double gamma) {
  std::ostringstream os;
  os.precision(17);
  os << op << ": requires " << bound << " (alpha=" << alpha
     << ", beta=" << beta << ", gamma=" << gamma << ")";
  throw DomainError(os.str());
}

RegionConstants compute_constants() {
  constexpr double lo = 1.1;
  constexpr double hi = 1.2;
  const double f_lo = critical_angle_function(lo);
  const double f_hi = critical_angle_function(hi);
  if (!(f_lo < 0.0 && f_hi > 0.0) && !(f_lo > 0.0 && f_hi < 0.0)) {
    throw std::logic_error(
        "critical angle function does not change sign on [1.1, 1.2]");
  }
  // Bisect until the bracket holds two adjacent doubles.
  const auto adjacent = [](double a, double b) {
    return std::nextafter(a, b) >= b;
  };
  const auto [a, b] =
      boost::math::tools::bisect(critical_angle_function, lo, hi, adjacent);
  const double root = std::abs(critical_angle_function(a)) <=
                              std::abs(critical_angle_function(b))
                          ? a
                          : b;
  return {root, std::atan(24.0 / 7.0)};
}

}  // namespace

double critical_angle_function(double gamma) noexcept {
  const double s = std::sin(gamma);
  return -1.0 - std::cos(gamma) + s + std::sin(gamma / 2.0) * s;
}

const RegionConstants& region_constants() {
  static const RegionConstants constants = compute_constants();
  return constants;
}

double gamma_crit() { return region_constants().gamma_crit; }
double bb_bound() { return region_constants().bb_bound; }

double f_value(double alpha, double beta, double gamma) {
  if (!(alpha > 0.0 && beta > 0.0 && std::max(alpha, beta) < gamma &&
        gamma < kHalfPi && (alpha + beta) + gamma < kPi)) {
    domain_violation("f_value",
                     "0 < alpha, beta < gamma < pi/2 and alpha+beta+gamma < pi",
                     alpha, beta, gamma);
  }
  const double ca = std::cos(alpha);
  const double cb = std::cos(beta);
  const double cg = std::cos(gamma);
  const double sg = std::sin(gamma);
  const double cosh_h = (cb * cg + ca) / sg;
  const double lhs = (ca * cb + cg) / (cg + 1.0 - sg) - 1.0;
  return cb * cb + cosh_h * cosh_h - lhs * lhs;
}

QuadCoeffs quad_coeffs(double alpha, double gamma) {
  if (!(alpha > 0.0 && alpha < gamma && gamma < kHalfPi)) {
    domain_violation("quad_coeffs", "0 < alpha < gamma < pi/2", alpha, 0.0,
                     gamma);
  }
  const double ca = std::cos(alpha);
  const double cg = std::cos(gamma);
  const double sg = std::sin(gamma);
  // cos g + 1 - sin g with 1 - sin g = cos^2 g / (1 + sin g), which keeps
  // full relative accuracy as gamma -> pi/2.
  const double s = 1.0 + sg + cg;
  const double csc2 = 1.0 / (sg * sg);
  const double r = ca * (1.0 + sg) / (cg * s);
  const double p = ca / sg;
  const double q = cg / s;
  return {csc2 - r * r, ca * (cg + 1.0) * csc2, p * p - q * q};
}

ZeroCurvePoint evaluate_zero_curve(double gamma, double alpha) {
  if (!(gamma > gamma_crit() && gamma < kHalfPi && alpha > 0.0 &&
        alpha < gamma)) {
    domain_violation("z_of_alpha", "0 < alpha < gamma, gamma_crit < gamma < pi/2",
                     alpha, 0.0, gamma);
  }
  const QuadCoeffs q = quad_coeffs(alpha, gamma);
  ZeroCurvePoint pt{0.0, 0.0, false, false, false};

  if (q.qa == 0.0) {
    // Linear case: cos(beta) = -qc/qb < 0 is never admissible.
    pt.cos_beta = -q.qc / q.qb;
    pt.out_of_range = true;
    return pt;
  }
  const double d = q.discriminant();
  if (d >= 0.0) {
    pt.cos_beta = (-q.qb - std::sqrt(d)) / (2.0 * q.qa);
  } else {
    pt.discriminant_negative = true;
    pt.cos_beta = -q.qb / (2.0 * q.qa);
  }
  if (pt.cos_beta > 1.0 || pt.cos_beta < -1.0) {
    pt.out_of_range = true;
    return pt;
  }
  const double beta = std::acos(pt.cos_beta);
  const double diagonal = kPi - alpha - gamma;
  pt.clamped_to_diagonal = diagonal < beta;
  pt.value = std::min(beta, diagonal);
  return pt;
}

double z_of_alpha(double gamma, double alpha) {
  return evaluate_zero_curve(gamma, alpha).value;
}

double i_of_gamma(double gamma) {
  if (!(gamma >= gamma_crit() && gamma < kHalfPi)) {
    domain_violation("i_of_gamma", "gamma_crit <= gamma < pi/2", 0.0, 0.0,
                     gamma);
  }
  const double s = std::sin(gamma);
  const double c = std::cos(gamma);
  const double arg = ((s - 1.0) * (s - 1.0) + c) / (2.0 * s - c - 1.0);
  return std::acos(std::clamp(arg, -1.0, 1.0));
}

double e_of_gamma(double gamma) {
  if (!(gamma > 0.0 && gamma < kHalfPi)) {
    domain_violation("e_of_gamma", "0 < gamma < pi/2", 0.0, 0.0, gamma);
  }
  // tan(gamma/2) - 3/4 written as tan(gamma/2) - tan(B/2) with cos(B/2) = 4/5,
  // so it is exactly zero at gamma == bb_bound().
  const double d = std::sin((gamma - bb_bound()) / 2.0) /
                   (0.8 * std::cos(gamma / 2.0));
  const double sol = d < 0.0 ? 0.5 : 0.5 - std::sqrt(d);
  return 2.0 * std::atan(sol);
}

}  // namespace sti
