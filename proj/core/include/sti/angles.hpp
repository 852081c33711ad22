#pragma once

#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

namespace sti {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kHalfPi = std::numbers::pi / 2.0;

/// Raised when an argument lies outside the open domain an operation is
/// defined on. Carries a human readable description of the violated bound.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// The three angles (radians) of a hyperbolic triangle. alpha and beta are
/// opposite sides a and b, gamma is opposite side c.
///
/// Construction enforces 0 < alpha, beta, gamma and alpha + beta + gamma < pi
/// with strict inequalities and zero tolerance, so every instance describes a
/// genuine triangle of curvature -1.
class AngleTriple {
 public:
  static AngleTriple make(double alpha, double beta, double gamma);
  static std::optional<AngleTriple> try_make(double alpha, double beta,
                                             double gamma) noexcept;

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }
  double gamma() const noexcept { return gamma_; }

  /// (alpha + beta) + gamma, always evaluated in this order.
  double angle_sum() const noexcept { return (alpha_ + beta_) + gamma_; }

  /// The same triangle with the roles of (alpha, a) and (beta, b) exchanged.
  AngleTriple swapped() const noexcept { return {beta_, alpha_, gamma_}; }

  /// True when gamma is the unique greatest angle and gamma < pi/2, i.e. the
  /// triple lies in the region where the angle-only criterion applies.
  bool in_criterion_region() const noexcept;

  friend bool operator==(const AngleTriple&, const AngleTriple&) = default;

 private:
  AngleTriple(double alpha, double beta, double gamma) noexcept
      : alpha_(alpha), beta_(beta), gamma_(gamma) {}

  double alpha_;
  double beta_;
  double gamma_;
};

std::string to_string(const AngleTriple& angles);

}  // namespace sti
