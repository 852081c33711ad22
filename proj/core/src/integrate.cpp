#include "sti/integrate.hpp"

#include "sti/angles.hpp"
#include "sti/criterion.hpp"
#include "sti/gauss_legendre.hpp"
#include "sti/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace sti {

namespace {

constexpr double kVolumeScale = 6.0 / (kPi * kPi * kPi);
constexpr double kSuccessCeiling = 7.0 / 8.0;

// Sum whose lower()/upper() carry kTermSlack relative padding per term.
class PaddedSum {
 public:
  void add(double term) noexcept {
    sum_ += term;
    abs_ += std::abs(term);
  }
  double lower() const noexcept { return sum_ - kTermSlack * abs_; }
  double upper() const noexcept { return sum_ + kTermSlack * abs_; }

 private:
  double sum_ = 0.0;
  double abs_ = 0.0;
};

struct CurveIntegral {
  PaddedSum lower;
  PaddedSum upper;
};

// Left/right Riemann sums of the decreasing zero curve on [0, right] with
// `cells` uniform cells. Interior nodes are shared by both sums.
CurveIntegral bracket_curve(double gamma, double right, double left_value,
                            double right_value, std::size_t cells) {
  const double step = right / static_cast<double>(cells);
  CurveIntegral out;
  out.upper.add(left_value * step);
  for (std::size_t k = 1; k < cells; ++k) {
    const double term = z_of_alpha(gamma, static_cast<double>(k) * step) * step;
    out.lower.add(term);
    out.upper.add(term);
  }
  out.lower.add(right_value * step);
  return out;
}

void require_resolution(const char* op, std::size_t value, std::size_t minimum) {
  if (value < minimum) {
    std::ostringstream os;
    os << op << ": resolution " << value << " is below the minimum " << minimum;
    throw DomainError(os.str());
  }
}

}  // namespace

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::RiemannCertified:
      return "riemann-certified";
    case Method::Quadrature:
      return "quadrature";
  }
  return "unknown";
}

double admissible_area(double gamma) noexcept {
  const double u = kPi - gamma;
  return 0.5 * u * u;
}

BoundInterval failure_area(double gamma, std::size_t inner_resolution) {
  require_resolution("failure_area", inner_resolution, 2);
  if (!(gamma > gamma_crit() && gamma < kHalfPi)) {
    std::ostringstream os;
    os.precision(17);
    os << "failure_area: requires gamma_crit < gamma < pi/2 (gamma=" << gamma
       << ")";
    throw DomainError(os.str());
  }

  double lo = 0.0;
  double hi = 0.0;
  const double i_gamma = i_of_gamma(gamma);
  if (gamma < bb_bound()) {
    const CurveIntegral z = bracket_curve(gamma, i_gamma, i_gamma, 0.0,
                                          inner_resolution);
    lo = z.lower.lower();
    hi = z.upper.upper();
  } else {
    const double e = e_of_gamma(gamma);
    const double gap = kPi - gamma - 2.0 * e;
    const CurveIntegral z =
        bracket_curve(gamma, e, i_gamma, kPi - gamma - e, inner_resolution);
    PaddedSum lower;
    PaddedSum upper;
    for (PaddedSum* s : {&lower, &upper}) {
      s->add(-e * e);
      s->add(0.5 * gap * gap);
    }
    lower.add(2.0 * z.lower.lower());
    upper.add(2.0 * z.upper.upper());
    lo = lower.lower();
    hi = upper.upper();
  }
  return {std::max(lo, 0.0), std::min(hi, admissible_area(gamma))};
}

BoundInterval failure_volume(std::size_t outer_resolution,
                             std::size_t inner_resolution, unsigned threads) {
  require_resolution("failure_volume", outer_resolution, 2);
  require_resolution("failure_volume", inner_resolution, 2);

  const double g_crit = gamma_crit();
  const double g_bb = bb_bound();
  const std::size_t n = outer_resolution;

  // Node k in [0, n] lies on [g_crit, g_bb]; node n + k on [g_bb, pi/2].
  std::vector<double> nodes(2 * n + 1);
  const double step1 = (g_bb - g_crit) / static_cast<double>(n);
  const double step2 = (kHalfPi - g_bb) / static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    nodes[k] = g_crit + static_cast<double>(k) * step1;
    nodes[n + k] = g_bb + static_cast<double>(k) * step2;
  }
  nodes[n] = g_bb;
  nodes[2 * n] = kHalfPi;

  std::vector<BoundInterval> area(nodes.size());
  area.front() = {0.0, 0.0};
  area.back() = {admissible_area(kHalfPi), admissible_area(kHalfPi)};
  parallel_for(nodes.size() - 2, threads, [&](std::size_t i) {
    area[i + 1] = failure_area(nodes[i + 1], inner_resolution);
  });

  PaddedSum lower;
  PaddedSum upper;
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    const double g0 = nodes[k];
    const double g1 = nodes[k + 1];
    const double d = g1 - g0;
    const double u0 = kPi - g0;
    const double u1 = kPi - g1;
    lower.add(area[k].lo * d);
    lower.add(-d * d * (2.0 * u0 + u1) / 6.0);
    upper.add(area[k + 1].hi * d);
    upper.add(d * d * (u0 + 2.0 * u1) / 6.0);
  }
  return {lower.lower(), upper.upper()};
}

BoundInterval probability_from_volume(const BoundInterval& volume) noexcept {
  return {kSuccessCeiling - kVolumeScale * volume.hi,
          kSuccessCeiling - kVolumeScale * volume.lo};
}

ProbabilityResult probability(std::size_t outer_resolution,
                              std::size_t inner_resolution, unsigned threads) {
  const BoundInterval bounds = probability_from_volume(
      failure_volume(outer_resolution, inner_resolution, threads));
  return {bounds.midpoint(), bounds, Method::RiemannCertified,
          outer_resolution, inner_resolution};
}

ProbabilityResult probability_quadrature(std::size_t nodes) {
  require_resolution("probability_quadrature", nodes, 4);
  const GaussLegendreRule rule = gauss_legendre(nodes);
  const double g_crit = gamma_crit();
  const double g_bb = bb_bound();

  const auto below_bb = [&](double gamma) {
    return rule.integrate([gamma](double a) { return z_of_alpha(gamma, a); },
                          0.0, i_of_gamma(gamma));
  };
  const auto above_bb = [&](double gamma) {
    const double e = e_of_gamma(gamma);
    const double gap = kPi - gamma - 2.0 * e;
    const double curve = rule.integrate(
        [gamma](double a) { return z_of_alpha(gamma, a); }, 0.0, e);
    return 0.5 * gap * gap - e * e + 2.0 * curve;
  };
  const double volume = rule.integrate(below_bb, g_crit, g_bb) +
                        rule.integrate(above_bb, g_bb, kHalfPi);
  return {kSuccessCeiling - kVolumeScale * volume, std::nullopt,
          Method::Quadrature, nodes, nodes};
}

}  // namespace sti
