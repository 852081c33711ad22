#pragma once

#include <cstddef>
#include <vector>

namespace sti {

/// n-point Gauss-Legendre rule on [-1, 1], nodes in increasing order.
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const noexcept { return nodes.size(); }

  /// Integral of f over [a, b] with the rule mapped affinely.
  template <class F>
  double integrate(F&& f, double a, double b) const {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      sum += weights[k] * f(mid + half * nodes[k]);
    }
    return half * sum;
  }
};

/// Throws std::invalid_argument for n == 0.
GaussLegendreRule gauss_legendre(std::size_t n);

}  // namespace sti
