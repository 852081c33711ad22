#include "sti/gauss_legendre.hpp"

#include <boost/math/special_functions/legendre.hpp>

#include <algorithm>
#include <stdexcept>

namespace sti {

GaussLegendreRule gauss_legendre(std::size_t n) {
  if (n == 0) throw std::invalid_argument("gauss_legendre: n must be positive");
  const int order = static_cast<int>(n);
  // Nonnegative zeros of P_n in increasing order; zero included for odd n.
  const std::vector<double> half = boost::math::legendre_p_zeros<double>(order);

  GaussLegendreRule rule;
  rule.nodes.reserve(n);
  for (auto it = half.rbegin(); it != half.rend(); ++it) {
    if (*it != 0.0) rule.nodes.push_back(-*it);
  }
  for (double x : half) rule.nodes.push_back(x);

  rule.weights.reserve(n);
  for (double x : rule.nodes) {
    const double dp = boost::math::legendre_p_prime<double>(order, x);
    rule.weights.push_back(2.0 / ((1.0 - x * x) * dp * dp));
  }
  return rule;
}

}  // namespace sti
