#include "sti/angles.hpp"

#include <cmath>
#include <sstream>

namespace sti {

namespace {

bool valid(double alpha, double beta, double gamma) noexcept {
  if (!(alpha > 0.0 && beta > 0.0 && gamma > 0.0)) return false;
  if (!(alpha < kPi && beta < kPi && gamma < kPi)) return false;
  return (alpha + beta) + gamma < kPi;
}

}  // namespace

AngleTriple AngleTriple::make(double alpha, double beta, double gamma) {
  if (!valid(alpha, beta, gamma)) {
    std::ostringstream os;
    os.precision(17);
    os << "angles (" << alpha << ", " << beta << ", " << gamma
       << ") do not form a hyperbolic triangle: need each angle in (0, pi) "
          "and alpha + beta + gamma < pi";
    throw DomainError(os.str());
  }
  return AngleTriple(alpha, beta, gamma);
}

std::optional<AngleTriple> AngleTriple::try_make(double alpha, double beta,
                                                 double gamma) noexcept {
  if (!valid(alpha, beta, gamma)) return std::nullopt;
  return AngleTriple(alpha, beta, gamma);
}

bool AngleTriple::in_criterion_region() const noexcept {
  return alpha_ < gamma_ && beta_ < gamma_ && gamma_ < kHalfPi;
}

std::string to_string(const AngleTriple& angles) {
  std::ostringstream os;
  os.precision(17);
  os << "(" << angles.alpha() << ", " << angles.beta() << ", "
     << angles.gamma() << ")";
  return os.str();
}

}  // namespace sti
