#include "conicqed/background.hpp"

#include "conicqed/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace conicqed {

double max_linear_mass_density() { return si::c * si::c / (4.0 * si::G); }

double q_from_mu(double mu) {
  if (!std::isfinite(mu) || mu < 0.0) {
    throw DomainError("q_from_mu: mu must be finite and non-negative");
  }
  const double mu_max = max_linear_mass_density();
  if (mu >= mu_max) {
    throw DomainError("q_from_mu: mu >= c^2/4G, the exterior is no longer conical");
  }
  return 1.0 / (1.0 - mu / mu_max);
}

double mu_from_q(double q) {
  if (!std::isfinite(q) || q < 1.0) {
    throw DomainError("mu_from_q: q must be >= 1, got " + std::to_string(q));
  }
  return max_linear_mass_density() * (1.0 - 1.0 / q);
}

StringBackground::StringBackground(double q) : q_(q) {
  if (!std::isfinite(q) || q < 1.0) {
    throw DomainError("StringBackground: q must be >= 1, got " + std::to_string(q));
  }
}

StringBackground StringBackground::from_linear_mass_density(double mu) {
  return StringBackground(q_from_mu(mu));
}

double StringBackground::deficit_angle() const {
  return 2.0 * std::numbers::pi * (1.0 - 1.0 / q_);
}

} // namespace conicqed
