#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace conicqed {

struct BesselConfig {
  /// Maximum number of terms of the ascending power series.
  int series_max_terms = 60;
  /// The ascending series is only considered for x below this value.
  double series_arg_threshold = 12.0;
  double abs_tol = 1e-15;
  double rel_tol = 1e-14;

  /// Throws DomainError if any field violates its invariant.
  void validate() const;
};

/// Bessel function of the first kind J_order(x) for real order and x >= 0.
///
/// Negative orders are accepted only when they are integers, via
/// J_{-n}(x) = (-1)^n J_n(x). Small arguments use the ascending series;
/// everything else uses Miller's downward recurrence normalized with the
/// Neumann series (x/2)^mu = sum_k (mu+2k) Gamma(mu+k)/k! J_{mu+2k}(x).
double bessel_j(double order, double x, const BesselConfig &cfg = {});

/// J_{order + k}(x) for k = 0 .. count-1 from a single recurrence sweep.
/// `order` may be -1 (J_{-1} = -J_1) or any value >= 0.
std::vector<double> bessel_j_sequence(double order, std::size_t count, double x,
                                      const BesselConfig &cfg = {});

/// {J_{nu-1}, J_nu, J_{nu+1}} for nu = 0 or nu >= 1.
std::array<double, 3> bessel_j_triplet(double nu, double x,
                                       const BesselConfig &cfg = {});

/// dJ_order/dx = (J_{order-1} - J_{order+1}) / 2, x > 0.
double bessel_j_prime(double order, double x, const BesselConfig &cfg = {});

/// Slow reference value from the integral representation
///   J_nu(x) = (1/pi) Int_0^pi cos(nu t - x sin t) dt
///           - (sin(nu pi)/pi) Int_0^inf exp(-nu t - x sinh t) dt.
/// Shares no code with bessel_j beyond Gauss-Legendre nodes; test use only.
double bessel_j_oracle(double order, double x);

} // namespace conicqed
