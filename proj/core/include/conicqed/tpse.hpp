#pragma once

#include "conicqed/modes.hpp"
#include "conicqed/numerics.hpp"
#include "conicqed/opse.hpp"

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace conicqed {

// Tensor and vector indices follow the string frame: 0 = rho-hat,
// 1 = phi-hat, 2 = z-hat.

struct IntermediateLevel {
  double omega_em = 0.0; // frequency of the e -> m transition
  ComplexVec3 d_em{};    // <e|d|m>
  ComplexVec3 d_mg{};    // <m|d|g>
};

struct LevelScheme {
  double omega_eg = 1.0;
  std::vector<IntermediateLevel> intermediates;

  /// Three degenerate intermediates with equal dipoles along each axis,
  /// the angular structure of an s -> s transition.
  static LevelScheme isotropic(double omega_eg, double omega_em, double dipole);
  /// One intermediate with both dipoles along `axis`.
  static LevelScheme single_axis(double omega_eg, double omega_em, double dipole,
                                 std::size_t axis);
};

using ComplexMatrix3 = std::array<std::array<std::complex<double>, 3>, 3>;
using RealMatrix3 = std::array<std::array<double, 3>, 3>;

/// Second-order transition tensor
///   D_ij(w, w') = sum_m [ d_em,i d_mg,j / (w_em - w) + d_mg,i d_em,j / (w_em - w') ].
struct DTensor {
  ComplexMatrix3 entries{};
  double omega = 0.0;
  double omega_prime = 0.0;

  /// |D|^2 = D_ij D*_ij.
  double norm_sq() const;
};

/// Throws ResonanceError when w or w' lies within 1e-9 * w_eg of any w_em,
/// DomainError for an empty scheme.
DTensor d_tensor(const LevelScheme &scheme, double omega, double omega_prime);

/// |D_ij|^2 / |D|^2; entries sum to one. DomainError for a zero tensor.
RealMatrix3 d_isotropy_ratio(const DTensor &d);

/// Free-space two-photon spectral density
///   gamma_0(w) = mu0^2 / (36 pi^3 hbar^2 c^2) w^3 (w_eg - w)^3 |D|^2   (SI).
double gamma0_free(double d_norm_sq, double omega, double omega_eg);

/// Purcell factors evaluated at frequency omega_frac * w_eg, i.e. with the
/// Bessel argument scaled to omega_frac * keg_rho.
PurcellFactors purcell_at_frequency(double q, double keg_rho, double omega_frac,
                                    const NumericsConfig &cfg = {});

/// Spectral enhancement gamma/gamma_0 for an s -> s transition:
///   (1/3) sum_i P_i(w) P_i(w_eg - w).
double spectral_enhancement_ss(double q, double keg_rho, double omega_frac,
                               const NumericsConfig &cfg = {});

/// General diagonal-Green-tensor form
///   sum_ij (|D_ij|^2/|D|^2) P_i(w) P_j(w_eg - w),  D = D(w, w_eg - w).
double spectral_enhancement_general(double q, double keg_rho, double omega_frac,
                                    const LevelScheme &scheme,
                                    const NumericsConfig &cfg = {});

struct SpectralPoint {
  double omega_frac = 0.5;
  double enhancement = 1.0;
  double q = 1.0;
  double keg_rho = 0.0;
};

SpectralPoint spectral_point(double q, double keg_rho, double omega_frac,
                             const NumericsConfig &cfg = {});

/// Gamma / Gamma_free = Int gamma dw / Int gamma_0 dw for the flat-|D|
/// profile w^3 (w_eg - w)^3. Gauss-Legendre with n_omega nodes on (0, 1/2]
/// (the integrand is symmetric). n_omega >= 16.
double total_rate_ratio(double q, double keg_rho, const NumericsConfig &cfg = {},
                        std::size_t n_omega = 32);

struct WeightSample {
  double omega_frac = 0.0; // in (0, 1), strictly increasing across the table
  double weight = 0.0;     // free-space spectral density, any units, >= 0
};

/// Same ratio for a tabulated free-space profile (trapezoid rule on the
/// table abscissae).
double total_rate_ratio(double q, double keg_rho, std::span<const WeightSample> table,
                        const NumericsConfig &cfg = {});

} // namespace conicqed
