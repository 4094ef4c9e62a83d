#pragma once

#include "conicqed/numerics.hpp"

#include <string>
#include <string_view>

namespace conicqed {

/// Direction of the transition dipole relative to the string frame.
enum class Orientation { Z, Rho, Phi, Isotropic };

std::string_view to_string(Orientation o);
/// Accepts "z", "rho", "phi", "iso" (case-sensitive).
Orientation parse_orientation(std::string_view name);

/// Normalized one-photon rates Gamma/Gamma_0 at one (q, k_eg rho).
struct PurcellFactors {
  double p_z = 0.0;
  double p_rho = 0.0;
  double p_phi = 0.0;
  double p_iso = 0.0; // (p_z + p_rho + p_phi) / 3
  double keg_rho = 0.0;
  double q = 1.0;

  double get(Orientation o) const;
};

/// Gamma_orient / Gamma_0 for an emitter at dimensionless distance
/// keg_rho = k_eg * rho from a string with deficit parameter q.
///
///   Z:       (3q/2) sum_m Int_0^1 u^3/sqrt(1-u^2) J^2_{q|m|}(keg_rho u) du
///   Rho/Phi: (3q/8) sum_m Int_0^1 u/sqrt(1-u^2)
///              [(2-u^2)(J^2_{q|m|-1} + J^2_{q|m|+1}) +- 2u^2 J_{q|m|-1} J_{q|m|+1}] du
///
/// At m = 0 the order -1 is resolved with J_{-1} = -J_1. keg_rho = 0 is
/// evaluated in closed form. Throws ConvergenceError if the m-sum hits
/// cfg.truncation.m_max, DomainError for q < 1 or keg_rho < 0.
double purcell_factor(Orientation orient, double q, double keg_rho,
                      const NumericsConfig &cfg = {});

/// All three orientations plus the isotropic average; Bessel values are
/// shared between orientations, results identical to purcell_factor.
PurcellFactors purcell_all(double q, double keg_rho, const NumericsConfig &cfg = {});

/// Leading small-distance behaviour, q > 1:
///   Z:   q [1 - (2/5)x^2 + 3(q+1) x^{2q} / ((q+3/2) Gamma(2q+2))]
///   Rho: q [x^2/20 + 3(q+1) x^{2(q-1)} / (4 (q+1/2) Gamma(2q))]
///   Phi: q [x^2/4  + 3(q+1) x^{2(q-1)} / (4 (q+1/2) Gamma(2q))]
double small_rho_asymptotic(Orientation orient, double q, double keg_rho);

/// m = 0 term only, valid once q exceeds keg_rho comfortably:
///   Z:   (3q/2) Int u^3/sqrt(1-u^2) J_0^2
///   Rho: (3q/2) Int u sqrt(1-u^2) J_1^2
///   Phi: (3q/2) Int u/sqrt(1-u^2) J_1^2
/// Exactly linear in q at fixed keg_rho.
double large_q_approx(Orientation orient, double q, double keg_rho,
                      const NumericsConfig &cfg = {});

/// Free-space rate Gamma_0 = |d|^2 w^3 / (3 pi eps0 hbar c^3) in 1/s.
/// dipole_sq in C^2 m^2, omega_eg in rad/s.
double free_space_rate(double dipole_sq, double omega_eg);

} // namespace conicqed
