#pragma once

#include <array>
#include <complex>

namespace conicqed {

// Electromagnetic vector-potential modes around a straight cosmic string
// along z. Natural units, c = 1: frequencies and wavenumbers coincide.

enum class Polarization { TM = 0, TE = 1 };

struct ModeIndex {
  double k_perp = 1.0; // > 0
  double k_z = 0.0;
  int m = 0;
  Polarization polarization = Polarization::TM;

  double omega() const;
};

/// Conical cylindrical coordinates; phi has period 2*pi/q.
struct CylPosition {
  double rho = 0.0;
  double phi = 0.0;
  double z = 0.0;
};

/// Components along (rho-hat, phi-hat, z-hat).
using ComplexVec3 = std::array<std::complex<double>, 3>;

double norm(const ComplexVec3 &v);

/// |beta|^2 = q / (2 pi k_perp)^2 for both polarizations.
double normalization_constant(double q, double k_perp);

/// TM: (beta/(i w)) (k_perp^2 z + i k_z grad_perp) F,
/// TE: -beta z x grad_perp F, with F = J_{q|m|}(k_perp rho) e^{i(q m phi + k_z z - w t)}
/// and beta the positive root of normalization_constant. Finite at rho = 0.
ComplexVec3 mode_vector_potential(const ModeIndex &mode, const CylPosition &pos,
                                  double q, double t = 0.0);

/// |(lap_perp + k_perp^2) F_z| for F_z = J_{q|m|}(k_perp rho) e^{i q m phi},
/// second-order central differences with step 1e-4/k_perp.
double helmholtz_residual(const ModeIndex &mode, const CylPosition &pos, double q);

/// Cylindrical divergence of mode_vector_potential by central differences
/// with step h (length; the angular step is h/rho).
std::complex<double> vector_potential_divergence(const ModeIndex &mode,
                                                 const CylPosition &pos, double q,
                                                 double h);

} // namespace conicqed
