#include "conicqed/modes.hpp"

#include "conicqed/errors.hpp"
#include "conicqed/specfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace conicqed {

namespace {

using cplx = std::complex<double>;
constexpr cplx kI{0.0, 1.0};

void check_q(double q) {
  if (!(q >= 1.0) || !std::isfinite(q)) {
    throw DomainError("q must be >= 1 (q = 1 is free space), got " + std::to_string(q));
  }
}

void check_mode(const ModeIndex &mode) {
  if (!(mode.k_perp > 0.0) || !std::isfinite(mode.k_perp) || !std::isfinite(mode.k_z)) {
    throw DomainError("mode: k_perp must be positive and finite");
  }
}

cplx axial_scalar(const ModeIndex &mode, double rho, double phi, double q) {
  const double nu = q * std::abs(mode.m);
  return bessel_j(nu, mode.k_perp * rho) * std::exp(kI * (q * mode.m * phi));
}

} // namespace

double ModeIndex::omega() const { return std::hypot(k_perp, k_z); }

double norm(const ComplexVec3 &v) {
  return std::sqrt(std::norm(v[0]) + std::norm(v[1]) + std::norm(v[2]));
}

double normalization_constant(double q, double k_perp) {
  check_q(q);
  if (!(k_perp > 0.0) || !std::isfinite(k_perp)) {
    throw DomainError("normalization_constant: k_perp must be positive");
  }
  const double d = 2.0 * std::numbers::pi * k_perp;
  return q / (d * d);
}

ComplexVec3 mode_vector_potential(const ModeIndex &mode, const CylPosition &pos,
                                  double q, double t) {
  check_q(q);
  check_mode(mode);
  if (pos.rho < 0.0) {
    throw DomainError("mode_vector_potential: rho must be non-negative");
  }
  const double nu = q * std::abs(mode.m);
  const auto j = bessel_j_triplet(nu, mode.k_perp * pos.rho);

  // d/drho J_nu(k rho) and (q m / rho) J_nu(k rho), both written through
  // J_{nu -+ 1} so that rho = 0 needs no limit.
  const double radial = 0.5 * mode.k_perp * (j[0] - j[2]);
  const double angular =
      mode.m == 0 ? 0.0 : 0.5 * mode.k_perp * (mode.m > 0 ? 1.0 : -1.0) * (j[0] + j[2]);

  const double w = mode.omega();
  const double beta = std::sqrt(normalization_constant(q, mode.k_perp));
  const cplx phase = std::exp(kI * (q * mode.m * pos.phi + mode.k_z * pos.z - w * t));

  if (mode.polarization == Polarization::TM) {
    const double c = beta * mode.k_z / w;
    return {c * radial * phase, kI * (c * angular) * phase,
            -kI * (beta * mode.k_perp * mode.k_perp / w * j[1]) * phase};
  }
  return {kI * (beta * angular) * phase, -beta * radial * phase, cplx{0.0, 0.0}};
}

double helmholtz_residual(const ModeIndex &mode, const CylPosition &pos, double q) {
  check_q(q);
  check_mode(mode);
  const double h = 1e-4 / mode.k_perp;
  if (pos.rho <= 2.0 * h) {
    throw DomainError("helmholtz_residual: rho too close to the string for the stencil");
  }
  const double rho = pos.rho;
  const double dphi = h / rho;
  const cplx f0 = axial_scalar(mode, rho, pos.phi, q);
  const cplx fp = axial_scalar(mode, rho + h, pos.phi, q);
  const cplx fm = axial_scalar(mode, rho - h, pos.phi, q);
  const cplx gp = axial_scalar(mode, rho, pos.phi + dphi, q);
  const cplx gm = axial_scalar(mode, rho, pos.phi - dphi, q);

  const cplx f_rr = (fp - 2.0 * f0 + fm) / (h * h);
  const cplx f_r = (fp - fm) / (2.0 * h);
  const cplx f_pp = (gp - 2.0 * f0 + gm) / (dphi * dphi);
  const double k2 = mode.k_perp * mode.k_perp;
  return std::abs(f_rr + f_r / rho + f_pp / (rho * rho) + k2 * f0);
}

std::complex<double> vector_potential_divergence(const ModeIndex &mode,
                                                 const CylPosition &pos, double q,
                                                 double h) {
  if (!(h > 0.0) || pos.rho <= 2.0 * h) {
    throw DomainError("vector_potential_divergence: need 0 < 2h < rho");
  }
  const double rho = pos.rho;
  const double dphi = h / rho;
  auto at = [&](double r, double p, double z) {
    return mode_vector_potential(mode, CylPosition{r, p, z}, q);
  };
  const auto rp = at(rho + h, pos.phi, pos.z);
  const auto rm = at(rho - h, pos.phi, pos.z);
  const auto pp = at(rho, pos.phi + dphi, pos.z);
  const auto pm = at(rho, pos.phi - dphi, pos.z);
  const auto zp = at(rho, pos.phi, pos.z + h);
  const auto zm = at(rho, pos.phi, pos.z - h);

  const cplx d_rho = ((rho + h) * rp[0] - (rho - h) * rm[0]) / (2.0 * h * rho);
  const cplx d_phi = (pp[1] - pm[1]) / (2.0 * dphi * rho);
  const cplx d_z = (zp[2] - zm[2]) / (2.0 * h);
  return d_rho + d_phi + d_z;
}

} // namespace conicqed
