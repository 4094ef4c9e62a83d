#include "conicqed/tpse.hpp"

#include "conicqed/background.hpp"
#include "conicqed/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace conicqed {

namespace {

void check_omega_frac(double f) {
  if (!std::isfinite(f) || !(f > 0.0) || !(f < 1.0)) {
    throw DomainError("omega_frac must lie strictly inside (0, 1), got " + std::to_string(f));
  }
}

std::array<double, 3> frame_factors(const PurcellFactors &p) {
  return {p.p_rho, p.p_phi, p.p_z};
}

} // namespace

LevelScheme LevelScheme::isotropic(double omega_eg, double omega_em, double dipole) {
  LevelScheme s;
  s.omega_eg = omega_eg;
  for (std::size_t axis = 0; axis < 3; ++axis) {
    IntermediateLevel level;
    level.omega_em = omega_em;
    level.d_em[axis] = dipole;
    level.d_mg[axis] = dipole;
    s.intermediates.push_back(level);
  }
  return s;
}

LevelScheme LevelScheme::single_axis(double omega_eg, double omega_em, double dipole,
                                     std::size_t axis) {
  if (axis > 2) {
    throw DomainError("single_axis: axis must be 0, 1 or 2");
  }
  LevelScheme s;
  s.omega_eg = omega_eg;
  IntermediateLevel level;
  level.omega_em = omega_em;
  level.d_em[axis] = dipole;
  level.d_mg[axis] = dipole;
  s.intermediates.push_back(level);
  return s;
}

double DTensor::norm_sq() const {
  double sum = 0.0;
  for (const auto &row : entries) {
    for (const auto &v : row) {
      sum += std::norm(v);
    }
  }
  return sum;
}

DTensor d_tensor(const LevelScheme &scheme, double omega, double omega_prime) {
  if (scheme.intermediates.empty()) {
    throw DomainError("d_tensor: level scheme has no intermediate levels");
  }
  const double guard = 1e-9 * scheme.omega_eg;
  DTensor d;
  d.omega = omega;
  d.omega_prime = omega_prime;
  for (std::size_t n = 0; n < scheme.intermediates.size(); ++n) {
    const auto &level = scheme.intermediates[n];
    const double a = level.omega_em - omega;
    const double b = level.omega_em - omega_prime;
    if (std::abs(a) < guard || std::abs(b) < guard) {
      throw ResonanceError("d_tensor: frequency on the pole of intermediate level " +
                               std::to_string(n) +
                               " (omega_em = " + std::to_string(level.omega_em) + ")",
                           n);
    }
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        d.entries[i][j] += level.d_em[i] * level.d_mg[j] / a + level.d_mg[i] * level.d_em[j] / b;
      }
    }
  }
  return d;
}

RealMatrix3 d_isotropy_ratio(const DTensor &d) {
  const double total = d.norm_sq();
  if (!(total > 0.0)) {
    throw DomainError("d_isotropy_ratio: zero transition tensor");
  }
  RealMatrix3 out{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      out[i][j] = std::norm(d.entries[i][j]) / total;
    }
  }
  return out;
}

double gamma0_free(double d_norm_sq, double omega, double omega_eg) {
  if (!(omega >= 0.0) || !(omega <= omega_eg)) {
    throw DomainError("gamma0_free: omega must lie in [0, omega_eg]");
  }
  const double pi = std::numbers::pi;
  const double pref = si::mu0 * si::mu0 / (36.0 * pi * pi * pi * si::hbar * si::hbar * si::c * si::c);
  const double rest = omega_eg - omega;
  return pref * omega * omega * omega * rest * rest * rest * d_norm_sq;
}

PurcellFactors purcell_at_frequency(double q, double keg_rho, double omega_frac,
                                    const NumericsConfig &cfg) {
  return purcell_all(q, omega_frac * keg_rho, cfg);
}

double spectral_enhancement_ss(double q, double keg_rho, double omega_frac,
                               const NumericsConfig &cfg) {
  check_omega_frac(omega_frac);
  const PurcellFactors a = purcell_at_frequency(q, keg_rho, omega_frac, cfg);
  const PurcellFactors b = purcell_at_frequency(q, keg_rho, 1.0 - omega_frac, cfg);
  return (a.p_z * b.p_z + a.p_rho * b.p_rho + a.p_phi * b.p_phi) / 3.0;
}

double spectral_enhancement_general(double q, double keg_rho, double omega_frac,
                                    const LevelScheme &scheme, const NumericsConfig &cfg) {
  check_omega_frac(omega_frac);
  const double w = omega_frac * scheme.omega_eg;
  const RealMatrix3 ratio = d_isotropy_ratio(d_tensor(scheme, w, scheme.omega_eg - w));
  const auto pa = frame_factors(purcell_at_frequency(q, keg_rho, omega_frac, cfg));
  const auto pb = frame_factors(purcell_at_frequency(q, keg_rho, 1.0 - omega_frac, cfg));
  double sum = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      sum += ratio[i][j] * pa[i] * pb[j];
    }
  }
  return sum;
}

SpectralPoint spectral_point(double q, double keg_rho, double omega_frac,
                             const NumericsConfig &cfg) {
  return {omega_frac, spectral_enhancement_ss(q, keg_rho, omega_frac, cfg), q, keg_rho};
}

double total_rate_ratio(double q, double keg_rho, const NumericsConfig &cfg,
                        std::size_t n_omega) {
  if (n_omega < 16) {
    throw DomainError("total_rate_ratio: n_omega must be >= 16");
  }
  std::vector<double> x;
  std::vector<double> w;
  gauss_legendre(n_omega, x, w);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < n_omega; ++i) {
    const double f = 0.25 * (x[i] + 1.0); // (0, 1/2)
    const double profile = std::pow(f * (1.0 - f), 3);
    num += w[i] * profile * spectral_enhancement_ss(q, keg_rho, f, cfg);
    den += w[i] * profile;
  }
  return num / den;
}

double total_rate_ratio(double q, double keg_rho, std::span<const WeightSample> table,
                        const NumericsConfig &cfg) {
  if (table.size() < 2) {
    throw DomainError("total_rate_ratio: weight table needs at least two samples");
  }
  std::vector<double> enh(table.size());
  for (std::size_t i = 0; i < table.size(); ++i) {
    check_omega_frac(table[i].omega_frac);
    if (i > 0 && !(table[i].omega_frac > table[i - 1].omega_frac)) {
      throw DomainError("total_rate_ratio: weight table abscissae must increase");
    }
    if (!(table[i].weight >= 0.0)) {
      throw DomainError("total_rate_ratio: negative weight");
    }
    enh[i] = spectral_enhancement_ss(q, keg_rho, table[i].omega_frac, cfg);
  }
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 1; i < table.size(); ++i) {
    const double h = 0.5 * (table[i].omega_frac - table[i - 1].omega_frac);
    num += h * (table[i].weight * enh[i] + table[i - 1].weight * enh[i - 1]);
    den += h * (table[i].weight + table[i - 1].weight);
  }
  if (!(den > 0.0)) {
    throw DomainError("total_rate_ratio: weight table integrates to zero");
  }
  return num / den;
}

} // namespace conicqed
