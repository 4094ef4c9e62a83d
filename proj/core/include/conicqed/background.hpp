#pragma once

namespace conicqed {

// CODATA 2018 values, SI.
namespace si {
inline constexpr double c = 299792458.0;
inline constexpr double G = 6.67430e-11;
inline constexpr double hbar = 1.054571817e-34;
inline constexpr double epsilon0 = 8.8541878128e-12;
inline constexpr double mu0 = 1.25663706212e-6;
inline constexpr double e = 1.602176634e-19;
inline constexpr double a0 = 5.29177210903e-11;
} // namespace si

/// Largest linear mass density (kg/m) keeping the exterior conical: c^2/4G.
double max_linear_mass_density();

/// Deficit parameter q = 2 pi / (2 pi - 8 pi G mu / c^2). mu in kg/m.
double q_from_mu(double mu);

/// Inverse of q_from_mu.
double mu_from_q(double q);

/// Idealized straight cosmic string, characterized only by q >= 1.
class StringBackground {
public:
  explicit StringBackground(double q);

  static StringBackground from_linear_mass_density(double mu);

  double q() const noexcept { return q_; }
  double linear_mass_density() const { return mu_from_q(q_); }
  /// delta phi = 2 pi (1 - 1/q).
  double deficit_angle() const;
  bool is_free_space() const noexcept { return q_ == 1.0; }

private:
  double q_;
};

} // namespace conicqed
