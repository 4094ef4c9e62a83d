#include "conicqed/opse.hpp"

#include "conicqed/background.hpp"
#include "conicqed/errors.hpp"
#include "conicqed/specfun.hpp"

#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

namespace conicqed {

namespace {

void check_inputs(double q, double keg_rho) {
  if (!std::isfinite(q) || q < 1.0) {
    throw DomainError("q must be >= 1 (q = 1 is free space), got " + std::to_string(q));
  }
  if (!std::isfinite(keg_rho) || keg_rho < 0.0) {
    throw DomainError("keg_rho must be finite and non-negative, got " +
                      std::to_string(keg_rho));
  }
}

// Bessel triplets J_{qm-1}, J_{qm}, J_{qm+1} at every quadrature node,
// computed lazily per m and shared by the three orientations.
class MTermCache {
public:
  MTermCache(double q, double x, const NumericsConfig &cfg)
      : q_(q), x_(x), cfg_(cfg), rule_(theta_rule(cfg.nodes)) {}

  const QuadratureRule &rule() const { return *rule_; }

  const std::vector<std::array<double, 3>> &triplets(int m) {
    auto it = cache_.find(m);
    if (it != cache_.end()) {
      return it->second;
    }
    std::vector<std::array<double, 3>> row(rule_->node_count);
    const double nu = q_ * m;
    for (std::size_t i = 0; i < rule_->node_count; ++i) {
      row[i] = bessel_j_triplet(nu, x_ * rule_->sines[i], cfg_.bessel);
    }
    return cache_.emplace(m, std::move(row)).first->second;
  }

  double term(Orientation o, int m) {
    const auto &row = triplets(m);
    const QuadratureRule &r = *rule_;
    if (o == Orientation::Z) {
      return 1.5 * q_ * integrate_weighted_nodes(
                            [&](std::size_t i, double u) {
                              const double j = row[i][1];
                              return u * u * u * j * j;
                            },
                            r);
    }
    const double sign = o == Orientation::Rho ? 1.0 : -1.0;
    return 0.375 * q_ * integrate_weighted_nodes(
                            [&](std::size_t i, double u) {
                              const double a = row[i][0];
                              const double b = row[i][2];
                              const double u2 = u * u;
                              return u * ((2.0 - u2) * (a * a + b * b) + sign * 2.0 * u2 * a * b);
                            },
                            r);
  }

private:
  double q_;
  double x_;
  const NumericsConfig &cfg_;
  std::shared_ptr<const QuadratureRule> rule_;
  std::map<int, std::vector<std::array<double, 3>>> cache_;
};

double closed_form_at_string(Orientation o, double q) {
  // Only J_0(0) = 1 survives: the m = 0 axial term (Z), or for q = 1 the
  // J_{|m|-1} = J_0 pieces at m = +-1 (Rho/Phi), which sum to 1.
  switch (o) {
  case Orientation::Z:
    return q;
  case Orientation::Rho:
  case Orientation::Phi:
    return q == 1.0 ? 1.0 : 0.0;
  case Orientation::Isotropic:
    return q == 1.0 ? 1.0 : q / 3.0;
  }
  return 0.0;
}

double summed(MTermCache &cache, Orientation o, double q, double x,
              const NumericsConfig &cfg) {
  const SumReport report =
      sum_symmetric_m([&](int m) { return cache.term(o, m); }, cfg.truncation);
  if (!report.converged) {
    std::ostringstream msg;
    msg << "purcell_factor(" << to_string(o) << "): m-sum not converged at q = " << q
        << ", keg_rho = " << x << " after " << report.terms_used << " terms";
    throw ConvergenceError(msg.str(), report);
  }
  return report.value;
}

} // namespace

std::string_view to_string(Orientation o) {
  switch (o) {
  case Orientation::Z:
    return "z";
  case Orientation::Rho:
    return "rho";
  case Orientation::Phi:
    return "phi";
  case Orientation::Isotropic:
    return "iso";
  }
  return "?";
}

Orientation parse_orientation(std::string_view name) {
  if (name == "z") return Orientation::Z;
  if (name == "rho") return Orientation::Rho;
  if (name == "phi") return Orientation::Phi;
  if (name == "iso") return Orientation::Isotropic;
  throw DomainError("unknown orientation '" + std::string(name) + "'");
}

double PurcellFactors::get(Orientation o) const {
  switch (o) {
  case Orientation::Z:
    return p_z;
  case Orientation::Rho:
    return p_rho;
  case Orientation::Phi:
    return p_phi;
  case Orientation::Isotropic:
    return p_iso;
  }
  return 0.0;
}

double purcell_factor(Orientation orient, double q, double keg_rho,
                      const NumericsConfig &cfg) {
  if (orient == Orientation::Isotropic) {
    return purcell_all(q, keg_rho, cfg).p_iso;
  }
  check_inputs(q, keg_rho);
  cfg.validate();
  if (keg_rho == 0.0) {
    return closed_form_at_string(orient, q);
  }
  MTermCache cache(q, keg_rho, cfg);
  return summed(cache, orient, q, keg_rho, cfg);
}

PurcellFactors purcell_all(double q, double keg_rho, const NumericsConfig &cfg) {
  check_inputs(q, keg_rho);
  cfg.validate();
  PurcellFactors out;
  out.q = q;
  out.keg_rho = keg_rho;
  if (keg_rho == 0.0) {
    out.p_z = closed_form_at_string(Orientation::Z, q);
    out.p_rho = closed_form_at_string(Orientation::Rho, q);
    out.p_phi = closed_form_at_string(Orientation::Phi, q);
  } else {
    MTermCache cache(q, keg_rho, cfg);
    out.p_z = summed(cache, Orientation::Z, q, keg_rho, cfg);
    out.p_rho = summed(cache, Orientation::Rho, q, keg_rho, cfg);
    out.p_phi = summed(cache, Orientation::Phi, q, keg_rho, cfg);
  }
  out.p_iso = (out.p_z + out.p_rho + out.p_phi) / 3.0;
  return out;
}

double small_rho_asymptotic(Orientation orient, double q, double keg_rho) {
  check_inputs(q, keg_rho);
  if (q == 1.0) {
    throw DomainError("small_rho_asymptotic: expansion only holds for q > 1");
  }
  const double x = keg_rho;
  const double x2 = x * x;
  const double transverse =
      3.0 * (q + 1.0) / (4.0 * (q + 0.5) * std::tgamma(2.0 * q)) * std::pow(x, 2.0 * (q - 1.0));
  switch (orient) {
  case Orientation::Z:
    return q * (1.0 - 0.4 * x2 +
                3.0 * (q + 1.0) * std::pow(x, 2.0 * q) / ((q + 1.5) * std::tgamma(2.0 * q + 2.0)));
  case Orientation::Rho:
    return q * (x2 / 20.0 + transverse);
  case Orientation::Phi:
    return q * (x2 / 4.0 + transverse);
  case Orientation::Isotropic:
    return (small_rho_asymptotic(Orientation::Z, q, x) +
            small_rho_asymptotic(Orientation::Rho, q, x) +
            small_rho_asymptotic(Orientation::Phi, q, x)) /
           3.0;
  }
  return 0.0;
}

double large_q_approx(Orientation orient, double q, double keg_rho,
                      const NumericsConfig &cfg) {
  check_inputs(q, keg_rho);
  cfg.validate();
  if (orient == Orientation::Isotropic) {
    return (large_q_approx(Orientation::Z, q, keg_rho, cfg) +
            large_q_approx(Orientation::Rho, q, keg_rho, cfg) +
            large_q_approx(Orientation::Phi, q, keg_rho, cfg)) /
           3.0;
  }
  const auto rule = theta_rule(cfg.nodes);
  const double x = keg_rho;
  double integral = 0.0;
  switch (orient) {
  case Orientation::Z:
    integral = integrate_weighted(
        [&](double u) {
          const double j = bessel_j(0.0, x * u, cfg.bessel);
          return u * u * u * j * j;
        },
        *rule);
    break;
  case Orientation::Rho:
    integral = integrate_weighted(
        [&](double u) {
          const double j = bessel_j(1.0, x * u, cfg.bessel);
          return u * (1.0 - u * u) * j * j;
        },
        *rule);
    break;
  case Orientation::Phi:
    integral = integrate_weighted(
        [&](double u) {
          const double j = bessel_j(1.0, x * u, cfg.bessel);
          return u * j * j;
        },
        *rule);
    break;
  case Orientation::Isotropic:
    break;
  }
  return (1.5 * q) * integral;
}

double free_space_rate(double dipole_sq, double omega_eg) {
  if (!std::isfinite(dipole_sq) || dipole_sq < 0.0) {
    throw DomainError("free_space_rate: |d|^2 must be finite and non-negative");
  }
  if (!std::isfinite(omega_eg) || !(omega_eg > 0.0)) {
    throw DomainError("free_space_rate: omega_eg must be positive");
  }
  const double c3 = si::c * si::c * si::c;
  return dipole_sq * omega_eg * omega_eg * omega_eg /
         (3.0 * std::numbers::pi * si::epsilon0 * si::hbar * c3);
}

} // namespace conicqed
