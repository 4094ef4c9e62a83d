#include "conicqed/specfun.hpp"

#include "conicqed/errors.hpp"
#include "conicqed/quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace conicqed {

namespace {

constexpr double kRescaleAbove = 1e250;
constexpr double kRescaleFactor = 1e-250;

bool is_integer(double v) { return std::nearbyint(v) == v; }

void check_args(double order, double x) {
  if (!std::isfinite(order) || !std::isfinite(x)) {
    throw DomainError("bessel_j: non-finite argument");
  }
  if (x < 0.0) {
    throw DomainError("bessel_j: negative argument x = " + std::to_string(x));
  }
  if (order < 0.0 && !is_integer(order)) {
    throw DomainError("bessel_j: negative non-integer order " +
                      std::to_string(order));
  }
}

// The series terms are monotonically decreasing from k = 1 on when
// (x/2)^2 <= nu + 1, so no cancellation beyond the first term.
bool use_series(double nu, double x, const BesselConfig &cfg) {
  const double h = 0.5 * x;
  return x <= cfg.series_arg_threshold && h * h <= nu + 1.0;
}

double series(double nu, double x, const BesselConfig &cfg) {
  const double h = 0.5 * x;
  double term = nu == 0.0 ? 1.0
                          : std::exp(nu * std::log(h) - std::lgamma(nu + 1.0));
  double sum = term;
  const double h2 = h * h;
  for (int k = 1; k < cfg.series_max_terms; ++k) {
    term *= -h2 / (k * (k + nu));
    sum += term;
    if (std::abs(term) <= cfg.rel_tol * 1e-2 * std::abs(sum) ||
        std::abs(term) < std::numeric_limits<double>::min()) {
      break;
    }
  }
  return sum;
}

// J_{mu+k}(x), k = 0..last, with mu = frac part of the requested order.
// Downward recurrence from well above max(order, x), normalized by the
// Neumann series. Requires x > 0.
std::vector<double> miller_sweep(double mu, int last, double x) {
  const double big = std::max(static_cast<double>(last) + mu, x);
  const int start =
      std::max(last + 2, static_cast<int>(std::ceil(big)) + 20 +
                             static_cast<int>(std::ceil(4.0 * std::sqrt(big + 1.0))));

  std::vector<double> v(static_cast<std::size_t>(start) + 2, 0.0);
  v[start] = 1e-300;
  const double two_over_x = 2.0 / x;
  for (int k = start; k > 0; --k) {
    v[k - 1] = (mu + k) * two_over_x * v[k] - v[k + 1];
    if (std::abs(v[k - 1]) > kRescaleAbove) {
      for (int j = k - 1; j <= start + 1; ++j) {
        v[j] *= kRescaleFactor;
      }
    }
  }

  // (x/2)^mu = sum_k (mu+2k) Gamma(mu+k)/k! J_{mu+2k}; the k = 0 weight is
  // mu*Gamma(mu) = Gamma(mu+1), and c_k = Gamma(mu+k)/k! for k >= 1.
  const double g = std::tgamma(mu + 1.0);
  double norm = g * v[0];
  double c = g;
  for (int k = 1; 2 * k <= start; ++k) {
    norm += (mu + 2.0 * k) * c * v[2 * k];
    c *= (mu + k) / (k + 1.0);
  }
  const double scale = std::pow(0.5 * x, mu) / norm;

  v.resize(static_cast<std::size_t>(last) + 1);
  for (double &value : v) {
    value *= scale;
  }
  return v;
}

double positive_order(double nu, double x, const BesselConfig &cfg) {
  if (x == 0.0) {
    return nu == 0.0 ? 1.0 : 0.0;
  }
  if (use_series(nu, x, cfg)) {
    return series(nu, x, cfg);
  }
  const double n = std::floor(nu);
  return miller_sweep(nu - n, static_cast<int>(n), x).back();
}

} // namespace

void BesselConfig::validate() const {
  if (series_max_terms < 1 || !(series_arg_threshold > 0.0) ||
      !(abs_tol > 0.0) || !(rel_tol > 0.0)) {
    throw DomainError("BesselConfig: invalid settings");
  }
}

double bessel_j(double order, double x, const BesselConfig &cfg) {
  check_args(order, x);
  if (order < 0.0) {
    const double n = -order;
    const double value = positive_order(n, x, cfg);
    return std::fmod(n, 2.0) == 0.0 ? value : -value;
  }
  return positive_order(order, x, cfg);
}

std::vector<double> bessel_j_sequence(double order, std::size_t count, double x,
                                      const BesselConfig &cfg) {
  check_args(order, x);
  std::vector<double> out(count);
  if (count == 0) {
    return out;
  }
  if (order < 0.0) {
    // Negative integer start: evaluate |order + k| and reflect.
    for (std::size_t k = 0; k < count; ++k) {
      out[k] = bessel_j(order + static_cast<double>(k), x, cfg);
    }
    return out;
  }
  if (x == 0.0) {
    for (std::size_t k = 0; k < count; ++k) {
      out[k] = (order == 0.0 && k == 0) ? 1.0 : 0.0;
    }
    return out;
  }

  const double n0 = std::floor(order);
  const double mu = order - n0;
  std::vector<double> sweep;
  for (std::size_t k = 0; k < count; ++k) {
    const double nu = order + static_cast<double>(k);
    if (use_series(nu, x, cfg)) {
      out[k] = series(nu, x, cfg);
      continue;
    }
    if (sweep.empty()) {
      sweep = miller_sweep(mu, static_cast<int>(n0) + static_cast<int>(count) - 1, x);
    }
    out[k] = sweep[static_cast<std::size_t>(n0) + k];
  }
  return out;
}

std::array<double, 3> bessel_j_triplet(double nu, double x, const BesselConfig &cfg) {
  if (nu != 0.0 && nu < 1.0) {
    throw DomainError("bessel_j_triplet: order must be 0 or >= 1, got " +
                      std::to_string(nu));
  }
  if (nu == 0.0) {
    const auto s = bessel_j_sequence(0.0, 2, x, cfg);
    return {-s[1], s[0], s[1]};
  }
  const auto s = bessel_j_sequence(nu - 1.0, 3, x, cfg);
  return {s[0], s[1], s[2]};
}

double bessel_j_prime(double order, double x, const BesselConfig &cfg) {
  check_args(order, x);
  if (!(x > 0.0)) {
    throw DomainError("bessel_j_prime: x must be positive");
  }
  if (order > 0.0 && order < 1.0) {
    return order / x * bessel_j(order, x, cfg) - bessel_j(order + 1.0, x, cfg);
  }
  return 0.5 * (bessel_j(order - 1.0, x, cfg) - bessel_j(order + 1.0, x, cfg));
}

double bessel_j_oracle(double order, double x) {
  check_args(order, x);
  if (order < 0.0) {
    const double value = bessel_j_oracle(-order, x);
    return std::fmod(-order, 2.0) == 0.0 ? value : -value;
  }
  if (x == 0.0) {
    return order == 0.0 ? 1.0 : 0.0;
  }

  constexpr std::size_t kNodes = 32;
  std::vector<double> gx;
  std::vector<double> gw;
  gauss_legendre(kNodes, gx, gw);

  auto panels = [&](double a, double b, int count, auto &&f) {
    const double width = (b - a) / count;
    double total = 0.0;
    for (int p = 0; p < count; ++p) {
      const double mid = a + (p + 0.5) * width;
      const double half = 0.5 * width;
      double acc = 0.0;
      for (std::size_t i = 0; i < kNodes; ++i) {
        acc += gw[i] * f(mid + half * gx[i]);
      }
      total += half * acc;
    }
    return total;
  };

  const double pi = std::numbers::pi;
  double value = panels(0.0, pi, 32, [&](double t) {
                   return std::cos(order * t - x * std::sin(t));
                 }) /
                 pi;

  if (!is_integer(order)) {
    // Integrand e^{-nu t - x sinh t} falls below 1e-18 past t_max.
    constexpr double kCut = 41.5;
    double t_max = 0.25;
    while (order * t_max + x * std::sinh(t_max) < kCut) {
      t_max *= 1.25;
    }
    const int count = std::max(8, static_cast<int>(std::ceil(t_max / 0.25)));
    const double tail = panels(0.0, t_max, count, [&](double t) {
      return std::exp(-order * t - x * std::sinh(t));
    });
    value -= std::sin(order * pi) / pi * tail;
  }
  return value;
}

} // namespace conicqed
