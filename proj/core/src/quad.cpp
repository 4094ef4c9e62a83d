#include "conicqed/quad.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

namespace conicqed {

void gauss_legendre(std::size_t n, std::vector<double> &x, std::vector<double> &w) {
  if (n == 0) {
    throw DomainError("gauss_legendre: node count must be positive");
  }
  x.assign(n, 0.0);
  w.assign(n, 0.0);
  const std::size_t half = (n + 1) / 2;
  const double dn = static_cast<double>(n);
  for (std::size_t i = 0; i < half; ++i) {
    // Tricomi initial guess, then Newton on P_n.
    double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (dn + 0.5));
    auto legendre = [&](double t, double &deriv) {
      double p0 = 1.0;
      double p1 = t;
      for (std::size_t k = 2; k <= n; ++k) {
        const double dk = static_cast<double>(k);
        const double p2 = ((2.0 * dk - 1.0) * t * p1 - (dk - 1.0) * p0) / dk;
        p0 = p1;
        p1 = p2;
      }
      deriv = dn * (t * p1 - p0) / (t * t - 1.0);
      return p1;
    };
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      const double dz = legendre(z, dp) / dp;
      z -= dz;
      if (std::abs(dz) < 1e-15) {
        break;
      }
    }
    legendre(z, dp);
    const double weight = 2.0 / ((1.0 - z * z) * dp * dp);
    x[i] = -z;
    x[n - 1 - i] = z;
    w[i] = weight;
    w[n - 1 - i] = weight;
  }
  if (n % 2 == 1) {
    x[n / 2] = 0.0;
  }
}

QuadratureRule make_theta_rule(std::size_t n) {
  QuadratureRule rule;
  rule.node_count = n;
  gauss_legendre(n, rule.nodes, rule.weights);
  const double quarter_pi = 0.25 * std::numbers::pi;
  rule.sines.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    rule.nodes[i] = quarter_pi * (rule.nodes[i] + 1.0);
    rule.weights[i] *= quarter_pi;
    rule.sines[i] = std::sin(rule.nodes[i]);
  }
  return rule;
}

std::shared_ptr<const QuadratureRule> theta_rule(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::shared_ptr<const QuadratureRule>> cache;
  std::lock_guard lock(mutex);
  auto &slot = cache[n];
  if (!slot) {
    slot = std::make_shared<const QuadratureRule>(make_theta_rule(n));
  }
  return slot;
}

double integrate_weighted(const std::function<double(double)> &f,
                          const QuadratureRule &rule) {
  return integrate_weighted_nodes([&](std::size_t, double u) { return f(u); }, rule);
}

double integrate_weighted_nodes(const std::function<double(std::size_t, double)> &f,
                                const QuadratureRule &rule) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rule.node_count; ++i) {
    const double u = rule.sines[i];
    const double value = f(i, u);
    if (!std::isfinite(value)) {
      throw EvaluationError("integrate_weighted: non-finite integrand at u = " +
                                std::to_string(u),
                            u);
    }
    sum += rule.weights[i] * value;
  }
  return sum;
}

void TruncationPolicy::validate() const {
  if (!(rel_tol > 0.0) || consecutive_small < 2 || m_max < consecutive_small) {
    throw DomainError("TruncationPolicy: need rel_tol > 0 and m_max >= consecutive_small >= 2");
  }
}

SumReport sum_symmetric_m(const std::function<double(int)> &term,
                          const TruncationPolicy &policy) {
  policy.validate();
  SumReport report;
  double sum = term(0);
  if (!std::isfinite(sum)) {
    throw EvaluationError("sum_symmetric_m: non-finite term at m = 0", 0.0);
  }
  report.terms_used = 1;
  report.last_term_magnitude = std::abs(sum);

  int small_run = 0;
  for (int m = 1; m <= policy.m_max; ++m) {
    const double t = term(m);
    if (!std::isfinite(t)) {
      throw EvaluationError("sum_symmetric_m: non-finite term at m = " + std::to_string(m),
                            static_cast<double>(m));
    }
    sum += 2.0 * t;
    report.terms_used = static_cast<std::size_t>(m) + 1;
    report.last_term_magnitude = std::abs(t);
    if (std::abs(t) <= policy.rel_tol * std::abs(sum)) {
      if (++small_run >= policy.consecutive_small) {
        report.converged = true;
        break;
      }
    } else {
      small_run = 0;
    }
  }
  report.value = sum;
  return report;
}

} // namespace conicqed
