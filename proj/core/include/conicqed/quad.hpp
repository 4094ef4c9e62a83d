#pragma once

#include "conicqed/errors.hpp"

#include <cstddef>
#include <functional>
#include <memory>
#include <vector>

namespace conicqed {

/// Gauss-Legendre rule mapped onto theta in (0, pi/2).
struct QuadratureRule {
  std::size_t node_count = 0;
  std::vector<double> nodes;   // increasing, in (0, pi/2)
  std::vector<double> weights; // positive, sum to pi/2
  std::vector<double> sines;   // sin(nodes[i]), i.e. the u-abscissae
};

/// Plain Gauss-Legendre nodes and weights on [-1, 1], increasing order.
/// Newton iteration on P_n to 1e-15.
void gauss_legendre(std::size_t n, std::vector<double> &x, std::vector<double> &w);

/// Builds (uncached) the theta rule with n nodes.
QuadratureRule make_theta_rule(std::size_t n);

/// Process-wide cache; safe to call concurrently.
std::shared_ptr<const QuadratureRule> theta_rule(std::size_t n);

/// Int_0^1 f(u) / sqrt(1 - u^2) du evaluated as Int_0^{pi/2} f(sin t) dt.
/// Throws EvaluationError carrying the offending u if f is not finite.
double integrate_weighted(const std::function<double(double)> &f,
                          const QuadratureRule &rule);

/// Same rule, but f also receives the node index (for precomputed tables).
double integrate_weighted_nodes(const std::function<double(std::size_t, double)> &f,
                                const QuadratureRule &rule);

struct TruncationPolicy {
  double rel_tol = 1e-10;
  int consecutive_small = 3;
  int m_max = 2000;

  void validate() const;
};

/// term(0) + 2 * sum_{m>=1} term(m) for a summand depending on |m| only.
///
/// Stops once `consecutive_small` successive terms each satisfy
/// |term| <= rel_tol * |partial sum|; converged = false when m_max is
/// reached first. Throws EvaluationError on a non-finite term.
SumReport sum_symmetric_m(const std::function<double(int)> &term,
                          const TruncationPolicy &policy);

} // namespace conicqed
