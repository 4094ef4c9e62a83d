#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace conicqed {

/// Argument outside the mathematical domain of an operation (negative
/// non-integer Bessel order, q < 1, NaN input, ...).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// A quadrature integrand produced a non-finite value.
class EvaluationError : public std::runtime_error {
public:
  EvaluationError(const std::string &what, double node)
      : std::runtime_error(what), node_(node) {}

  /// Abscissa (u for the weighted rule, m for series) where it happened.
  double node() const noexcept { return node_; }

private:
  double node_;
};

/// Result of a convergence-controlled symmetric m-sum.
struct SumReport {
  double value = 0.0;
  std::size_t terms_used = 0;
  bool converged = false;
  double last_term_magnitude = 0.0;
};

/// An m-sum hit its hard cap before the tail became negligible.
class ConvergenceError : public std::runtime_error {
public:
  ConvergenceError(const std::string &what, const SumReport &report)
      : std::runtime_error(what), report_(report) {}

  const SumReport &report() const noexcept { return report_; }

private:
  SumReport report_;
};

/// A two-photon frequency sits on an intermediate-level pole.
class ResonanceError : public std::runtime_error {
public:
  ResonanceError(const std::string &what, std::size_t level)
      : std::runtime_error(what), level_(level) {}

  std::size_t level() const noexcept { return level_; }

private:
  std::size_t level_;
};

} // namespace conicqed
