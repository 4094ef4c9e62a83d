#pragma once

#include "conicqed/numerics.hpp"
#include "conicqed/opse.hpp"

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace conicqed::cli {

enum class Command {
  OpseVsDistance,
  OpseVsQ,
  TpseSpectrum,
  TpseVsDistance,
  TpseVsQ,
  TpseContour,
  TotalRate,
  Selftest,
};

std::string_view to_string(Command c);
std::optional<Command> parse_command(std::string_view name);
std::vector<std::string> command_names();

/// Invalid flag values or combinations; maps to exit status 2.
class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A grid point whose evaluation failed; maps to exit status 3.
class PointError : public std::runtime_error {
public:
  PointError(const std::string &what, double q, double keg_rho, double omega_frac)
      : std::runtime_error(what), q_(q), keg_rho_(keg_rho), omega_frac_(omega_frac) {}
  double q() const noexcept { return q_; }
  double keg_rho() const noexcept { return keg_rho_; }
  double omega_frac() const noexcept { return omega_frac_; }

private:
  double q_;
  double keg_rho_;
  double omega_frac_;
};

struct SweepSpec {
  Command command = Command::OpseVsDistance;
  std::vector<double> q_values;
  std::vector<double> keg_rho_values;
  std::vector<double> omega_frac_values;
  std::size_t grid_points = 200;
  std::string output_path; // empty or "-" means stdout
  NumericsConfig numerics;

  std::optional<Orientation> orientation; // unset: all orientations
  double rho_min = 0.0;
  double rho_max = 20.0;
  double q_min = 1.0;
  double q_max = 10.0;
  bool control = true; // prepend a q = 1 column in opse-vs-distance
  std::size_t n_omega = 32;
  bool quick = false; // selftest only

  /// Throws UsageError.
  void validate() const;
};

struct Table {
  std::vector<std::string> comments;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// Worker count from CONIC_QED_THREADS (if set and positive), otherwise the
/// hardware concurrency.
std::size_t thread_count();

/// Evaluates the sweep. Rows are assembled in grid order, so the result does
/// not depend on `threads`. Throws PointError for the first failing row.
Table build_table(const SweepSpec &spec, std::size_t threads);

/// `#` comment lines, a header row, then one line per row with %.17g values.
std::string to_csv(const Table &table);

/// Runs a sweep command and writes its CSV to spec.output_path. Diagnostics
/// go to `err`. Returns the process exit status (0, 2 or 3).
int run(const SweepSpec &spec, std::ostream &out, std::ostream &err);

} // namespace conicqed::cli
