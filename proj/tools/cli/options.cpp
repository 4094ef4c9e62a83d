#include "options.hpp"

#include "sweep.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <string>

namespace conicqed::cli {

int main_entry(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Purcell factors and two-photon spectral enhancement near a cosmic string",
               "conicqed"};
  app.set_config("--config", "", "key=value file; command-line flags take precedence");
  app.get_formatter()->column_width(30);

  SweepSpec spec;
  std::string command;
  std::string orientation;
  bool no_control = false;

  std::string commands_help = "one of:";
  for (const auto &name : command_names()) {
    commands_help += " " + name;
  }
  app.add_option("command", command, commands_help)
      ->required()
      ->check(CLI::IsMember(command_names()));
  app.add_option("--q", spec.q_values, "deficit parameter values, comma separated")
      ->delimiter(',');
  app.add_option("--keg-rho", spec.keg_rho_values, "k_eg rho values, comma separated")
      ->delimiter(',');
  app.add_option("--omega-frac", spec.omega_frac_values, "omega/omega_eg values in (0, 1)")
      ->delimiter(',');
  app.add_option("--rho-min", spec.rho_min, "lower end of the k_eg rho sweep")
      ->capture_default_str();
  app.add_option("--rho-max", spec.rho_max, "upper end of the k_eg rho sweep")
      ->capture_default_str();
  app.add_option("--q-min", spec.q_min, "lower end of the q sweep")->capture_default_str();
  app.add_option("--q-max", spec.q_max, "upper end of the q sweep")->capture_default_str();
  app.add_option("--points", spec.grid_points, "grid points per swept axis")->capture_default_str();
  app.add_option("--out", spec.output_path, "output CSV path (default stdout)");
  app.add_option("--orientation", orientation, "restrict to one dipole orientation")
      ->check(CLI::IsMember({"z", "rho", "phi", "iso"}));
  app.add_flag("--no-control", no_control, "omit the q = 1 control column");
  app.add_option("--nodes", spec.numerics.nodes, "quadrature nodes")->capture_default_str();
  app.add_option("--m-max", spec.numerics.truncation.m_max, "hard cap on the m-sum")
      ->capture_default_str();
  app.add_option("--rel-tol", spec.numerics.truncation.rel_tol, "m-sum relative tolerance")
      ->capture_default_str();
  app.add_option("--n-omega", spec.n_omega, "frequency nodes for total-rate")
      ->capture_default_str();
  app.add_flag("--quick", spec.quick, "selftest: skip the slow oracle comparisons");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  spec.command = *parse_command(command);
  spec.control = !no_control;
  if (!orientation.empty()) {
    spec.orientation = parse_orientation(orientation);
  }
  return run(spec, out, err);
}

} // namespace conicqed::cli
