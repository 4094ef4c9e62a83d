#include "sweep.hpp"

#include "selftest.hpp"

#include "conicqed/errors.hpp"
#include "conicqed/tpse.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#ifndef CONICQED_VERSION
#define CONICQED_VERSION "unknown"
#endif

namespace conicqed::cli {

namespace {

struct CommandName {
  Command command;
  std::string_view name;
};

constexpr CommandName kCommands[] = {
    {Command::OpseVsDistance, "opse-vs-distance"},
    {Command::OpseVsQ, "opse-vs-q"},
    {Command::TpseSpectrum, "tpse-spectrum"},
    {Command::TpseVsDistance, "tpse-vs-distance"},
    {Command::TpseVsQ, "tpse-vs-q"},
    {Command::TpseContour, "tpse-contour"},
    {Command::TotalRate, "total-rate"},
    {Command::Selftest, "selftest"},
};

constexpr Orientation kAllOrientations[] = {Orientation::Z, Orientation::Rho, Orientation::Phi,
                                            Orientation::Isotropic};

std::string label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string join(const std::vector<double> &values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    s += (i ? "," : "") + label(values[i]);
  }
  return s;
}

std::vector<double> linspace(double a, double b, std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  v.back() = b;
  return v;
}

std::vector<double> interior_fractions(std::size_t n) {
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = static_cast<double>(i + 1) / static_cast<double>(n + 1);
  }
  return v;
}

bool sweeps_distance(Command c) {
  return c == Command::OpseVsDistance || c == Command::TpseVsDistance ||
         c == Command::TotalRate || c == Command::TpseContour;
}

bool sweeps_q(Command c) { return c == Command::OpseVsQ || c == Command::TpseVsQ; }

bool is_opse(Command c) { return c == Command::OpseVsDistance || c == Command::OpseVsQ; }

// Axis values with per-command defaults filled in.
struct Axes {
  std::vector<double> q;
  std::vector<double> keg_rho;
  std::vector<double> omega_frac;
  std::vector<Orientation> orientations;
};

Axes resolve_axes(const SweepSpec &spec) {
  Axes a{spec.q_values, spec.keg_rho_values, spec.omega_frac_values, {}};
  auto fallback = [](std::vector<double> &v, std::vector<double> d) {
    if (v.empty()) {
      v = std::move(d);
    }
  };
  switch (spec.command) {
  case Command::OpseVsDistance:
    fallback(a.q, {1.5, 2.0, 3.0});
    if (spec.control && std::find(a.q.begin(), a.q.end(), 1.0) == a.q.end()) {
      a.q.insert(a.q.begin(), 1.0);
    }
    break;
  case Command::OpseVsQ:
    fallback(a.keg_rho, {0.5, 1.0, 2.0});
    break;
  case Command::TpseSpectrum:
    fallback(a.q, {1.5, 2.5});
    fallback(a.keg_rho, {2.0, 4.0});
    break;
  case Command::TpseVsDistance:
    fallback(a.q, {1.5, 2.5});
    fallback(a.omega_frac, {0.5});
    break;
  case Command::TpseVsQ:
    fallback(a.keg_rho, {1.0, 2.0});
    fallback(a.omega_frac, {0.5});
    break;
  case Command::TpseContour:
    fallback(a.q, {2.0});
    break;
  case Command::TotalRate:
    fallback(a.q, {1.5, 2.5});
    break;
  case Command::Selftest:
    break;
  }
  if (spec.orientation) {
    a.orientations = {*spec.orientation};
  } else {
    a.orientations.assign(std::begin(kAllOrientations), std::end(kAllOrientations));
  }
  return a;
}

template <class F>
double guarded(double q, double keg_rho, double omega_frac, F &&f) {
  auto fail = [&](const std::string &why) {
    std::ostringstream msg;
    msg << "evaluation failed at (q, keg_rho, omega_frac) = (" << label(q) << ", "
        << label(keg_rho) << ", " << label(omega_frac) << "): " << why;
    return PointError(msg.str(), q, keg_rho, omega_frac);
  };
  double v = 0.0;
  try {
    v = f();
  } catch (const ConvergenceError &e) {
    throw fail(e.what());
  } catch (const EvaluationError &e) {
    throw fail(e.what());
  } catch (const DomainError &e) {
    throw fail(e.what());
  }
  if (!std::isfinite(v)) {
    throw fail("non-finite result");
  }
  return v;
}

template <class F>
void parallel_rows(std::size_t n, std::size_t threads, F &&row) {
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        row(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const std::size_t count = std::max<std::size_t>(1, std::min(threads, n));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < count; ++t) {
    pool.emplace_back(worker);
  }
  worker();
  for (auto &th : pool) {
    th.join();
  }
  for (const auto &e : errors) {
    if (e) {
      std::rethrow_exception(e);
    }
  }
}

void check_values(const std::vector<double> &v, const char *what, double lo, bool lo_open,
                  double hi, bool hi_open) {
  for (double x : v) {
    const bool ok = std::isfinite(x) && (lo_open ? x > lo : x >= lo) && (hi_open ? x < hi : x <= hi);
    if (!ok) {
      throw UsageError(std::string("invalid ") + what + " value " + label(x));
    }
  }
}

} // namespace

std::string_view to_string(Command c) {
  for (const auto &entry : kCommands) {
    if (entry.command == c) {
      return entry.name;
    }
  }
  return "unknown";
}

std::optional<Command> parse_command(std::string_view name) {
  for (const auto &entry : kCommands) {
    if (entry.name == name) {
      return entry.command;
    }
  }
  return std::nullopt;
}

std::vector<std::string> command_names() {
  std::vector<std::string> names;
  for (const auto &entry : kCommands) {
    names.emplace_back(entry.name);
  }
  return names;
}

void SweepSpec::validate() const {
  const double inf = INFINITY;
  check_values(q_values, "--q", 1.0, false, inf, true);
  check_values(keg_rho_values, "--keg-rho", 0.0, false, inf, true);
  check_values(omega_frac_values, "--omega-frac", 0.0, true, 1.0, true);
  try {
    numerics.validate();
  } catch (const DomainError &e) {
    throw UsageError(e.what());
  }
  if (quick && command != Command::Selftest) {
    throw UsageError("--quick only applies to selftest");
  }
  if (command == Command::Selftest) {
    return;
  }
  if (grid_points < 2) {
    throw UsageError("--points must be at least 2");
  }
  if (sweeps_distance(command)) {
    if (!keg_rho_values.empty()) {
      throw UsageError(std::string(to_string(command)) + " sweeps keg_rho; use --rho-min/--rho-max");
    }
    if (!(std::isfinite(rho_min) && std::isfinite(rho_max) && rho_min >= 0.0 && rho_max > rho_min)) {
      throw UsageError("need 0 <= --rho-min < --rho-max");
    }
  }
  if (sweeps_q(command)) {
    if (!q_values.empty()) {
      throw UsageError(std::string(to_string(command)) + " sweeps q; use --q-min/--q-max");
    }
    if (!(std::isfinite(q_min) && std::isfinite(q_max) && q_min >= 1.0 && q_max > q_min)) {
      throw UsageError("need 1 <= --q-min < --q-max");
    }
  }
  if (is_opse(command) && !omega_frac_values.empty()) {
    throw UsageError("--omega-frac does not apply to " + std::string(to_string(command)));
  }
  if (!is_opse(command) && orientation) {
    throw UsageError("--orientation only applies to opse commands");
  }
  if ((command == Command::TpseSpectrum || command == Command::TpseContour ||
       command == Command::TotalRate) &&
      !omega_frac_values.empty()) {
    throw UsageError(std::string(to_string(command)) + " sweeps omega_frac itself; drop --omega-frac");
  }
  if (command == Command::TpseContour && q_values.size() > 1) {
    throw UsageError("tpse-contour takes a single --q value");
  }
  if (command != Command::OpseVsDistance && !control) {
    throw UsageError("--no-control only applies to opse-vs-distance");
  }
  if (n_omega < 16) {
    throw UsageError("--n-omega must be at least 16");
  }
}

std::size_t thread_count() {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char *env = std::getenv("CONIC_QED_THREADS")) {
    char *end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) {
      n = static_cast<std::size_t>(v);
    }
  }
  return n;
}

Table build_table(const SweepSpec &spec, std::size_t threads) {
  spec.validate();
  if (spec.command == Command::Selftest) {
    throw UsageError("selftest does not produce a table");
  }
  const Axes ax = resolve_axes(spec);
  const NumericsConfig &cfg = spec.numerics;
  const std::size_t n = spec.grid_points;
  Table t;

  t.comments.push_back("conicqed " CONICQED_VERSION);
  t.comments.push_back("command: " + std::string(to_string(spec.command)));
  {
    std::ostringstream num;
    num << "numerics: nodes=" << cfg.nodes << " rel_tol=" << label(cfg.truncation.rel_tol)
        << " consecutive_small=" << cfg.truncation.consecutive_small
        << " m_max=" << cfg.truncation.m_max
        << " series_arg_threshold=" << label(cfg.bessel.series_arg_threshold);
    t.comments.push_back(num.str());
  }
  const std::string rho_range = label(spec.rho_min) + ".." + label(spec.rho_max);
  const std::string q_range = label(spec.q_min) + ".." + label(spec.q_max);

  std::vector<std::string> &cols = t.columns;
  std::function<std::vector<double>(std::size_t)> row;

  switch (spec.command) {
  case Command::OpseVsDistance: {
    const auto xs = linspace(spec.rho_min, spec.rho_max, n);
    t.comments.push_back("q: " + join(ax.q));
    t.comments.push_back("keg_rho: " + rho_range + " (" + std::to_string(n) + " points)");
    cols.push_back("keg_rho");
    for (Orientation o : ax.orientations) {
      for (double q : ax.q) {
        cols.push_back("G" + std::string(conicqed::to_string(o)) + "_q" + label(q));
      }
    }
    row = [&, xs](std::size_t i) {
      std::vector<PurcellFactors> p;
      for (double q : ax.q) {
        PurcellFactors f;
        guarded(q, xs[i], 1.0, [&] {
          f = purcell_all(q, xs[i], cfg);
          return f.p_iso;
        });
        p.push_back(f);
      }
      std::vector<double> r{xs[i]};
      for (Orientation o : ax.orientations) {
        for (const auto &f : p) {
          r.push_back(f.get(o));
        }
      }
      return r;
    };
    break;
  }
  case Command::OpseVsQ: {
    const auto qs = linspace(spec.q_min, spec.q_max, n);
    t.comments.push_back("q: " + q_range + " (" + std::to_string(n) + " points)");
    t.comments.push_back("keg_rho: " + join(ax.keg_rho));
    cols.push_back("q");
    for (Orientation o : ax.orientations) {
      for (double x : ax.keg_rho) {
        cols.push_back("G" + std::string(conicqed::to_string(o)) + "_k" + label(x));
      }
    }
    row = [&, qs](std::size_t i) {
      std::vector<PurcellFactors> p;
      for (double x : ax.keg_rho) {
        PurcellFactors f;
        guarded(qs[i], x, 1.0, [&] {
          f = purcell_all(qs[i], x, cfg);
          return f.p_iso;
        });
        p.push_back(f);
      }
      std::vector<double> r{qs[i]};
      for (Orientation o : ax.orientations) {
        for (const auto &f : p) {
          r.push_back(f.get(o));
        }
      }
      return r;
    };
    break;
  }
  case Command::TpseSpectrum: {
    const auto fs = interior_fractions(n);
    t.comments.push_back("q: " + join(ax.q));
    t.comments.push_back("keg_rho: " + join(ax.keg_rho));
    t.comments.push_back("omega_frac: i/(points+1), " + std::to_string(n) + " points");
    cols.push_back("omega_frac");
    for (double q : ax.q) {
      for (double x : ax.keg_rho) {
        cols.push_back("S_q" + label(q) + "_k" + label(x));
      }
    }
    row = [&, fs](std::size_t i) {
      std::vector<double> r{fs[i]};
      for (double q : ax.q) {
        for (double x : ax.keg_rho) {
          r.push_back(guarded(q, x, fs[i], [&] { return spectral_enhancement_ss(q, x, fs[i], cfg); }));
        }
      }
      return r;
    };
    break;
  }
  case Command::TpseVsDistance: {
    const auto xs = linspace(spec.rho_min, spec.rho_max, n);
    t.comments.push_back("q: " + join(ax.q));
    t.comments.push_back("omega_frac: " + join(ax.omega_frac));
    t.comments.push_back("keg_rho: " + rho_range + " (" + std::to_string(n) + " points)");
    cols.push_back("keg_rho");
    for (double q : ax.q) {
      for (double f : ax.omega_frac) {
        cols.push_back("S_q" + label(q) + "_w" + label(f));
      }
    }
    row = [&, xs](std::size_t i) {
      std::vector<double> r{xs[i]};
      for (double q : ax.q) {
        for (double f : ax.omega_frac) {
          r.push_back(guarded(q, xs[i], f, [&] { return spectral_enhancement_ss(q, xs[i], f, cfg); }));
        }
      }
      return r;
    };
    break;
  }
  case Command::TpseVsQ: {
    const auto qs = linspace(spec.q_min, spec.q_max, n);
    t.comments.push_back("q: " + q_range + " (" + std::to_string(n) + " points)");
    t.comments.push_back("keg_rho: " + join(ax.keg_rho));
    t.comments.push_back("omega_frac: " + join(ax.omega_frac));
    cols.push_back("q");
    for (double x : ax.keg_rho) {
      for (double f : ax.omega_frac) {
        cols.push_back("S_k" + label(x) + "_w" + label(f));
      }
    }
    row = [&, qs](std::size_t i) {
      std::vector<double> r{qs[i]};
      for (double x : ax.keg_rho) {
        for (double f : ax.omega_frac) {
          r.push_back(guarded(qs[i], x, f, [&] { return spectral_enhancement_ss(qs[i], x, f, cfg); }));
        }
      }
      return r;
    };
    break;
  }
  case Command::TpseContour: {
    const auto fs = interior_fractions(n);
    const auto xs = linspace(spec.rho_min, spec.rho_max, n);
    const double q = ax.q.front();
    t.comments.push_back("q: " + label(q));
    t.comments.push_back("keg_rho: " + rho_range + " (" + std::to_string(n) + " points, outer)");
    t.comments.push_back("omega_frac: i/(points+1), " + std::to_string(n) + " points, inner");
    cols = {"omega_frac", "keg_rho", "enhancement"};
    row = [&, fs, xs, q](std::size_t i) {
      const double x = xs[i / n];
      const double f = fs[i % n];
      return std::vector<double>{
          f, x, guarded(q, x, f, [&] { return spectral_enhancement_ss(q, x, f, cfg); })};
    };
    break;
  }
  case Command::TotalRate: {
    const auto xs = linspace(spec.rho_min, spec.rho_max, n);
    t.comments.push_back("q: " + join(ax.q));
    t.comments.push_back("keg_rho: " + rho_range + " (" + std::to_string(n) + " points)");
    t.comments.push_back("weight: (w (w_eg - w))^3, n_omega=" + std::to_string(spec.n_omega));
    cols.push_back("keg_rho");
    for (double q : ax.q) {
      cols.push_back("R_q" + label(q));
    }
    row = [&, xs](std::size_t i) {
      std::vector<double> r{xs[i]};
      for (double q : ax.q) {
        r.push_back(
            guarded(q, xs[i], 0.5, [&] { return total_rate_ratio(q, xs[i], cfg, spec.n_omega); }));
      }
      return r;
    };
    break;
  }
  case Command::Selftest:
    break;
  }

  const std::size_t rows = spec.command == Command::TpseContour ? n * n : n;
  t.rows.resize(rows);
  parallel_rows(rows, threads, [&](std::size_t i) { t.rows[i] = row(i); });
  return t;
}

std::string to_csv(const Table &table) {
  std::string s;
  for (const auto &c : table.comments) {
    s += "# " + c + "\n";
  }
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    s += (i ? "," : "") + table.columns[i];
  }
  s += "\n";
  char buf[32];
  for (const auto &r : table.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::snprintf(buf, sizeof buf, "%.17g", r[i]);
      if (i) {
        s += ',';
      }
      s += buf;
    }
    s += "\n";
  }
  return s;
}

int run(const SweepSpec &spec, std::ostream &out, std::ostream &err) {
  try {
    spec.validate();
    if (spec.command == Command::Selftest) {
      return run_selftest(spec.numerics, spec.quick, out);
    }
    const std::string csv = to_csv(build_table(spec, thread_count()));
    if (spec.output_path.empty() || spec.output_path == "-") {
      out << csv;
      out.flush();
      return 0;
    }
    const std::filesystem::path target(spec.output_path);
    std::filesystem::path tmp = target;
    tmp += ".partial";
    {
      std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
      if (!f) {
        err << "error: cannot write " << tmp.string() << "\n";
        return 2;
      }
      f << csv;
      f.close();
      if (!f) {
        std::error_code ec;
        std::filesystem::remove(tmp, ec);
        err << "error: failed writing " << target.string() << "\n";
        return 2;
      }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, target, ec);
    if (ec) {
      std::filesystem::remove(tmp, ec);
      err << "error: cannot move output into place at " << target.string() << "\n";
      return 2;
    }
    return 0;
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const PointError &e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }
}

} // namespace conicqed::cli
