#include "selftest.hpp"

#include "conicqed/conicqed.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <ostream>
#include <random>
#include <string>

namespace conicqed::cli {

namespace {

// Collects the largest deviation seen against a bound.
struct Worst {
  double value = 0.0;
  std::string where;

  void see(double deviation, const std::string &at) {
    if (!(deviation <= value)) {
      value = deviation;
      where = at;
    }
  }

  std::string verdict(double bound) const {
    char buf[160];
    std::snprintf(buf, sizeof buf, "max deviation %.3g (bound %.3g)%s%s", value, bound,
                  where.empty() ? "" : " at ", where.c_str());
    return value <= bound ? std::string() : std::string(buf);
  }
};

std::string at(double q, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "q=%g keg_rho=%g", q, x);
  return buf;
}

std::string at(double q, double x, double f) {
  char buf[80];
  std::snprintf(buf, sizeof buf, "q=%g keg_rho=%g omega_frac=%g", q, x, f);
  return buf;
}

using Check = std::function<std::string()>;

struct Entry {
  const char *name;
  bool derived;
  Check check;
};

std::vector<Entry> checks(const NumericsConfig &cfg) {
  const BesselConfig &bc = cfg.bessel;
  std::vector<Entry> list;

  list.push_back({"bessel-reflection", false, [&] {
                    for (int n = 0; n <= 10; ++n) {
                      for (double x : {0.3, 4.0, 17.0}) {
                        const double s = n % 2 == 0 ? 1.0 : -1.0;
                        if (bessel_j(-n, x, bc) != s * bessel_j(n, x, bc)) {
                          return "J_{-" + std::to_string(n) + "} mismatch";
                        }
                      }
                    }
                    return std::string();
                  }});

  list.push_back({"bessel-sum-identities", false, [&] {
                    Worst w;
                    for (double x : {0.5, 5.0, 12.5, 30.0}) {
                      const int big_m = static_cast<int>(x) + 40;
                      double sq = 0.0;
                      double cross = 0.0;
                      for (int m = -big_m; m <= big_m; ++m) {
                        const int a = std::abs(m);
                        const double j = bessel_j(a, x, bc);
                        sq += j * j;
                        cross += bessel_j(a + 1, x, bc) * bessel_j(a - 1, x, bc);
                      }
                      w.see(std::abs(sq - 1.0), "x=" + std::to_string(x));
                      w.see(std::abs(cross), "x=" + std::to_string(x));
                    }
                    return w.verdict(1e-10);
                  }});

  list.push_back({"m-sum-identities", false, [&] {
                    Worst w;
                    const SumReport sq = sum_symmetric_m(
                        [&](int m) {
                          const double j = bessel_j(m, 5.0, bc);
                          return j * j;
                        },
                        cfg.truncation);
                    w.see(std::abs(sq.value - 1.0), "squares");
                    return w.verdict(1e-10);
                  }});

  list.push_back({"free-space-recovery", false, [&] {
                    Worst w;
                    for (double x : {0.1, 1.0, 5.0, 20.0}) {
                      const PurcellFactors p = purcell_all(1.0, x, cfg);
                      for (double v : {p.p_z, p.p_rho, p.p_phi, p.p_iso}) {
                        w.see(std::abs(v - 1.0), at(1.0, x));
                      }
                    }
                    return w.verdict(1e-8);
                  }});

  list.push_back({"selection-rule", false, [&] {
                    Worst w;
                    for (double q : {1.5, 2.0, 2.5, 3.0}) {
                      const PurcellFactors p = purcell_all(q, 1e-6, cfg);
                      w.see(std::abs(p.p_z - q) / 1e-4, at(q, 1e-6));
                      w.see(p.p_rho / 1e-6, at(q, 1e-6));
                      w.see(p.p_phi / 1e-6, at(q, 1e-6));
                    }
                    return w.verdict(1.0);
                  }});

  list.push_back({"small-rho-asymptotics", false, [&] {
                    Worst w;
                    for (double q : {1.5, 2.5}) {
                      for (double x : {0.001, 0.01, 0.05}) {
                        const PurcellFactors p = purcell_all(q, x, cfg);
                        for (Orientation o : {Orientation::Z, Orientation::Rho, Orientation::Phi,
                                              Orientation::Isotropic}) {
                          w.see(std::abs(p.get(o) - small_rho_asymptotic(o, q, x)) / q, at(q, x));
                        }
                      }
                    }
                    return w.verdict(0.01);
                  }});

  list.push_back({"inverted-parabola", false, [&] {
                    Worst w;
                    for (double q : {1.5, 2.0, 3.0}) {
                      double prev = q;
                      for (int i = 1; i <= 10; ++i) {
                        const double x = 0.01 * i;
                        const double pz = purcell_factor(Orientation::Z, q, x, cfg);
                        if (!(pz < prev)) {
                          return "p_z not decreasing at " + at(q, x);
                        }
                        prev = pz;
                        const double parabola = q * (1.0 - 0.4 * x * x);
                        w.see(std::abs(pz - parabola) / parabola, at(q, x));
                      }
                    }
                    return w.verdict(0.01);
                  }});

  list.push_back({"large-q-asymptotics", false, [&] {
                    Worst w;
                    for (double x : {0.5, 1.0, 2.0, 3.0}) {
                      const double q = x + 5.0;
                      const PurcellFactors p = purcell_all(q, x, cfg);
                      for (Orientation o : {Orientation::Z, Orientation::Rho, Orientation::Phi}) {
                        w.see(std::abs(large_q_approx(o, q, x, cfg) - p.get(o)) / p.get(o),
                              at(q, x));
                      }
                    }
                    return w.verdict(1e-4);
                  }});

  list.push_back({"far-field-envelope", false, [&] {
                    Worst w;
                    for (double q : {1.5, 2.0, 3.0}) {
                      for (double x : {20.0, 27.5, 35.0, 42.5, 50.0}) {
                        const PurcellFactors p = purcell_all(q, x, cfg);
                        for (double v : {p.p_z, p.p_rho, p.p_phi}) {
                          w.see(std::abs(v - 1.0) * x, at(q, x));
                        }
                      }
                    }
                    return w.verdict(5.0);
                  }});

  list.push_back({"tpse-exchange-symmetry", false, [&] {
                    Worst w;
                    for (double q : {1.5, 2.5}) {
                      for (double x : {2.0, 4.0, 10.0}) {
                        for (int i = 1; i < 50; i += 4) {
                          const double f = i / 100.0;
                          w.see(std::abs(spectral_enhancement_ss(q, x, f, cfg) -
                                         spectral_enhancement_ss(q, x, 1.0 - f, cfg)),
                                at(q, x, f));
                        }
                      }
                    }
                    return w.verdict(1e-12);
                  }});

  list.push_back({"tpse-free-space", false, [&] {
                    Worst w;
                    for (double x : {0.5, 4.0}) {
                      for (double f : {0.1, 0.5}) {
                        w.see(std::abs(spectral_enhancement_ss(1.0, x, f, cfg) - 1.0),
                              at(1.0, x, f));
                      }
                    }
                    w.see(std::abs(total_rate_ratio(1.0, 3.0, cfg) - 1.0), "total rate");
                    return w.verdict(1e-8);
                  }});

  list.push_back({"tpse-small-distance-plateau", false, [&] {
                    Worst w;
                    for (double q : {1.5, 2.5}) {
                      for (int i = 1; i <= 9; ++i) {
                        const double f = 0.1 * i;
                        const double plateau = q * q / 3.0;
                        w.see(std::abs(spectral_enhancement_ss(q, 1e-4, f, cfg) - plateau) / plateau,
                              at(q, 1e-4, f));
                      }
                    }
                    return w.verdict(1e-3);
                  }});

  list.push_back({"tpse-q-squared-growth", false, [&] {
                    Worst w;
                    for (double q : {20.0, 40.0}) {
                      const double r = spectral_enhancement_ss(2.0 * q, 1.0, 0.3, cfg) /
                                       spectral_enhancement_ss(q, 1.0, 0.3, cfg);
                      w.see(std::abs(r / 4.0 - 1.0), at(q, 1.0, 0.3));
                    }
                    return w.verdict(0.02);
                  }});

  list.push_back({"tpse-general-vs-ss", false, [&] {
                    Worst w;
                    const LevelScheme s = LevelScheme::isotropic(1.0, 1.8, 1.0);
                    for (double f : {0.2, 0.5, 0.7}) {
                      w.see(std::abs(spectral_enhancement_general(2.5, 4.0, f, s, cfg) -
                                     spectral_enhancement_ss(2.5, 4.0, f, cfg)),
                            at(2.5, 4.0, f));
                    }
                    return w.verdict(1e-12);
                  }});

  list.push_back({"mode-helmholtz", false, [&] {
                    std::mt19937 rng(5);
                    std::uniform_real_distribution<double> u(0.0, 1.0);
                    Worst w;
                    for (int s = 0; s < 20; ++s) {
                      const double q = 1.0 + 3.0 * u(rng);
                      const ModeIndex mode{0.3 + 3.0 * u(rng), u(rng), static_cast<int>(u(rng) * 7) - 3,
                                           Polarization::TM};
                      const CylPosition pos{0.5 + 4.0 * u(rng), u(rng), 0.0};
                      const double scale = mode.k_perp * mode.k_perp;
                      w.see(helmholtz_residual(mode, pos, q) / scale, "sample " + std::to_string(s));
                    }
                    return w.verdict(1e-5);
                  }});

  list.push_back({"mode-coulomb-gauge", false, [&] {
                    std::mt19937 rng(9);
                    std::uniform_real_distribution<double> u(0.0, 1.0);
                    Worst w;
                    for (int s = 0; s < 20; ++s) {
                      const double q = 1.0 + 3.0 * u(rng);
                      const ModeIndex mode{0.3 + 2.0 * u(rng), -1.5 + 3.0 * u(rng),
                                           static_cast<int>(u(rng) * 7) - 3,
                                           u(rng) < 0.5 ? Polarization::TM : Polarization::TE};
                      const CylPosition pos{0.5 + 4.0 * u(rng), u(rng), 0.0};
                      const double k = mode.omega();
                      const double h = 1e-3 * std::min(1.0 / k, pos.rho / (1.0 + q * std::abs(mode.m)));
                      const double a = norm(mode_vector_potential(mode, pos, q));
                      w.see(std::abs(vector_potential_divergence(mode, pos, q, h)) / (k * a),
                            "sample " + std::to_string(s));
                    }
                    return w.verdict(1e-5);
                  }});

  list.push_back({"free-space-rate-hydrogen", false, [&] {
                    const double d = 0.7449 * si::e * si::a0;
                    const double rate = free_space_rate(d * d, 0.375 * 4.1341373335e16);
                    Worst w;
                    w.see(std::abs(rate / 6.27e8 - 1.0), "2p->1s");
                    return w.verdict(0.01);
                  }});

  list.push_back({"bessel-oracle", true, [&] {
                    Worst w;
                    for (int i = 0; i < 16; ++i) {
                      for (int k = 0; k < 16; ++k) {
                        const double nu = 50.0 * i / 15.0;
                        const double x = 50.0 * k / 15.0;
                        w.see(std::abs(bessel_j(nu, x, bc) - bessel_j_oracle(nu, x)),
                              "nu=" + std::to_string(nu) + " x=" + std::to_string(x));
                      }
                    }
                    return w.verdict(1e-10);
                  }});

  list.push_back({"purcell-reference-values", true, [&] {
                    Worst w;
                    const PurcellFactors a = purcell_all(1.5, 2.0, cfg);
                    w.see(std::abs(a.p_z - 0.85758116034813771), at(1.5, 2.0));
                    w.see(std::abs(a.p_rho - 1.0032071426764865), at(1.5, 2.0));
                    w.see(std::abs(a.p_phi - 1.1618963239108137), at(1.5, 2.0));
                    const PurcellFactors b = purcell_all(2.5, 4.0, cfg);
                    w.see(std::abs(b.p_z - 1.319199879418823), at(2.5, 4.0));
                    w.see(std::abs(b.p_rho - 1.0599726403492995), at(2.5, 4.0));
                    w.see(std::abs(b.p_phi - 0.71916473792242893), at(2.5, 4.0));
                    return w.verdict(1e-9);
                  }});

  list.push_back({"transverse-small-rho-coefficient", true, [&] {
                    Worst w;
                    const double q = 1.5;
                    const double x = 1e-3;
                    const double c = 3.0 * (q + 1.0) / (4.0 * (q + 0.5) * std::tgamma(2.0 * q));
                    const double scale = std::pow(x, 2.0 * (q - 1.0));
                    const double rho =
                        (purcell_factor(Orientation::Rho, q, x, cfg) / q - x * x / 20.0) / scale;
                    w.see(std::abs(rho / c - 1.0), at(q, x));
                    return w.verdict(5e-3);
                  }});

  return list;
}

} // namespace

std::vector<CheckResult> selftest(const NumericsConfig &cfg, bool quick) {
  std::vector<CheckResult> out;
  for (const auto &entry : checks(cfg)) {
    if (quick && entry.derived) {
      continue;
    }
    CheckResult r{entry.name, false, {}};
    try {
      r.detail = entry.check();
      r.passed = r.detail.empty();
    } catch (const std::exception &e) {
      r.detail = e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

int run_selftest(const NumericsConfig &cfg, bool quick, std::ostream &out) {
  int failed = 0;
  const auto results = selftest(cfg, quick);
  for (const auto &r : results) {
    out << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.passed) {
      out << ": " << r.detail;
      ++failed;
    }
    out << "\n";
  }
  out << results.size() - failed << "/" << results.size() << " checks passed\n";
  return failed == 0 ? 0 : 1;
}

} // namespace conicqed::cli
