// Command-line front end: field sweeps, single-point reports, two-spin time
// evolution, and the self-verification battery.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ohsz/constants.hpp"
#include "ohsz/dynamics.hpp"
#include "ohsz/hamiltonian.hpp"
#include "ohsz/sweep.hpp"
#include "ohsz/types.hpp"
#include "ohsz/verify.hpp"

namespace {

using ohsz::EnergyUnit;

struct CommonOptions {
  double e_kvcm = 2.0;
  double theta_deg = 90.0;
  double delta_ghz = 1.667;
  double mu_e_debye = 1.66;
  std::string unit = "K";
  std::string format = "csv";
  std::string out;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_format) {
  cmd->add_option("--e-kvcm", opt.e_kvcm, "electric field [kV/cm]")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  cmd->add_option("--theta-deg", opt.theta_deg, "angle between the fields [degrees]")
      ->check(CLI::Range(0.0, 180.0))
      ->capture_default_str();
  cmd->add_option("--delta-ghz", opt.delta_ghz, "doublet splitting Delta/2pi [GHz]")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--mu-e-debye", opt.mu_e_debye, "electric dipole moment [debye]")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd->add_option("--unit", opt.unit, "energy unit for the output")
      ->check(CLI::IsMember({"J", "K", "GHz"}))
      ->capture_default_str();
  if (with_format) {
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", opt.out, "output path (default: stdout)");
  }
}

ohsz::MolecularParameters params_of(const CommonOptions& opt) {
  return ohsz::MolecularParameters::from_spectroscopic(opt.delta_ghz, opt.mu_e_debye);
}

double theta_rad(const CommonOptions& opt) {
  return opt.theta_deg / 180.0 * std::numbers::pi;
}

double e_si(const CommonOptions& opt) { return opt.e_kvcm * 1e5; }  // kV/cm -> V/m

// Stream sink: file when a path is given, stdout otherwise.
int with_sink(const std::string& path, const std::function<void(std::ostream&)>& fn) {
  if (path.empty()) {
    fn(std::cout);
    return 0;
  }
  std::ofstream os(path);
  if (!os) {
    std::cerr << "error: cannot open '" << path << "' for writing\n";
    return 1;
  }
  fn(os);
  return 0;
}

std::string g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int run_verify(std::uint64_t seed, int samples) {
  const ohsz::VerifyReport report = ohsz::verify_all({seed, samples, nullptr});
  std::size_t width = 0;
  for (const auto& c : report.checks) width = std::max(width, c.name.size());
  for (const auto& c : report.checks) {
    std::ostringstream row;
    row << (c.pass ? "PASS  " : "FAIL  ") << c.name;
    row << std::string(width + 2 - c.name.size(), ' ');
    char nums[96];
    std::snprintf(nums, sizeof nums, "residual %9.3e  (tolerance %.0e)", c.residual,
                  c.threshold);
    row << nums;
    if (!c.note.empty()) row << "  [" << c.note << "]";
    std::cout << row.str() << "\n";
  }
  const int failures = static_cast<int>(
      std::count_if(report.checks.begin(), report.checks.end(),
                    [](const ohsz::CheckResult& c) { return !c.pass; }));
  std::printf("\n%zu checks, %d failed, %d field samples, %.3f s\n", report.checks.size(),
              failures, report.samples, report.seconds);
  return report.all_pass() ? 0 : 1;
}

struct EvolveRow {
  double t;
  std::array<double, 8> populations;
  double purity_doublet;
  double purity_rotor;
  double energy;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Stark-Zeeman spectra and dynamics of a 2-Pi-3/2 lambda doublet"};
  app.require_subcommand(1);

  // ---- sweep ----
  CLI::App* sweep = app.add_subcommand("sweep", "magnetic-field sweep of the spectrum");
  CommonOptions sweep_opt;
  double b_start = 0.0, b_stop = 0.5;
  int b_steps = 501;
  bool track = false;
  sweep->add_option("--b-start", b_start, "first magnetic field value [T]")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  sweep->add_option("--b-stop", b_stop, "last magnetic field value [T]")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  sweep->add_option("--b-steps", b_steps, "number of grid points")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sweep->add_flag("--track-branches", track, "follow adiabatic branches by eigenvector overlap");
  add_common(sweep, sweep_opt, true);

  // ---- eigen ----
  CLI::App* eigen = app.add_subcommand("eigen", "single-point spectrum report");
  CommonOptions eigen_opt;
  double b_tesla = 0.1;
  eigen->add_option("--b-tesla", b_tesla, "magnetic field [T]")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  add_common(eigen, eigen_opt, false);

  // ---- evolve ----
  CLI::App* evolve = app.add_subcommand("evolve", "unitary time evolution of a pure state");
  CommonOptions evolve_opt;
  double evolve_b = 0.1;
  double t_ns = 1.2;
  int steps = 241;
  std::string state = "1+5";
  evolve->add_option("--b-tesla", evolve_b, "magnetic field [T]")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  evolve->add_option("--t-ns", t_ns, "total evolution time [ns]")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  evolve->add_option("--steps", steps, "number of output samples")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  evolve->add_option("--state", state,
                     "initial state: basis index 1..8, or i+j for an equal superposition")
      ->capture_default_str();
  add_common(evolve, evolve_opt, true);

  // ---- verify ----
  CLI::App* verify = app.add_subcommand("verify", "run the self-check battery");
  std::uint64_t seed = 42;
  int samples = 1000;
  verify->add_option("--seed", seed, "random seed")->capture_default_str();
  verify->add_option("--samples", samples, "number of random field samples")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // prints help, exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage error
  }

  try {
    if (sweep->parsed()) {
      ohsz::SweepConfig config{params_of(sweep_opt), b_start,
                               b_stop,               b_steps,
                               e_si(sweep_opt),      theta_rad(sweep_opt),
                               ohsz::parse_energy_unit(sweep_opt.unit),
                               track};
      if (config.b_stop < config.b_start) {
        std::cerr << "error: --b-stop must be >= --b-start\n";
        return 2;
      }
      const ohsz::SweepResult result = ohsz::run_sweep(config);
      for (const std::string& w : result.warnings) std::cerr << "warning: " << w << "\n";
      return with_sink(sweep_opt.out, [&](std::ostream& os) {
        if (sweep_opt.format == "json") {
          ohsz::write_json(os, result);
        } else {
          ohsz::write_csv(os, result);
        }
      });
    }

    if (eigen->parsed()) {
      const ohsz::FieldPoint f{b_tesla, e_si(eigen_opt), theta_rad(eigen_opt)};
      const ohsz::PointReport report = ohsz::eigen_point(params_of(eigen_opt), f);
      ohsz::print_report(std::cout, report, ohsz::parse_energy_unit(eigen_opt.unit));
      return 0;
    }

    if (evolve->parsed()) {
      const ohsz::MolecularParameters p = params_of(evolve_opt);
      const ohsz::FieldPoint f{evolve_b, e_si(evolve_opt), theta_rad(evolve_opt)};
      const EnergyUnit unit = ohsz::parse_energy_unit(evolve_opt.unit);

      ohsz::Vector8cd psi = ohsz::Vector8cd::Zero();
      {
        int i = 0, j = 0;
        char plus = 0;
        std::istringstream ss(state);
        if (ss >> i && i >= 1 && i <= 8) {
          if (ss >> plus) {
            if (plus != '+' || !(ss >> j) || j < 1 || j > 8 || !(ss >> std::ws).eof()) {
              std::cerr << "error: --state expects an index 1..8 or i+j\n";
              return 2;
            }
            psi(i - 1) = std::complex<double>(std::numbers::sqrt2 / 2.0, 0.0);
            psi(j - 1) += std::complex<double>(std::numbers::sqrt2 / 2.0, 0.0);
            if (i == j) psi.normalize();
          } else {
            psi(i - 1) = 1.0;
          }
        } else {
          std::cerr << "error: --state expects an index 1..8 or i+j\n";
          return 2;
        }
      }

      const ohsz::Matrix8d h = ohsz::build_hamiltonian(p, f);
      std::vector<EvolveRow> rows;
      rows.reserve(static_cast<std::size_t>(steps));
      for (int k = 0; k < steps; ++k) {
        const double t =
            (steps == 1) ? 0.0 : t_ns * 1e-9 * static_cast<double>(k) / (steps - 1);
        const ohsz::Matrix8cd u = ohsz::propagator(h, t);
        const ohsz::Vector8cd psit = u * psi;
        const ohsz::Matrix8cd rho = psit * psit.adjoint();
        const ohsz::Matrix2cd rho2 = ohsz::partial_trace_rotor(rho);
        const ohsz::Matrix4cd rho4 = ohsz::partial_trace_doublet(rho);
        EvolveRow row;
        row.t = t;
        for (int m = 0; m < 8; ++m) row.populations[static_cast<std::size_t>(m)] = std::norm(psit(m));
        row.purity_doublet = (rho2 * rho2).trace().real();
        row.purity_rotor = (rho4 * rho4).trace().real();
        row.energy = ohsz::convert_energy(
            (psit.adjoint() * (h.cast<std::complex<double>>() * psit)).value().real(), unit);
        rows.push_back(row);
      }

      return with_sink(evolve_opt.out, [&](std::ostream& os) {
        if (evolve_opt.format == "json") {
          nlohmann::json arr = nlohmann::json::array();
          for (const EvolveRow& row : rows) {
            nlohmann::json obj;
            obj["t_s"] = row.t;
            obj["populations"] = row.populations;
            obj["purity_doublet"] = row.purity_doublet;
            obj["purity_rotor"] = row.purity_rotor;
            obj["energy"] = row.energy;
            arr.push_back(std::move(obj));
          }
          os << arr.dump(2) << "\n";
        } else {
          os << "t_s";
          for (int m = 1; m <= 8; ++m) os << ",pop" << m;
          os << ",purity_doublet,purity_rotor,energy\n";
          for (const EvolveRow& row : rows) {
            os << g17(row.t);
            for (double v : row.populations) os << ',' << g17(v);
            os << ',' << g17(row.purity_doublet) << ',' << g17(row.purity_rotor) << ','
               << g17(row.energy) << "\n";
          }
        }
      });
    }

    if (verify->parsed()) {
      return run_verify(seed, samples);
    }
  } catch (const std::invalid_argument& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  } catch (const std::exception& ex) {
    std::cerr << "verification failure: " << ex.what() << "\n";
    return 1;
  }
  return 0;
}
