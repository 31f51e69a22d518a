#include "ohsz/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ohsz/chiral.hpp"
#include "ohsz/constants.hpp"
#include "ohsz/hamiltonian.hpp"
#include "ohsz/jacobi.hpp"

namespace ohsz {

namespace {

double spectral_scale(const MolecularParameters& p, const FieldPoint& f) {
  return std::max({5.0 * si::hbar * p.delta, 4.0 * si::mu_bohr * f.b, 2.0 * p.mu_e * f.e});
}

std::string g17(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Greedy maximum-overlap assignment between the eigenvector columns of two
// neighbouring grid points. Confidence of a match is measured against the
// whole near-degenerate subspace of the previous point, so exact degeneracies
// (whose internal basis is arbitrary) do not raise false alarms.
struct BranchTracker {
  bool primed = false;
  Eigen::MatrixXd prev_vectors;
  Eigen::VectorXd prev_values;
  std::array<int, 8> prev_branches{};

  std::array<int, 8> feed(const EigenSystem& es, double degeneracy_band, double b,
                          std::vector<std::string>& warnings) {
    std::array<int, 8> branches{};
    if (!primed) {
      for (int k = 0; k < 8; ++k) branches[k] = k + 1;
    } else {
      const Eigen::Matrix<double, 8, 8> overlap =
          (prev_vectors.transpose() * es.eigenvectors).cwiseAbs();
      std::array<bool, 8> row_used{}, col_used{};
      for (int pick = 0; pick < 8; ++pick) {
        int bi = -1, bj = -1;
        double best = -1.0;
        for (int i = 0; i < 8; ++i) {
          if (row_used[i]) continue;
          for (int j = 0; j < 8; ++j) {
            if (col_used[j]) continue;
            if (overlap(i, j) > best) {
              best = overlap(i, j);
              bi = i;
              bj = j;
            }
          }
        }
        row_used[bi] = col_used[bj] = true;
        branches[bj] = prev_branches[bi];
        double subspace_sq = 0.0;
        for (int i = 0; i < 8; ++i) {
          if (std::abs(prev_values(i) - prev_values(bi)) <= degeneracy_band) {
            subspace_sq += overlap(i, bj) * overlap(i, bj);
          }
        }
        if (std::sqrt(subspace_sq) < 0.9) {
          std::ostringstream os;
          os << "RefineGrid: branch " << prev_branches[bi] << " followed with overlap "
             << std::sqrt(subspace_sq) << " at b = " << g17(b)
             << " T; the grid is too coarse to track it reliably";
          warnings.push_back(os.str());
        }
      }
    }
    primed = true;
    prev_vectors = es.eigenvectors;
    prev_values = es.eigenvalues;
    prev_branches = branches;
    return branches;
  }
};

}  // namespace

SweepResult run_sweep(const SweepConfig& config) {
  if (config.b_steps < 1) {
    throw std::invalid_argument("run_sweep: b_steps must be >= 1");
  }
  if (!(config.b_stop >= config.b_start)) {
    throw std::invalid_argument("run_sweep: b_stop must be >= b_start");
  }

  SweepResult result;
  result.config = config;
  result.records.reserve(static_cast<std::size_t>(config.b_steps));
  BranchTracker tracker;

  for (int i = 0; i < config.b_steps; ++i) {
    double b = config.b_start;
    if (config.b_steps > 1) {
      b = (i == config.b_steps - 1)
              ? config.b_stop
              : config.b_start + (config.b_stop - config.b_start) * i /
                                     (config.b_steps - 1);
    }
    const FieldPoint f{b, config.e, config.theta};
    const Spectrum analytic = solve_spectrum(config.params, f);
    const Matrix8d h = build_hamiltonian(config.params, f);
    const EigenSystem iterative = jacobi_eigen(h);

    const double scale = spectral_scale(config.params, f);
    for (int k = 0; k < 8; ++k) {
      const double dev = std::abs(analytic.eigenvalues[k] - iterative.eigenvalues(k)) / scale;
      if (dev > 1e-9) {
        std::ostringstream os;
        os << "run_sweep: closed-form and iterative eigenvalue " << k + 1
           << " disagree at b = " << g17(b) << " T (relative deviation " << dev << ")";
        throw MismatchAtPointError(os.str(), b, k, dev);
      }
    }

    SweepRecord rec;
    rec.b = b;
    for (int k = 0; k < 8; ++k) {
      rec.eigenvalues[k] = convert_energy(analytic.eigenvalues[k], config.unit);
    }
    if (config.track_branches) {
      rec.branches = tracker.feed(iterative, 1e-9 * scale, b, result.warnings);
    } else {
      for (int k = 0; k < 8; ++k) rec.branches[k] = k + 1;
    }
    result.records.push_back(rec);
  }
  return result;
}

void write_csv(std::ostream& os, const SweepResult& result) {
  os << "b_tesla,e_vpm,theta_rad";
  for (int k = 1; k <= 8; ++k) os << ",ev" << k;
  if (result.config.track_branches) {
    for (int k = 1; k <= 8; ++k) os << ",branch" << k;
  }
  os << "\n";
  for (const SweepRecord& rec : result.records) {
    os << g17(rec.b) << ',' << g17(result.config.e) << ',' << g17(result.config.theta);
    for (double v : rec.eigenvalues) os << ',' << g17(v);
    if (result.config.track_branches) {
      for (int id : rec.branches) os << ',' << id;
    }
    os << "\n";
  }
}

void write_json(std::ostream& os, const SweepResult& result) {
  nlohmann::json arr = nlohmann::json::array();
  for (const SweepRecord& rec : result.records) {
    nlohmann::json obj;
    obj["b"] = rec.b;
    obj["e"] = result.config.e;
    obj["theta"] = result.config.theta;
    obj["eigenvalues"] = rec.eigenvalues;
    if (result.config.track_branches) {
      obj["branches"] = rec.branches;
    }
    arr.push_back(std::move(obj));
  }
  os << arr.dump(2) << "\n";
}

SweepResult read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) {
    throw std::invalid_argument("read_csv: empty input");
  }
  const bool has_branches = line.find(",branch1") != std::string::npos;
  if (line.rfind("b_tesla,e_vpm,theta_rad,ev1", 0) != 0) {
    throw std::invalid_argument("read_csv: unrecognized header: " + line);
  }

  SweepResult result;
  result.config.track_branches = has_branches;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    const std::size_t expected = has_branches ? 19 : 11;
    if (cells.size() != expected) {
      throw std::invalid_argument("read_csv: malformed row: " + line);
    }
    SweepRecord rec;
    rec.b = std::stod(cells[0]);
    result.config.e = std::stod(cells[1]);
    result.config.theta = std::stod(cells[2]);
    for (int k = 0; k < 8; ++k) {
      rec.eigenvalues[static_cast<std::size_t>(k)] = std::stod(cells[3 + static_cast<std::size_t>(k)]);
    }
    for (int k = 0; k < 8; ++k) {
      rec.branches[static_cast<std::size_t>(k)] =
          has_branches ? std::stoi(cells[11 + static_cast<std::size_t>(k)]) : k + 1;
    }
    result.records.push_back(rec);
  }
  if (!result.records.empty()) {
    result.config.b_start = result.records.front().b;
    result.config.b_stop = result.records.back().b;
    result.config.b_steps = static_cast<int>(result.records.size());
  }
  return result;
}

PointReport eigen_point(const MolecularParameters& p, const FieldPoint& f) {
  const Matrix8d h = build_hamiltonian(p, f);
  const EigenSystem es = jacobi_eigen(h);
  const double scale = spectral_scale(p, f);

  PointReport rep{f, solve_spectrum(p, f), {}, 0.0, 0.0, es.sweeps, std::nullopt};
  for (int k = 0; k < 8; ++k) {
    rep.iterative[k] = es.eigenvalues(k);
    rep.max_deviation = std::max(
        rep.max_deviation, std::abs(rep.analytic.eigenvalues[k] - es.eigenvalues(k)) / scale);
  }
  // {H, C} with C = i R has the same Frobenius norm as {H, R}.
  rep.chiral_residual = anticommutator(h, chiral_signature()).norm() / h.norm();

  if (std::abs(std::sin(f.theta)) < 1e-9) {
    // Collinear fields: each |m| block closes, lambda = -(4/5) muB B m
    // +- sqrt((hbar Delta / 2)^2 + ((2/5) muE E m)^2).
    std::array<double, 8> vals;
    int idx = 0;
    for (double m : {1.5, 0.5, -0.5, -1.5}) {
      const double zeeman = -0.8 * si::mu_bohr * f.b * m;
      const double stark = 0.4 * p.mu_e * f.e * m;
      const double gap = std::hypot(0.5 * si::hbar * p.delta, stark);
      vals[idx++] = zeeman + gap;
      vals[idx++] = zeeman - gap;
    }
    std::sort(vals.begin(), vals.end());
    rep.collinear_closed_form = vals;
  }
  return rep;
}

void print_report(std::ostream& os, const PointReport& report, EnergyUnit unit) {
  os << "field point: B = " << report.field.b << " T, E = " << report.field.e
     << " V/m, theta = " << report.field.theta << " rad\n";
  os << "energies in " << unit_name(unit) << "\n\n";
  os << "  #  branch      closed form           iterative            |diff|\n";
  for (int k = 0; k < 8; ++k) {
    const StateLabel lab = report.analytic.labels[k];
    char label[16];
    std::snprintf(label, sizeof label, "m=%+d/2 %s", lab.two_m, parity_name(lab.parity));
    const double a = convert_energy(report.analytic.eigenvalues[k], unit);
    const double j = convert_energy(report.iterative[k], unit);
    char row[160];
    std::snprintf(row, sizeof row, "  %d  %-10s %+.15e %+.15e %.3e\n", k + 1, label, a, j,
                  std::abs(a - j));
    os << row;
  }
  os << "\nmax deviation (relative to spectral scale): " << report.max_deviation << "\n";
  os << "chiral anticommutation residual:            " << report.chiral_residual << "\n";
  os << "iterative solver sweeps:                    " << report.jacobi_sweeps << "\n";
  if (report.collinear_closed_form) {
    os << "collinear-geometry closed form (" << unit_name(unit) << "):";
    for (double v : *report.collinear_closed_form) {
      os << ' ' << convert_energy(v, unit);
    }
    os << "\n";
  }
}

}  // namespace ohsz
