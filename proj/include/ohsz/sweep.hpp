#pragma once

#include <array>
#include <iosfwd>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "ohsz/spectrum.hpp"
#include "ohsz/types.hpp"

namespace ohsz {

struct SweepConfig {
  MolecularParameters params = MolecularParameters::oh_ground_state();
  double b_start = 0.0;  // [T]
  double b_stop = 0.5;   // [T]
  int b_steps = 501;
  double e = 2e5;                                    // [V/m] (2 kV/cm)
  double theta = std::numbers::pi_v<double> / 2.0;   // [rad]
  EnergyUnit unit = EnergyUnit::kelvin;
  bool track_branches = false;
};

struct SweepRecord {
  double b;                           // [T]
  std::array<double, 8> eigenvalues;  // ascending, in SweepConfig::unit
  std::array<int, 8> branches;        // adiabatic branch ids 1..8 (if tracked)
};

struct SweepResult {
  SweepConfig config;
  std::vector<SweepRecord> records;
  std::vector<std::string> warnings;
};

// Magnetic-field sweep of the spectrum. Every grid point is solved both in
// closed form and iteratively; a disagreement beyond 1e-9 of the spectral
// scale throws MismatchAtPointError. With track_branches, eigenvector
// overlaps connect adiabatic branches between neighbouring grid points
// (branch id = 1-based eigenvalue position at the first point); a branch
// whose identity cannot be followed confidently adds a "RefineGrid" warning.
SweepResult run_sweep(const SweepConfig& config);

// CSV with header b_tesla,e_vpm,theta_rad,ev1..ev8[,branch1..branch8].
// Values are printed with %.17g so doubles round-trip bit-exactly.
void write_csv(std::ostream& os, const SweepResult& result);

// JSON array of per-point records: {"b": ..., "eigenvalues": [...],
// "branches": [...] when tracked}.
void write_json(std::ostream& os, const SweepResult& result);

// Parse a stream produced by write_csv. Field values round-trip bit-exactly.
// The energy unit is not encoded in the file and is left at the default.
SweepResult read_csv(std::istream& is);

// Single-point diagnostic bundle.
struct PointReport {
  FieldPoint field;
  Spectrum analytic;                // [J]
  std::array<double, 8> iterative;  // Jacobi eigenvalues, ascending [J]
  double max_deviation;             // max |analytic - iterative| / spectral scale
  double chiral_residual;           // ||{H, C}||_F / ||H||_F
  int jacobi_sweeps;
  // Closed collinear-geometry form, available when sin(theta) ~ 0.
  std::optional<std::array<double, 8>> collinear_closed_form;
};

PointReport eigen_point(const MolecularParameters& p, const FieldPoint& f);

void print_report(std::ostream& os, const PointReport& report, EnergyUnit unit);

}  // namespace ohsz
