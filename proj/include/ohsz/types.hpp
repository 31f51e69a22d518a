#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ohsz/constants.hpp"

namespace ohsz {

using Matrix8d = Eigen::Matrix<double, 8, 8>;
using Matrix8cd = Eigen::Matrix<std::complex<double>, 8, 8>;
using Vector8d = Eigen::Matrix<double, 8, 1>;
using Vector8cd = Eigen::Matrix<std::complex<double>, 8, 1>;
using Matrix2cd = Eigen::Matrix2cd;  // reduced doublet states
using Matrix4cd = Eigen::Matrix4cd;  // reduced rotor states

// ---------------------------------------------------------------------------
// input parameters

// Lambda-doublet molecular parameters of a 2-Pi-3/2 ground state.
struct MolecularParameters {
  double delta;  // doublet splitting [rad/s], > 0
  double mu_e;   // body-frame electric dipole moment [C m], > 0

  MolecularParameters(double delta_rad_per_s, double dipole_cm)
      : delta(delta_rad_per_s), mu_e(dipole_cm) {
    if (!(delta > 0.0)) throw std::invalid_argument("MolecularParameters: delta must be > 0");
    if (!(mu_e > 0.0)) throw std::invalid_argument("MolecularParameters: mu_e must be > 0");
  }

  // delta given as Delta/2pi in GHz, dipole in debye
  static MolecularParameters from_spectroscopic(double delta_ghz, double mu_e_debye) {
    constexpr double two_pi = 6.283185307179586476925286766559;
    return {two_pi * delta_ghz * 1e9, mu_e_debye * si::debye};
  }

  // OH X(2Pi-3/2): 1.667 GHz doublet splitting, 1.66 D dipole
  static MolecularParameters oh_ground_state() { return from_spectroscopic(1.667, 1.66); }
};

// One static field configuration: collinear-plane magnetic and electric
// fields with relative angle theta.
struct FieldPoint {
  double b;      // magnetic field magnitude [T], >= 0
  double e;      // electric field magnitude [V/m], >= 0
  double theta;  // angle between the two field directions [rad], in [0, pi]

  FieldPoint(double b_tesla, double e_volt_per_m, double theta_rad)
      : b(b_tesla), e(e_volt_per_m), theta(theta_rad) {
    if (!(b >= 0.0)) throw std::invalid_argument("FieldPoint: b must be >= 0");
    if (!(e >= 0.0)) throw std::invalid_argument("FieldPoint: e must be >= 0");
    if (!(theta >= 0.0 && theta <= 3.1415926535897932385))
      throw std::invalid_argument("FieldPoint: theta must lie in [0, pi]");
  }
};

// ---------------------------------------------------------------------------
// energy units

enum class EnergyUnit { joule, kelvin, gigahertz };

// Joules -> requested unit. Kelvin divides by k_B, gigahertz by 2*pi*hbar*1e9.
inline double convert_energy(double energy_joule, EnergyUnit to) {
  switch (to) {
    case EnergyUnit::joule:
      return energy_joule;
    case EnergyUnit::kelvin:
      return energy_joule / si::k_boltzmann;
    case EnergyUnit::gigahertz:
      return energy_joule / (2.0 * 3.1415926535897932385 * si::hbar * 1e9);
  }
  throw std::invalid_argument("convert_energy: unknown unit");
}

inline EnergyUnit parse_energy_unit(std::string_view s) {
  if (s == "J") return EnergyUnit::joule;
  if (s == "K") return EnergyUnit::kelvin;
  if (s == "GHz") return EnergyUnit::gigahertz;
  throw std::invalid_argument("unknown energy unit '" + std::string(s) + "' (expected J, K or GHz)");
}

inline std::string_view unit_name(EnergyUnit u) {
  switch (u) {
    case EnergyUnit::joule: return "J";
    case EnergyUnit::kelvin: return "K";
    case EnergyUnit::gigahertz: return "GHz";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// error taxonomy

// thrown by the iterative eigensolver on a non-symmetric input
struct NotSymmetricError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// thrown by the iterative eigensolver when the sweep cap is exhausted
struct NoConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// closed-form root extraction left an unexpectedly large imaginary residue
struct ImaginaryResidueError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// a squared-eigenvalue root came out negative beyond tolerance
struct NegativeRootError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// the two independent Hamiltonian constructions disagree
struct ConstructionMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// closed-form and iterative spectra disagree at a sweep point
struct MismatchAtPointError : std::runtime_error {
  double b;          // field value of the offending point [T]
  int index;         // eigenvalue index 0..7
  double deviation;  // relative deviation observed

  MismatchAtPointError(const std::string& what, double b_tesla, int idx, double dev)
      : std::runtime_error(what), b(b_tesla), index(idx), deviation(dev) {}
};

}  // namespace ohsz
