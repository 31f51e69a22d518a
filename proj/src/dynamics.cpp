#include "ohsz/dynamics.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <unsupported/Eigen/KroneckerProduct>

#include "ohsz/constants.hpp"
#include "ohsz/hamiltonian.hpp"
#include "ohsz/jacobi.hpp"
#include "ohsz/operators.hpp"

namespace ohsz {

using namespace std::complex_literals;

Matrix8cd propagator(const Matrix8d& h, double t) {
  const EigenSystem es = jacobi_eigen(h);
  Eigen::Vector<std::complex<double>, 8> phases;
  for (int k = 0; k < 8; ++k) {
    phases(k) = std::polar(1.0, -es.eigenvalues(k) * t / si::hbar);
  }
  const Matrix8cd vc = es.eigenvectors.cast<std::complex<double>>();
  return vc * phases.asDiagonal() * vc.transpose();
}

Matrix8cd propagator(const MolecularParameters& p, const FieldPoint& f, double t) {
  return propagator(build_hamiltonian(p, f), t);
}

namespace {

void require_density_matrix(const Matrix8cd& rho) {
  const double herm = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
  const double trace_err = std::abs(rho.trace() - 1.0);
  if (herm > 1e-12 || trace_err > 1e-12) {
    std::ostringstream os;
    os << "partial trace: input is not a unit-trace Hermitian state (hermiticity "
       << herm << ", |trace - 1| " << trace_err << ")";
    throw std::invalid_argument(os.str());
  }
}

}  // namespace

Matrix2cd partial_trace_rotor(const Matrix8cd& rho) {
  require_density_matrix(rho);
  Matrix2cd out = Matrix2cd::Zero();
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      for (int j = 0; j < 4; ++j) {
        out(a, b) += rho(4 * a + j, 4 * b + j);
      }
    }
  }
  return out;
}

Matrix4cd partial_trace_doublet(const Matrix8cd& rho) {
  require_density_matrix(rho);
  Matrix4cd out = Matrix4cd::Zero();
  for (int j = 0; j < 4; ++j) {
    for (int k = 0; k < 4; ++k) {
      for (int a = 0; a < 2; ++a) {
        out(j, k) += rho(4 * a + j, 4 * a + k);
      }
    }
  }
  return out;
}

Matrix8cd pseudo_spin_flip() {
  const Eigen::Matrix2cd half_turn = detail::expm_series<std::complex<double>, 2>(
      (-0.5i * std::numbers::pi) * pauli_x().cast<std::complex<double>>());
  return Eigen::kroneckerProduct(half_turn, Eigen::Matrix4cd::Identity());
}

}  // namespace ohsz
