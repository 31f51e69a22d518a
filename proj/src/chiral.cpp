#include "ohsz/chiral.hpp"

#include <complex>
#include <numbers>

#include <unsupported/Eigen/KroneckerProduct>

#include "ohsz/operators.hpp"

namespace ohsz {

using namespace std::complex_literals;

Matrix8d chiral_signature() {
  Matrix8d r = Matrix8d::Zero();
  for (int k = 0; k < 8; ++k) {
    r(k, 7 - k) = (k % 2 == 0) ? 1.0 : -1.0;
  }
  return r;
}

Matrix8cd build_chiral_operator() {
  return 1.0i * chiral_signature().cast<std::complex<double>>();
}

Matrix8cd build_chiral_operator_exponential() {
  const Eigen::Matrix2cd half_turn_doublet = detail::expm_series<std::complex<double>, 2>(
      (-0.5i * std::numbers::pi) * pauli_x().cast<std::complex<double>>());
  const Eigen::Matrix4cd half_turn_rotor = detail::expm_series<std::complex<double>, 4>(
      (-1.0i * std::numbers::pi) * spin_jy());
  return Eigen::kroneckerProduct(half_turn_doublet, half_turn_rotor);
}

Vector8cd pair_eigenvector(const Vector8d& v) {
  return 1.0i * (chiral_signature() * v).cast<std::complex<double>>();
}

double kron_anticommutator_identity_residual(const Eigen::Matrix2cd& m1,
                                             const Eigen::Matrix4cd& m2,
                                             const Eigen::Matrix2cd& m3,
                                             const Eigen::Matrix4cd& m4) {
  const Matrix8cd k13 = Eigen::kroneckerProduct(m1, m2).eval();
  const Matrix8cd k24 = Eigen::kroneckerProduct(m3, m4).eval();
  const Matrix8cd lhs = anticommutator(k13, k24);
  const Matrix8cd rhs =
      0.5 * (Eigen::kroneckerProduct(commutator(m1, m3), commutator(m2, m4)).eval() +
             Eigen::kroneckerProduct(anticommutator(m1, m3), anticommutator(m2, m4)).eval());
  return (lhs - rhs).norm();
}

}  // namespace ohsz
