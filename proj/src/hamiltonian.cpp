#include "ohsz/hamiltonian.hpp"

#include <unsupported/Eigen/KroneckerProduct>

#include <cmath>

#include "ohsz/operators.hpp"

namespace ohsz {

Matrix8d build_hamiltonian(const MolecularParameters& p, const FieldPoint& f) {
  const double a = 0.5 * si::hbar * p.delta;        // half doublet splitting
  const double zb = si::mu_bohr * f.b;              // Zeeman scale
  const double c = p.mu_e * f.e * std::cos(f.theta);
  const double s = p.mu_e * f.e * std::sin(f.theta);
  const double rt3 = std::sqrt(3.0);

  Matrix8d h = Matrix8d::Zero();

  // diagonal: -a on the lower doublet, +a on the upper, each with the
  // m-dependent Zeeman ladder (-6/5, -2/5, +2/5, +6/5) * muB * B
  const double z32 = (6.0 / 5.0) * zb;
  const double z12 = (2.0 / 5.0) * zb;
  h(0, 0) = -a - z32;
  h(1, 1) = -a - z12;
  h(2, 2) = -a + z12;
  h(3, 3) = -a + z32;
  h(4, 4) = a - z32;
  h(5, 5) = a - z12;
  h(6, 6) = a + z12;
  h(7, 7) = a + z32;

  // Stark couplings between the doublet components; co-aligned field parts
  // go with cos(theta), transverse parts with sin(theta)
  const double c32 = (3.0 / 5.0) * c;
  const double c12 = (1.0 / 5.0) * c;
  const double s1 = (rt3 / 5.0) * s;
  const double s2 = (2.0 / 5.0) * s;

  h(0, 4) = h(4, 0) = c32;
  h(0, 5) = h(5, 0) = -s1;
  h(1, 4) = h(4, 1) = -s1;
  h(1, 5) = h(5, 1) = c12;
  h(1, 6) = h(6, 1) = -s2;
  h(2, 5) = h(5, 2) = -s2;
  h(2, 6) = h(6, 2) = -c12;
  h(2, 7) = h(7, 2) = -s1;
  h(3, 6) = h(6, 3) = -s1;
  h(3, 7) = h(7, 3) = -c32;

  return h;
}

Matrix8d build_kronecker_form(const MolecularParameters& p, const FieldPoint& f) {
  const Eigen::Matrix2d sx = pauli_x();
  const Eigen::Matrix2d sz = pauli_z();
  const Eigen::Matrix4d jx = spin_jx();  // units of hbar
  const Eigen::Matrix4d jz = spin_jz();
  const Eigen::Matrix2d i2 = Eigen::Matrix2d::Identity();
  const Eigen::Matrix4d i4 = Eigen::Matrix4d::Identity();

  // spin matrices carry 1/hbar, so only hbar*Delta appears explicitly
  const Eigen::Matrix4d tilt = jz * std::cos(f.theta) - jx * std::sin(f.theta);

  Matrix8d h = -0.5 * si::hbar * p.delta * Eigen::kroneckerProduct(sz, i4)
               - 0.8 * si::mu_bohr * f.b * Eigen::kroneckerProduct(i2, jz)
               + 0.4 * p.mu_e * f.e * Eigen::kroneckerProduct(sx, tilt);
  return h;
}

}  // namespace ohsz
