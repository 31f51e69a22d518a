#pragma once

#include "ohsz/types.hpp"

namespace ohsz {

// Pauli matrices and spin-3/2 angular momentum matrices in the |j,m> basis
// ordered m = +3/2, +1/2, -1/2, -3/2 (so jz is diagonal, descending).
// All spin matrices are returned in units of hbar; the y components are the
// only complex-valued ones and get their own complex return type.

Eigen::Matrix2d pauli_x();
Eigen::Matrix2cd pauli_y();
Eigen::Matrix2d pauli_z();

Eigen::Matrix4d spin_jx();
Eigen::Matrix4cd spin_jy();
Eigen::Matrix4d spin_jz();

namespace detail {

// Plain Taylor-series matrix exponential. Adequate for the small
// anti-Hermitian arguments used here (norms of a few); no scaling/squaring.
template <typename Scalar, int N>
Eigen::Matrix<Scalar, N, N> expm_series(const Eigen::Matrix<Scalar, N, N>& a) {
  using M = Eigen::Matrix<Scalar, N, N>;
  M sum = M::Identity();
  M term = M::Identity();
  for (int k = 1; k < 64; ++k) {
    term = (term * a / Scalar(k)).eval();
    sum += term;
    if (term.norm() < 1e-20 * sum.norm()) break;
  }
  return sum;
}

}  // namespace detail

}  // namespace ohsz
