#pragma once

#include "ohsz/types.hpp"

namespace ohsz {

// Real antisymmetric kernel R of the chirality operator C = i R:
// alternating +1/-1 down the antidiagonal, R^T = -R, R^2 = -I.
// Conjugation with R leaves the Hamiltonian invariant (R H R = H), which is
// the real-arithmetic face of {H, C} = 0 and forces the spectrum to be
// symmetric about zero.
Matrix8d chiral_signature();

// Closed form C = i R: Hermitian, unitary, involutive (C^2 = I, det C = +1).
Matrix8cd build_chiral_operator();

// Independent construction as simultaneous half-turns of both factors,
// exp(-i pi sx/2) (x) exp(-i pi jy), each exponential summed as a series.
Matrix8cd build_chiral_operator_exponential();

// Map an eigenvector of H to an eigenvector of the mirrored eigenvalue:
// H (C v) = -lambda (C v) whenever H v = lambda v.
Vector8cd pair_eigenvector(const Vector8d& v);

template <class DerivedA, class DerivedB>
auto anticommutator(const Eigen::MatrixBase<DerivedA>& a,
                    const Eigen::MatrixBase<DerivedB>& b) {
  return (a * b + b * a).eval();
}

template <class DerivedA, class DerivedB>
auto commutator(const Eigen::MatrixBase<DerivedA>& a,
                const Eigen::MatrixBase<DerivedB>& b) {
  return (a * b - b * a).eval();
}

// Frobenius deviation of {m1 (x) m2, m3 (x) m4} from
// ([m1,m3] (x) [m2,m4] + {m1,m3} (x) {m2,m4}) / 2 -- the factorization that
// reduces the anticommutation of H with C to checks on 2x2 and 4x4 blocks.
double kron_anticommutator_identity_residual(const Eigen::Matrix2cd& m1,
                                             const Eigen::Matrix4cd& m2,
                                             const Eigen::Matrix2cd& m3,
                                             const Eigen::Matrix4cd& m4);

}  // namespace ohsz
