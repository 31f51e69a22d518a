#pragma once

#include "ohsz/types.hpp"

namespace ohsz {

// Dense symmetric eigensolver: cyclic-by-row Jacobi rotations. Deliberately
// independent of any library decomposition so it can serve as a numerical
// cross-check for the closed-form spectrum; Eigen is used only for storage
// and elementary arithmetic.
struct EigenSystem {
  Eigen::VectorXd eigenvalues;   // ascending
  Eigen::MatrixXd eigenvectors;  // matching columns, orthonormal
  int sweeps;                    // full cyclic sweeps executed
};

// Converges when the off-diagonal Frobenius norm falls below tol * ||A||_F.
// Throws NotSymmetricError for inputs asymmetric beyond rounding and
// NoConvergenceError if 100 sweeps do not suffice.
EigenSystem jacobi_eigen(const Eigen::MatrixXd& m, double tol = 1e-14);

struct ResidualNorms {
  double defect;         // max_k || m v_k - lambda_k v_k ||_2
  double orthogonality;  // || V^T V - I ||_F
};

ResidualNorms residual_norms(const Eigen::MatrixXd& m, const EigenSystem& es);

}  // namespace ohsz
