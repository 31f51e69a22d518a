#pragma once

#include "ohsz/types.hpp"

namespace ohsz {

// Time-evolution operator U(t) = exp(-i H t / hbar), built from the real
// orthogonal eigendecomposition of the (symmetric) Hamiltonian.
Matrix8cd propagator(const Matrix8d& h, double t);
Matrix8cd propagator(const MolecularParameters& p, const FieldPoint& f, double t);

// Reduced density matrices of the two factors of the composite basis
// (doublet index a in {0,1}, rotor index j in {0..3}; row index 4a + j).
// The input must be Hermitian with unit trace within 1e-12.
Matrix2cd partial_trace_rotor(const Matrix8cd& rho);    // 2x2 doublet state
Matrix4cd partial_trace_doublet(const Matrix8cd& rho);  // 4x4 rotor state

// Half-turn of the doublet pseudo-spin: exp(-i pi sx / 2) (x) I4. Conjugation
// with it flips the sign of the doublet inversion sz (x) I4 while leaving the
// rotor projection untouched.
Matrix8cd pseudo_spin_flip();

}  // namespace ohsz
