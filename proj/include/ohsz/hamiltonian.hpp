#pragma once

#include "ohsz/types.hpp"

namespace ohsz {

// 8x8 effective Hamiltonian of the lambda doublet in combined static fields,
// in the parity basis {|m, lower>, |m, upper>} with m = +3/2..-3/2 fastest:
// rows 1..4 are the lower doublet component, rows 5..8 the upper one.
// The magnetic field defines the z axis; the electric field lies in the
// xz plane at angle theta. Real symmetric, traceless, linear in both fields.
//
// Two deliberately independent constructions of the same operator:
//   build_hamiltonian      - entry-by-entry from the closed matrix elements
//   build_kronecker_form   - (doublet 2x2) x (spin-3/2 4x4) operator algebra,
//                            -hbar*Delta/2 sz(x)I - (4/5)muB*B I(x)Jz
//                            + (2/5)muE*E sx(x)(Jz cos(theta) - Jx sin(theta))
// They must agree entrywise to rounding; keep them independent so each one
// cross-checks the other.
Matrix8d build_hamiltonian(const MolecularParameters& p, const FieldPoint& f);
Matrix8d build_kronecker_form(const MolecularParameters& p, const FieldPoint& f);

}  // namespace ohsz
