#pragma once

// Physical constants, CODATA-2018 exact/recommended values.
// All energies in this library are joules; fields in tesla and volt/metre.

namespace ohsz::si {

inline constexpr double hbar = 1.054571817e-34;       // reduced Planck constant [J s]
inline constexpr double mu_bohr = 9.2740100783e-24;   // Bohr magneton [J/T]
inline constexpr double debye = 3.33564095e-30;       // 1 debye [C m]
inline constexpr double k_boltzmann = 1.380649e-23;   // Boltzmann constant [J/K]

}  // namespace ohsz::si
