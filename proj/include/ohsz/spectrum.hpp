#pragma once

#include <array>

#include "ohsz/types.hpp"

namespace ohsz {

// Spectroscopic parity character of an adiabatic branch.
enum class Parity { e, f };

const char* parity_name(Parity p);

// Adiabatic branch label: twice the field-axis projection quantum number,
// plus the parity the branch connects to when the fields are switched off.
struct StateLabel {
  int two_m;  // +3, +1, -1, -3
  Parity parity;
  friend bool operator==(const StateLabel&, const StateLabel&) = default;
};

// Opposite-sign partners swap the projection sign *and* the parity: the
// (+1, e) branch mirrors (-1, f), never (-1, e). The `partner` map records
// that pairing per sorted index.
struct Spectrum {
  std::array<double, 8> eigenvalues;  // ascending [J]
  std::array<StateLabel, 8> labels;
  std::array<int, 8> partner;  // index holding the sign-mirrored eigenvalue
};

// Closed-form spectrum via the even characteristic polynomial and its nested
// radicals. Internals run in extended precision so the result stays accurate
// through level crossings and the doubly degenerate zero-magnetic-field
// structure.
Spectrum solve_spectrum(const MolecularParameters& p, const FieldPoint& f);

}  // namespace ohsz
