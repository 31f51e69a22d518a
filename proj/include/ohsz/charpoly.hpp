#pragma once

#include <cmath>

#include "ohsz/types.hpp"

namespace ohsz {

// The characteristic polynomial of the doublet Hamiltonian is even in the
// eigenvalue, so det(H - x*I) = x^8 + p6 x^6 + p4 x^4 + p2 x^2 + p0 once the
// field strengths are folded into the scaled energies
//   b_t = 4 muB B,   e_t = 2 muE E,   d_t = 5 hbar Delta.
struct ScaledVariables {
  double b_t;    // scaled magnetic energy [J]
  double e_t;    // scaled electric energy [J]
  double d_t;    // scaled doublet splitting [J]
  double theta;  // field angle [rad]
};

ScaledVariables scale_variables(const MolecularParameters& p, const FieldPoint& f);

// Coefficients of the quartic in x = (lambda/scale)^2. Everything is
// evaluated in a dimensionless energy unit: eighth powers of joule-scale
// energies underflow double precision, so `scale` (joules per unit of
// lambda) is part of the value.
struct EvenCoefficients {
  double p0, p2, p4, p6;
  double scale;
};

namespace detail {

template <class Real>
struct EvenCoefficientsT {
  Real p0, p2, p4, p6;
};

// Closed-form even coefficients in the dimensionless variables
// b = b_t/scale, e = e_t/scale, d = d_t/scale.
template <class Real>
EvenCoefficientsT<Real> even_coefficients_impl(Real b, Real e, Real d, Real theta) {
  const Real b2 = b * b, e2 = e * e, d2 = d * d;
  const Real b4 = b2 * b2, e4 = e2 * e2, d4 = d2 * d2;
  const Real b6 = b4 * b2, e6 = e4 * e2, d6 = d4 * d2;
  const Real b8 = b4 * b4, e8 = e4 * e4, d8 = d4 * d4;
  const Real c2 = std::cos(2 * theta);
  const Real c4 = std::cos(4 * theta);

  EvenCoefficientsT<Real> out;
  out.p0 = (81 * b8 + 324 * b4 * e4 + 81 * e8
            - 180 * b6 * d2 + 756 * b4 * e2 * d2 - 756 * b2 * e4 * d2 + 180 * e6 * d2
            + 118 * b4 * d4 - 264 * b2 * e2 * d4 + 118 * e4 * d4
            - 20 * b2 * d6 + 20 * e2 * d6 + d8
            - 4 * b2 * e2 * (81 * b4 + 81 * e4 + 54 * b2 * d2 - 54 * e2 * d2 - 7 * d4) * c2
            + 162 * b4 * e4 * c4)
           / Real(100000000);
  out.p2 = (-9 * b6 - 9 * e6 - d6 / 5
            - Real(59) / 5 * e4 * d2 - 3 * e2 * d4
            - 9 * b4 * e2 - Real(23) / 5 * b4 * d2 - 9 * b2 * e4
            + b2 * d4 + Real(48) / 5 * b2 * e2 * d2
            + 2 * b2 * e2 * (9 * b2 + 9 * e2 + Real(17) / 5 * d2) * c2)
           / Real(50000);
  out.p4 = (59 * b4 + 36 * b2 * e2 + 10 * b2 * d2 - 82 * b2 * e2 * c2
            + 59 * e4 + 30 * e2 * d2 + 3 * d4)
           / Real(5000);
  out.p6 = -(b2 + e2 + d2 / 5) / 5;
  return out;
}

}  // namespace detail

// Defaults to scale = d_t/5 = hbar*Delta (always positive).
EvenCoefficients even_coefficients(const ScaledVariables& s);
EvenCoefficients even_coefficients(const ScaledVariables& s, double scale);

// Independent Faddeev-LeVerrier trace recurrence: coefficients c[0..n] of the
// monic characteristic polynomial det(x*I - m) = sum_k c[k] x^k, c[n] = 1.
// For even n this equals det(m - x*I), the convention used above. Ground
// truth for the closed forms; keep free of any eigen-decomposition.
Eigen::VectorXd charpoly_oracle(const Eigen::MatrixXd& m);

}  // namespace ohsz
