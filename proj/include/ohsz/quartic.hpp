#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <limits>

#include "ohsz/types.hpp"

namespace ohsz {

// Root multiplicity structure of the quartic in x = lambda^2.
//
// At zero magnetic field every level is exactly doubly degenerate and the
// quartic is a perfect square; with both fields off it collapses to a single
// quadruple root. Those cases sit on the edge of what the radical formulas
// can resolve (0/0 in the nested radicals), so callers that know the field
// configuration pass the structure explicitly instead of relying on numeric
// detection: the degenerate pairs split *linearly* in the magnetic field, and
// a detection threshold loose enough to be robust would collapse genuinely
// resolvable splittings.
enum class QuarticStructure {
  detect,          // infer from the coefficients (coefficient-precision snap)
  generic,         // use the radical formulas unconditionally
  paired_roots,    // perfect square: two doubly degenerate roots
  quadruple_root,  // single root of multiplicity four
};

// Intermediates of the closed-form solution, kept for inspection/tests.
// Special-structure paths report their limiting values (g2 = g3 = 0, etc.).
struct QuarticIntermediates {
  std::complex<double> h1, h2, h3;
  std::complex<double> g1, g2, g3;
};

// Roots of x^4 + p6 x^3 + p4 x^2 + p2 x + p0 with x = lambda^2, in the fixed
// branch order of the radical formula:
//   x[0] = -p6/4 + sqrt(g1)/2 + sqrt(g2 + g3)/2
//   x[1] = -p6/4 + sqrt(g1)/2 - sqrt(g2 + g3)/2
//   x[2] = -p6/4 - sqrt(g1)/2 + sqrt(g2 - g3)/2
//   x[3] = -p6/4 - sqrt(g1)/2 - sqrt(g2 - g3)/2
// This order carries the state labels; see spectrum.hpp.
struct QuarticRoots {
  std::array<double, 4> lambda_sq;
  QuarticIntermediates intermediates;
};

namespace detail {

template <class Real>
struct QuarticRootsT {
  std::array<Real, 4> x;
  std::complex<Real> h1, h2, h3, g1, g2, g3;
};

// coeff_eps: relative precision of the *input coefficients* (not of Real).
// Residue and degeneracy tolerances must live at that noise floor: plain
// double coefficients blur exact multiple-root structure to ~1e-16, while
// coefficients computed in extended precision keep a correspondingly tighter
// floor. x_scale: typical magnitude of x, for the residue tolerances.
template <class Real>
QuarticRootsT<Real> solve_quartic_impl(Real p0, Real p2, Real p4, Real p6, Real x_scale,
                                       Real coeff_eps, QuarticStructure structure);

extern template QuarticRootsT<double> solve_quartic_impl<double>(
    double, double, double, double, double, double, QuarticStructure);
extern template QuarticRootsT<long double> solve_quartic_impl<long double>(
    long double, long double, long double, long double, long double, long double,
    QuarticStructure);

}  // namespace detail

// Double-precision front end (evaluates internally in extended precision).
// x_scale_hint: typical magnitude of x = lambda^2 for the residue tolerances;
// pass <= 0 to derive a proxy from the coefficients. Throws
// ImaginaryResidueError / NegativeRootError when the radicals stray further
// from the real-root manifold than coefficient rounding explains.
QuarticRoots solve_quartic_in_lambda_sq(double p0, double p2, double p4, double p6,
                                        double x_scale_hint = 0.0,
                                        QuarticStructure structure = QuarticStructure::detect);

}  // namespace ohsz
