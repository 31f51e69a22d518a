#include "ohsz/quartic.hpp"

#include <algorithm>
#include <sstream>

namespace ohsz {
namespace detail {
namespace {

template <class Real>
std::string fmt(const char* what, Real value, Real tol) {
  std::ostringstream os;
  os << what << ": residue " << static_cast<double>(value) << " exceeds tolerance "
     << static_cast<double>(tol);
  return os.str();
}

}  // namespace

template <class Real>
QuarticRootsT<Real> solve_quartic_impl(Real p0, Real p2, Real p4, Real p6, Real x_scale,
                                       Real coeff_eps, QuarticStructure structure) {
  using C = std::complex<Real>;
  QuarticRootsT<Real> out{};

  Real xs = x_scale;
  if (!(xs > 0)) {
    xs = std::max(std::max(std::abs(p6), std::sqrt(std::abs(p4))),
                  std::max(std::cbrt(std::abs(p2)),
                           std::sqrt(std::sqrt(std::abs(p0)))));
  }
  const Real imag_tol = Real(1e-9) * xs;
  const Real neg_tol = Real(1e-12) * xs;
  const Real snap = 64 * coeff_eps;

  auto settle = [&](const C& z) -> Real {
    if (std::abs(z.imag()) > imag_tol) {
      throw ImaginaryResidueError(fmt("quartic root left the real axis",
                                      std::abs(z.imag()), imag_tol));
    }
    Real re = z.real();
    if (re < 0) {
      if (re < -neg_tol) {
        throw NegativeRootError(fmt("quartic root in lambda^2 is negative", re, -neg_tol));
      }
      re = 0;
    }
    return re;
  };

  // Shift to the depressed form x = y - p6/4, i.e. y^4 + P y^2 + Q y + R.
  // The radical intermediates are invariants of that shift, and evaluating
  // them from P, Q, R instead of the raw coefficients avoids differences of
  // huge like-sized products, which otherwise swamp tightly clustered roots
  // (all four roots of a weak-field spectrum sit within ~1e-5 of each other).
  const Real P = p4 - 3 * p6 * p6 / 8;
  const Real Q = p2 - p4 * p6 / 2 + p6 * p6 * p6 / 8;
  const Real R = p0 - p2 * p6 / 4 + p4 * p6 * p6 / 16 - 3 * p6 * p6 * p6 * p6 / 256;
  // Coefficient-noise magnitudes of P, Q, R: the inputs arrive rounded, so
  // each carries an absolute uncertainty of coeff_eps times these.
  const Real mp_ = std::max(std::abs(p4), 3 * p6 * p6 / 8);
  const Real mq_ = std::max({std::abs(p2), std::abs(p4 * p6) / 2,
                             std::abs(p6 * p6 * p6) / 8});
  const Real mr_ = std::max({std::abs(p0), std::abs(p2 * p6) / 4,
                             std::abs(p4 * p6 * p6) / 16,
                             3 * p6 * p6 * p6 * p6 / 256});

  // Both invariants vanish only for a triple/quadruple root.
  out.h1 = C(2 * P * P * P + 27 * Q * Q - 72 * P * R);
  out.h2 = C(P * P + 12 * R);
  // Worst-case magnitude of the computed h1/h2 given that input noise; the
  // snap bands below compare against coeff_eps times these.
  const Real h1_mag = 2 * std::abs(P * P * P) + 27 * Q * Q + 72 * std::abs(P * R) +
                      6 * P * P * mp_ + 54 * std::abs(Q) * mq_ +
                      72 * (std::abs(R) * mp_ + std::abs(P) * mr_);
  const Real h2_mag = P * P + 12 * std::abs(R) + 2 * std::abs(P) * mp_ + 12 * mr_;

  const Real quarter = -p6 / 4;
  auto quadruple_matches = [&]() {
    const Real q2 = quarter * quarter;
    return std::abs(p4 - 6 * q2) <= snap * std::max(std::abs(p4), 6 * q2) &&
           std::abs(p2 + 4 * q2 * quarter) <=
               snap * std::max(std::abs(p2), std::abs(4 * q2 * quarter)) &&
           std::abs(p0 - q2 * q2) <= snap * std::max(std::abs(p0), q2 * q2);
  };

  auto emit_quadruple = [&]() {
    out.h3 = C(0);
    out.g1 = out.g2 = out.g3 = C(0);
    const Real x = settle(C(quarter));
    out.x = {x, x, x, x};
    return out;
  };

  auto emit_paired = [&]() {
    // Perfect square (x^2 + beta x + gamma)^2 solved as a stable quadratic.
    if (p0 < -snap * xs * xs * xs * xs) {
      throw NegativeRootError(fmt("paired roots need a non-negative constant term", p0,
                                  -snap * xs * xs * xs * xs));
    }
    const Real gamma = std::sqrt(std::max<Real>(p0, 0));
    const Real beta = p6 / 2;
    Real disc = beta * beta - 4 * gamma;
    if (disc < 0) {
      const Real band = snap * std::max(beta * beta, 4 * gamma);
      if (disc < -band) {
        throw NegativeRootError(fmt("paired-root discriminant is negative", disc, -band));
      }
      disc = 0;
    }
    const Real sd = std::sqrt(disc);
    const Real q = -(beta + (beta < 0 ? -sd : sd)) / 2;
    const Real other = (q != 0) ? gamma / q : Real(0);
    const C hi(std::max(q, other));
    const C lo(std::min(q, other));
    const Real x_hi = settle(hi);
    const Real x_lo = settle(lo);
    out.h3 = C(0);
    out.g1 = C((x_hi - x_lo) * (x_hi - x_lo));
    out.g2 = out.g3 = C(0);
    out.x = {x_hi, x_hi, x_lo, x_lo};
    return out;
  };

  switch (structure) {
    case QuarticStructure::quadruple_root:
      return emit_quadruple();
    case QuarticStructure::paired_roots:
      return emit_paired();
    case QuarticStructure::detect: {
      if (std::abs(out.h1) <= snap * h1_mag && std::abs(out.h2) <= snap * h2_mag &&
          quadruple_matches()) {
        return emit_quadruple();
      }
      if (p0 >= 0) {
        const Real gamma = std::sqrt(p0);
        const Real beta = p6 / 2;
        const Real r2 = p2 - p6 * gamma;
        const Real r4 = p4 - (beta * beta + 2 * gamma);
        const Real m2 = std::max(std::abs(p2), std::abs(p6 * gamma));
        const Real m4 = std::max(std::abs(p4), std::max(beta * beta, 2 * gamma));
        if (std::abs(r2) <= snap * m2 && std::abs(r4) <= snap * m4) {
          return emit_paired();
        }
      }
      break;
    }
    case QuarticStructure::generic:
      // True 0/0 protection only: a quadruple root within coefficient noise
      // cannot be pushed through the radicals at all.
      if (std::abs(out.h1) <= snap * h1_mag && std::abs(out.h2) <= snap * h2_mag &&
          quadruple_matches()) {
        return emit_quadruple();
      }
      break;
  }

  // General radical solution.
  const C disc = out.h1 * out.h1 - Real(4) * out.h2 * out.h2 * out.h2;
  const C sq = std::sqrt(disc);
  const C cand_a = out.h1 + sq;
  const C cand_b = out.h1 - sq;
  const C big = (std::abs(cand_a) >= std::abs(cand_b)) ? cand_a : cand_b;
  out.h3 = std::pow(big, Real(1) / 3);

  const Real cbrt2 = std::cbrt(Real(2));
  C g1 = C(-2 * P / 3);  // == -2 p4/3 + p6^2/4 under the depressing shift
  C g2 = C(-4 * P / 3);  // == -4 p4/3 + p6^2/2
  if (std::abs(out.h3) > 0) {
    const C shift = cbrt2 * out.h2 / (Real(3) * out.h3) + out.h3 / (Real(3) * cbrt2);
    g1 += shift;
    g2 -= shift;
  }
  if (std::abs(g1.imag()) > Real(1e-9) * std::max(xs * xs, std::abs(g1))) {
    throw ImaginaryResidueError(fmt("resolvent radical left the real axis",
                                    std::abs(g1.imag()),
                                    Real(1e-9) * std::max(xs * xs, std::abs(g1))));
  }
  Real g1_re = g1.real();
  if (g1_re < 0) {
    if (g1_re < -Real(1e-12) * xs * xs) {
      throw NegativeRootError(fmt("resolvent radical is negative", g1_re,
                                  -Real(1e-12) * xs * xs));
    }
    g1_re = 0;
  }
  const Real sg1 = std::sqrt(g1_re);

  // -8 p2 + 4 p4 p6 - p6^3 == -8 Q, so g3 = -8Q / (4 sqrt(g1)).
  Real g3 = 0;
  if (sg1 > 0) {
    g3 = -2 * Q / sg1;
  } else {
    if (std::abs(Q) > snap * mq_) {
      throw ImaginaryResidueError(fmt("resolvent degeneracy with non-vanishing numerator",
                                      std::abs(Q), snap * mq_));
    }
  }
  out.g1 = C(g1_re);
  out.g2 = g2;
  out.g3 = C(g3);

  // Inner radicands: clamp negatives within coefficient noise so that exact
  // double roots do not pick up spurious imaginary parts. Genuine splittings
  // always have non-negative radicands, so the clamp cannot destroy structure.
  const Real rad_band = 1024 * coeff_eps * std::max(std::abs(g2), std::abs(g3));
  auto inner_sqrt = [&](C rad) -> C {
    if (std::abs(rad.imag()) <= rad_band && rad.real() < 0 && rad.real() >= -rad_band) {
      rad = C(0);
    }
    return std::sqrt(rad);
  };

  const C base(quarter);
  const C half_sg1(sg1 / 2);
  const C sp = inner_sqrt(g2 + C(g3)) / Real(2);
  const C sm = inner_sqrt(g2 - C(g3)) / Real(2);
  out.x = {settle(base + half_sg1 + sp), settle(base + half_sg1 - sp),
           settle(base - half_sg1 + sm), settle(base - half_sg1 - sm)};
  return out;
}

template QuarticRootsT<double> solve_quartic_impl<double>(double, double, double, double,
                                                          double, double, QuarticStructure);
template QuarticRootsT<long double> solve_quartic_impl<long double>(
    long double, long double, long double, long double, long double, long double,
    QuarticStructure);

}  // namespace detail

QuarticRoots solve_quartic_in_lambda_sq(double p0, double p2, double p4, double p6,
                                        double x_scale_hint, QuarticStructure structure) {
  const auto r = detail::solve_quartic_impl<long double>(
      p0, p2, p4, p6, static_cast<long double>(x_scale_hint),
      std::numeric_limits<double>::epsilon(), structure);
  QuarticRoots out;
  for (int i = 0; i < 4; ++i) out.lambda_sq[i] = static_cast<double>(r.x[i]);
  auto narrow = [](const std::complex<long double>& z) {
    return std::complex<double>(static_cast<double>(z.real()),
                                static_cast<double>(z.imag()));
  };
  out.intermediates = {narrow(r.h1), narrow(r.h2), narrow(r.h3),
                       narrow(r.g1), narrow(r.g2), narrow(r.g3)};
  return out;
}

}  // namespace ohsz
