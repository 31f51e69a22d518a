#include "ohsz/charpoly.hpp"

#include <stdexcept>

#include "ohsz/constants.hpp"

namespace ohsz {

ScaledVariables scale_variables(const MolecularParameters& p, const FieldPoint& f) {
  return ScaledVariables{4.0 * si::mu_bohr * f.b, 2.0 * p.mu_e * f.e,
                         5.0 * si::hbar * p.delta, f.theta};
}

EvenCoefficients even_coefficients(const ScaledVariables& s) {
  return even_coefficients(s, s.d_t / 5.0);
}

EvenCoefficients even_coefficients(const ScaledVariables& s, double scale) {
  if (!(scale > 0.0)) {
    throw std::invalid_argument("even_coefficients: scale must be positive");
  }
  // Evaluate in extended precision: the coefficients suffer heavy cancellation
  // near b_t = e_t, and double-precision rounding here would dominate the
  // error budget of the closed-form eigenvalues.
  const long double sc = scale;
  const auto c = detail::even_coefficients_impl<long double>(
      static_cast<long double>(s.b_t) / sc, static_cast<long double>(s.e_t) / sc,
      static_cast<long double>(s.d_t) / sc, static_cast<long double>(s.theta));
  EvenCoefficients out;
  out.p0 = static_cast<double>(c.p0);
  out.p2 = static_cast<double>(c.p2);
  out.p4 = static_cast<double>(c.p4);
  out.p6 = static_cast<double>(c.p6);
  out.scale = scale;
  return out;
}

Eigen::VectorXd charpoly_oracle(const Eigen::MatrixXd& m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols() || n == 0) {
    throw std::invalid_argument("charpoly_oracle: matrix must be square and non-empty");
  }
  Eigen::VectorXd c(n + 1);
  c(n) = 1.0;
  Eigen::MatrixXd mk = Eigen::MatrixXd::Identity(n, n);  // M_1
  c(n - 1) = -m.trace();
  for (Eigen::Index k = 2; k <= n; ++k) {
    mk = m * mk + c(n - k + 1) * Eigen::MatrixXd::Identity(n, n);
    c(n - k) = -(m * mk).trace() / static_cast<double>(k);
  }
  return c;
}

}  // namespace ohsz
