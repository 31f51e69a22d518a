#include "ohsz/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ohsz {

EigenSystem jacobi_eigen(const Eigen::MatrixXd& m, double tol) {
  const Eigen::Index n = m.rows();
  if (n != m.cols() || n == 0) {
    throw std::invalid_argument("jacobi_eigen: matrix must be square and non-empty");
  }
  const double scale = m.cwiseAbs().maxCoeff();
  const double asym = (m - m.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-13 * scale) {
    std::ostringstream os;
    os << "jacobi_eigen: input is not symmetric (max |a_ij - a_ji| = " << asym
       << ", largest entry " << scale << ")";
    throw NotSymmetricError(os.str());
  }

  // Work on the rescaled symmetric part; sub-tolerance asymmetry is folded.
  Eigen::MatrixXd a = (scale > 0.0)
                          ? Eigen::MatrixXd((m + m.transpose()) / (2.0 * scale))
                          : Eigen::MatrixXd::Zero(n, n);
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  const double norm_f = a.norm();

  constexpr int max_sweeps = 100;
  int sweeps_used = -1;
  for (int sweep = 0; sweep <= max_sweeps; ++sweep) {
    // Accumulate the off-diagonal norm entry by entry: subtracting the
    // diagonal from the total squared norm cancels catastrophically once the
    // matrix is nearly diagonal and would mask convergence.
    double off2 = 0.0;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        off2 += 2.0 * a(p, q) * a(p, q);
      }
    }
    const double off = std::sqrt(off2);
    if (off <= tol * norm_f) {
      sweeps_used = sweep;
      break;
    }
    if (sweep == max_sweeps) break;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(tau) > 1e153) {
          t = 1.0 / (2.0 * tau);  // avoid overflow in tau*tau
        } else {
          t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // A <- G^T A G with G the (p,q) Givens rotation: first the column
        // pass A <- A G, then the row pass A <- G^T A.
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  if (sweeps_used < 0) {
    std::ostringstream os;
    os << "jacobi_eigen: no convergence within " << max_sweeps << " sweeps (tol " << tol
       << ")";
    throw NoConvergenceError(os.str());
  }

  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(),
                   [&a](int i, int j) { return a(i, i) < a(j, j); });

  EigenSystem out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    out.eigenvalues(j) = a(idx[static_cast<std::size_t>(j)], idx[static_cast<std::size_t>(j)]) * scale;
    out.eigenvectors.col(j) = v.col(idx[static_cast<std::size_t>(j)]);
  }
  out.sweeps = sweeps_used;
  return out;
}

ResidualNorms residual_norms(const Eigen::MatrixXd& m, const EigenSystem& es) {
  ResidualNorms out{0.0, 0.0};
  for (Eigen::Index k = 0; k < es.eigenvalues.size(); ++k) {
    const double d =
        (m * es.eigenvectors.col(k) - es.eigenvalues(k) * es.eigenvectors.col(k)).norm();
    out.defect = std::max(out.defect, d);
  }
  const Eigen::Index n = es.eigenvectors.cols();
  out.orthogonality = (es.eigenvectors.transpose() * es.eigenvectors -
                       Eigen::MatrixXd::Identity(n, n))
                          .norm();
  return out;
}

}  // namespace ohsz
