#include "ohsz/operators.hpp"

#include <cmath>

namespace ohsz {

namespace {
const double rt3 = std::sqrt(3.0);
}

Eigen::Matrix2d pauli_x() {
  Eigen::Matrix2d m;
  m << 0, 1,
       1, 0;
  return m;
}

Eigen::Matrix2cd pauli_y() {
  using namespace std::complex_literals;
  Eigen::Matrix2cd m;
  m << 0, -1i,
       1i, 0;
  return m;
}

Eigen::Matrix2d pauli_z() {
  Eigen::Matrix2d m;
  m << 1, 0,
       0, -1;
  return m;
}

Eigen::Matrix4d spin_jx() {
  Eigen::Matrix4d m;
  m << 0, rt3, 0, 0,
       rt3, 0, 2, 0,
       0, 2, 0, rt3,
       0, 0, rt3, 0;
  return 0.5 * m;
}

Eigen::Matrix4cd spin_jy() {
  using namespace std::complex_literals;
  Eigen::Matrix4cd m;
  m << 0, -rt3 * 1i, 0, 0,
       rt3 * 1i, 0, -2i, 0,
       0, 2i, 0, -rt3 * 1i,
       0, 0, rt3 * 1i, 0;
  return 0.5 * m;
}

Eigen::Matrix4d spin_jz() {
  Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
  m.diagonal() << 1.5, 0.5, -0.5, -1.5;
  return m;
}

}  // namespace ohsz
