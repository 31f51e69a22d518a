#include <complex>
#include <numbers>

#include <doctest.h>

#include "ohsz/operators.hpp"

using namespace ohsz;
using std::complex;

namespace {
const complex<double> I{0.0, 1.0};
}

TEST_CASE("pauli matrices: hermiticity, involution, su(2) algebra") {
  const Eigen::Matrix2cd sx = pauli_x().cast<complex<double>>();
  const Eigen::Matrix2cd sy = pauli_y();
  const Eigen::Matrix2cd sz = pauli_z().cast<complex<double>>();
  const Eigen::Matrix2cd id = Eigen::Matrix2cd::Identity();

  CHECK((sx - sx.adjoint()).norm() == 0.0);
  CHECK((sy - sy.adjoint()).norm() == 0.0);
  CHECK((sz - sz.adjoint()).norm() == 0.0);

  CHECK((sx * sx - id).norm() == 0.0);
  CHECK((sy * sy - id).norm() == 0.0);
  CHECK((sz * sz - id).norm() == 0.0);

  CHECK((sx * sy - sy * sx - 2.0 * I * sz).norm() == 0.0);
  CHECK((sy * sz - sz * sy - 2.0 * I * sx).norm() == 0.0);
  CHECK((sz * sx - sx * sz - 2.0 * I * sy).norm() == 0.0);

  // distinct Pauli matrices anticommute
  CHECK((sx * sy + sy * sx).norm() == 0.0);
  CHECK((sy * sz + sz * sy).norm() == 0.0);
  CHECK((sz * sx + sx * sz).norm() == 0.0);

  CHECK(pauli_z()(0, 0) == 1.0);  // m = +1/2 first
  CHECK(pauli_z()(1, 1) == -1.0);
}

TEST_CASE("spin-3/2 matrices: algebra, basis order, casimir") {
  const Eigen::Matrix4cd jx = spin_jx().cast<complex<double>>();
  const Eigen::Matrix4cd jy = spin_jy();
  const Eigen::Matrix4cd jz = spin_jz().cast<complex<double>>();

  CHECK((jx - jx.adjoint()).norm() == 0.0);
  CHECK((jy - jy.adjoint()).norm() == 0.0);
  CHECK((jz - jz.adjoint()).norm() == 0.0);

  // jz diagonal, m descending from +3/2
  CHECK(spin_jz()(0, 0) == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(spin_jz()(1, 1) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(spin_jz()(2, 2) == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(spin_jz()(3, 3) == doctest::Approx(-1.5).epsilon(1e-14));

  CHECK((jx * jy - jy * jx - I * jz).norm() < 1e-15);
  CHECK((jy * jz - jz * jy - I * jx).norm() < 1e-15);
  CHECK((jz * jx - jx * jz - I * jy).norm() < 1e-15);

  // casimir j(j+1) = 15/4
  const Eigen::Matrix4cd j2 = jx * jx + jy * jy + jz * jz;
  CHECK((j2 - 3.75 * Eigen::Matrix4cd::Identity()).norm() < 1e-14);

  // raising structure: <m|jx|m'> nonzero only for |m - m'| = 1
  CHECK(spin_jx()(0, 0) == 0.0);
  CHECK(spin_jx()(0, 2) == 0.0);
  CHECK(spin_jx()(0, 3) == 0.0);
  CHECK(spin_jx()(0, 1) == doctest::Approx(std::sqrt(3.0) / 2.0).epsilon(1e-14));
  CHECK(spin_jx()(1, 2) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("series exponential reproduces closed forms") {
  using detail::expm_series;

  const Eigen::Matrix2cd zero2 = Eigen::Matrix2cd::Zero();
  CHECK((expm_series<complex<double>, 2>(zero2) - Eigen::Matrix2cd::Identity()).norm() == 0.0);

  // exp(-i pi sx / 2) = -i sx
  const Eigen::Matrix2cd sx = pauli_x().cast<complex<double>>();
  const Eigen::Matrix2cd half_turn =
      expm_series<complex<double>, 2>((-0.5 * I * std::numbers::pi) * sx);
  CHECK((half_turn - (-I) * sx).norm() < 1e-14);

  // exp(a) exp(-a) = 1 for a random-ish anti-hermitian argument
  Eigen::Matrix4cd a;
  a.setZero();
  a(0, 1) = complex<double>(0.3, 0.7);
  a(1, 0) = -std::conj(a(0, 1));
  a(2, 3) = complex<double>(-1.1, 0.2);
  a(3, 2) = -std::conj(a(2, 3));
  a(0, 3) = complex<double>(0.0, 0.5);
  a(3, 0) = -std::conj(a(0, 3));
  const Eigen::Matrix4cd u = expm_series<complex<double>, 4>(a);
  const Eigen::Matrix4cd v = expm_series<complex<double>, 4>((-a).eval());
  CHECK((u * v - Eigen::Matrix4cd::Identity()).norm() < 1e-14);
  CHECK((u * u.adjoint() - Eigen::Matrix4cd::Identity()).norm() < 1e-14);
}
