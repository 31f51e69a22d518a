#include <cmath>
#include <complex>
#include <numbers>

#include <doctest.h>
#include <unsupported/Eigen/KroneckerProduct>

#include "ohsz/constants.hpp"
#include "ohsz/dynamics.hpp"
#include "ohsz/hamiltonian.hpp"
#include "ohsz/operators.hpp"
#include "test_util.hpp"

using namespace ohsz;
using std::complex;

namespace {

const MolecularParameters kOH = MolecularParameters::oh_ground_state();

Vector8cd random_state(testutil::Rng& rng) {
  Vector8cd psi;
  for (int k = 0; k < 8; ++k) {
    const double re = rng.uniform(-1.0, 1.0);
    const double im = rng.uniform(-1.0, 1.0);
    psi(k) = complex<double>(re, im);
  }
  psi.normalize();
  return psi;
}

}  // namespace

TEST_CASE("propagator: identity at t = 0, unitary, composes over time") {
  testutil::Rng rng(71);
  const FieldPoint f{0.23, 4e5, 1.0};
  const Matrix8d h = build_hamiltonian(kOH, f);

  CHECK((propagator(h, 0.0) - Matrix8cd::Identity()).norm() < 1e-14);

  const double t1 = 0.4e-9, t2 = 1.1e-9;
  const Matrix8cd u1 = propagator(h, t1);
  const Matrix8cd u2 = propagator(h, t2);
  const Matrix8cd u12 = propagator(h, t1 + t2);
  CHECK((u1 * u1.adjoint() - Matrix8cd::Identity()).norm() <= 1e-12);
  CHECK((u1 * u2 - u12).norm() <= 1e-12);

  // overload taking the field point directly
  const Matrix8cd u1b = propagator(kOH, f, t1);
  CHECK((u1 - u1b).norm() <= 1e-13);

  // energy and norm conservation along a trajectory
  const Vector8cd psi0 = random_state(rng);
  const complex<double> e0 = psi0.dot(h.cast<complex<double>>() * psi0);
  for (double t : {0.1e-9, 0.7e-9, 2.3e-9}) {
    const Vector8cd psit = propagator(h, t) * psi0;
    CHECK(std::abs(psit.norm() - 1.0) <= 1e-12);
    const complex<double> et = psit.dot(h.cast<complex<double>>() * psit);
    CHECK(std::abs(et - e0) <= 1e-12 * h.norm());
  }
}

TEST_CASE("zero-field parity oscillation has period 2 pi / Delta") {
  const Matrix8d h = build_hamiltonian(kOH, FieldPoint{0.0, 0.0, 0.0});
  Vector8cd psi0 = Vector8cd::Zero();
  psi0(0) = psi0(4) = std::numbers::sqrt2 / 2.0;

  const Matrix8cd sx8 =
      Eigen::kroneckerProduct(pauli_x(), Eigen::Matrix4d::Identity()).eval().cast<complex<double>>();

  auto sx_expect = [&](double t) {
    const Vector8cd psit = propagator(h, t) * psi0;
    return psit.dot(sx8 * psit).real();
  };

  const double period = 2.0 * std::numbers::pi / kOH.delta;
  CHECK(sx_expect(0.0) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(sx_expect(period) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(sx_expect(period / 2) == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(std::abs(sx_expect(period / 4)) < 1e-10);

  // locate the first zero crossing by bisection: it sits at a quarter period
  double lo = 0.0, hi = period / 2;
  for (int it = 0; it < 200 && hi - lo > 1e-16 * period; ++it) {
    const double mid = 0.5 * (lo + hi);
    (sx_expect(mid) > 0.0 ? lo : hi) = mid;
  }
  const double measured_period = 4.0 * 0.5 * (lo + hi);
  CHECK(measured_period == doctest::Approx(period).epsilon(1e-9));
}

TEST_CASE("partial traces: product states, trace preservation, validation") {
  testutil::Rng rng(73);

  // pure product state rho = (uu*) (x) (vv*)
  Eigen::Vector2cd u;
  u << complex<double>(0.6, 0.3), complex<double>(-0.2, 0.7);
  u.normalize();
  Eigen::Vector4cd v;
  v << complex<double>(0.1, 0.0), complex<double>(0.5, -0.5), complex<double>(0.0, 0.4),
      complex<double>(-0.3, 0.2);
  v.normalize();
  const Eigen::Matrix2cd rho2 = u * u.adjoint();
  const Eigen::Matrix4cd rho4 = v * v.adjoint();
  const Matrix8cd rho = Eigen::kroneckerProduct(rho2, rho4).eval();

  CHECK((partial_trace_rotor(rho) - rho2).norm() <= 1e-14);
  CHECK((partial_trace_doublet(rho) - rho4).norm() <= 1e-14);

  // generic pure state: both reduced traces are 1, purities agree
  const Vector8cd psi = random_state(rng);
  const Matrix8cd rho_psi = psi * psi.adjoint();
  const Eigen::Matrix2cd a = partial_trace_rotor(rho_psi);
  const Eigen::Matrix4cd b = partial_trace_doublet(rho_psi);
  CHECK(std::abs(a.trace().real() - 1.0) <= 1e-13);
  CHECK(std::abs(b.trace().real() - 1.0) <= 1e-13);
  // Schmidt: the two reduced states of a pure state share their purity
  const double pa = (a * a).trace().real();
  const double pb = (b * b).trace().real();
  CHECK(pa == doctest::Approx(pb).epsilon(1e-12));
  CHECK(pa <= 1.0 + 1e-12);
  CHECK(pa >= 0.5 - 1e-12);

  // validation: non-hermitian and wrong-trace inputs are rejected
  Matrix8cd bad = rho_psi;
  bad(0, 1) += complex<double>(1e-6, 0.0);
  CHECK_THROWS_AS(partial_trace_rotor(bad), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace_doublet(bad), std::invalid_argument);
  CHECK_THROWS_AS(partial_trace_rotor((2.0 * rho_psi).eval()), std::invalid_argument);
}

TEST_CASE("pseudo-spin flip conjugates the doublet inversion") {
  const Matrix8cd p = pseudo_spin_flip();
  CHECK((p * p.adjoint() - Matrix8cd::Identity()).norm() <= 1e-13);

  const Matrix8cd sz8 =
      Eigen::kroneckerProduct(pauli_z(), Eigen::Matrix4d::Identity()).eval().cast<complex<double>>();
  const Matrix8cd jz8 =
      Eigen::kroneckerProduct(Eigen::Matrix2d::Identity(), spin_jz()).eval().cast<complex<double>>();

  CHECK((p.adjoint() * sz8 * p + sz8).norm() <= 1e-13 * sz8.norm());
  CHECK((p.adjoint() * jz8 * p - jz8).norm() <= 1e-13 * jz8.norm());
}

TEST_CASE("evolution of a pure state keeps total purity at one") {
  const Matrix8d h = build_hamiltonian(kOH, FieldPoint{0.1, 2e5, std::numbers::pi / 2});
  Vector8cd psi0 = Vector8cd::Zero();
  psi0(0) = psi0(4) = std::numbers::sqrt2 / 2.0;
  for (int k = 0; k <= 20; ++k) {
    const double t = 1.2e-9 * k / 20.0;
    const Vector8cd psit = propagator(h, t) * psi0;
    const Matrix8cd rho = psit * psit.adjoint();
    CHECK(std::abs((rho * rho).trace().real() - 1.0) <= 1e-10);
    const double p2 = (partial_trace_rotor(rho) * partial_trace_rotor(rho)).trace().real();
    const double p4 =
        (partial_trace_doublet(rho) * partial_trace_doublet(rho)).trace().real();
    CHECK(p2 == doctest::Approx(p4).epsilon(1e-10));
  }
}
