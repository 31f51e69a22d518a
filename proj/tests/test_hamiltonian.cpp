#include <cmath>
#include <numbers>

#include <doctest.h>

#include "ohsz/constants.hpp"
#include "ohsz/hamiltonian.hpp"
#include "test_util.hpp"

using namespace ohsz;

namespace {
const MolecularParameters kOH = MolecularParameters::oh_ground_state();
}

TEST_CASE("parameter and field validation") {
  CHECK_THROWS_AS(MolecularParameters(0.0, 1e-30), std::invalid_argument);
  CHECK_THROWS_AS(MolecularParameters(1e10, -1e-30), std::invalid_argument);
  CHECK_THROWS_AS(FieldPoint(-0.1, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(FieldPoint(0.1, -1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(FieldPoint(0.1, 1.0, -0.2), std::invalid_argument);
  CHECK_THROWS_AS(FieldPoint(0.1, 1.0, 3.2), std::invalid_argument);
  CHECK_NOTHROW(FieldPoint(0.0, 0.0, 0.0));
  CHECK_NOTHROW(FieldPoint(0.5, 2e5, std::numbers::pi));
}

TEST_CASE("pinned energy anchors of the OH ground state") {
  // half the doublet splitting, for Delta/2pi = 1.667 GHz
  CHECK(0.5 * si::hbar * kOH.delta == doctest::Approx(5.5228294666e-25).epsilon(1e-10));
  CHECK(convert_energy(0.5 * si::hbar * kOH.delta, EnergyUnit::kelvin) ==
        doctest::Approx(0.0400016910).epsilon(1e-9));
  CHECK(convert_energy(0.5 * si::hbar * kOH.delta, EnergyUnit::gigahertz) ==
        doctest::Approx(0.8335).epsilon(1e-12));
  // scaled field energies at the default sweep extremes
  CHECK(2.0 * kOH.mu_e * 2e5 == doctest::Approx(2.214866e-24).epsilon(1e-6));
  CHECK(4.0 * si::mu_bohr * 0.5 == doctest::Approx(1.854802e-23).epsilon(1e-6));
}

TEST_CASE("hamiltonian is symmetric, traceless, and block-patterned") {
  testutil::Rng rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const FieldPoint f{rng.uniform(0.0, 1.0), rng.uniform(0.0, 1e6),
                       rng.uniform(0.0, std::numbers::pi)};
    const Matrix8d h = build_hamiltonian(kOH, f);

    CHECK((h - h.transpose()).norm() == 0.0);
    CHECK(std::abs(h.trace()) <= 1e-14 * h.diagonal().cwiseAbs().sum() + 1e-300);

    // within-component blocks are diagonal: all structure lives on the
    // diagonal and in the inter-component coupling block
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        if (i == j) continue;
        CHECK(h(i, j) == 0.0);
        CHECK(h(i + 4, j + 4) == 0.0);
      }
    }
    // coupling block is pentadiagonal in |m - m'|: only |dm| <= 1 appear
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        if (std::abs(i - j) > 1) CHECK(h(i, j + 4) == 0.0);
      }
    }
  }
}

TEST_CASE("entry values at a pinned field point") {
  const double b = 0.5, e = 2e5, theta = 0.7;
  const Matrix8d h = build_hamiltonian(kOH, FieldPoint{b, e, theta});

  const double a = 0.5 * si::hbar * kOH.delta;
  const double c = kOH.mu_e * e * std::cos(theta);
  const double s = kOH.mu_e * e * std::sin(theta);

  // diagonal: doublet inversion plus the linear Zeeman ladder
  CHECK(h(0, 0) == doctest::Approx(-a - 1.2 * si::mu_bohr * b).epsilon(1e-14));
  CHECK(h(1, 1) == doctest::Approx(-a - 0.4 * si::mu_bohr * b).epsilon(1e-14));
  CHECK(h(2, 2) == doctest::Approx(-a + 0.4 * si::mu_bohr * b).epsilon(1e-14));
  CHECK(h(3, 3) == doctest::Approx(-a + 1.2 * si::mu_bohr * b).epsilon(1e-14));
  CHECK(h(4, 4) == doctest::Approx(+a - 1.2 * si::mu_bohr * b).epsilon(1e-14));
  CHECK(h(7, 7) == doctest::Approx(+a + 1.2 * si::mu_bohr * b).epsilon(1e-14));

  // coupling block: diagonal Stark ladder and nearest-neighbour mixing
  CHECK(h(0, 4) == doctest::Approx(0.6 * c).epsilon(1e-14));
  CHECK(h(1, 5) == doctest::Approx(0.2 * c).epsilon(1e-14));
  CHECK(h(2, 6) == doctest::Approx(-0.2 * c).epsilon(1e-14));
  CHECK(h(3, 7) == doctest::Approx(-0.6 * c).epsilon(1e-14));
  CHECK(h(0, 5) == doctest::Approx(-std::sqrt(3.0) / 5.0 * s).epsilon(1e-14));
  CHECK(h(1, 4) == doctest::Approx(-std::sqrt(3.0) / 5.0 * s).epsilon(1e-14));
  CHECK(h(1, 6) == doctest::Approx(-0.4 * s).epsilon(1e-14));
  CHECK(h(2, 5) == doctest::Approx(-0.4 * s).epsilon(1e-14));
  CHECK(h(2, 7) == doctest::Approx(-std::sqrt(3.0) / 5.0 * s).epsilon(1e-14));
  CHECK(h(3, 6) == doctest::Approx(-std::sqrt(3.0) / 5.0 * s).epsilon(1e-14));
}

TEST_CASE("the two construction paths agree to rounding") {
  testutil::Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const FieldPoint f{rng.uniform(0.0, 2.0), rng.uniform(0.0, 2e6),
                       rng.uniform(0.0, std::numbers::pi)};
    const Matrix8d h1 = build_hamiltonian(kOH, f);
    const Matrix8d h2 = build_kronecker_form(kOH, f);
    const double scale = h1.cwiseAbs().maxCoeff();
    CHECK((h1 - h2).cwiseAbs().maxCoeff() <= 4e-15 * scale);
  }
}

TEST_CASE("hamiltonian is linear in each field strength") {
  const double theta = 1.1;
  const Matrix8d h00 = build_hamiltonian(kOH, {0.0, 0.0, theta});
  const Matrix8d hb = build_hamiltonian(kOH, {0.3, 0.0, theta}) - h00;
  const Matrix8d he = build_hamiltonian(kOH, {0.0, 4e5, theta}) - h00;
  const Matrix8d hbe = build_hamiltonian(kOH, {0.3, 4e5, theta});
  CHECK((h00 + hb + he - hbe).norm() <= 1e-14 * hbe.norm());

  const Matrix8d hb2 = build_hamiltonian(kOH, {0.6, 0.0, theta}) - h00;
  CHECK((2.0 * hb - hb2).norm() <= 1e-14 * hb2.norm());
}
