#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "spinmub/mub.hpp"
#include "spinmub/rng.hpp"
#include "spinmub/spin_algebra.hpp"
#include "spinmub/squeezing.hpp"
#include "test_util.hpp"

using namespace spinmub;
using namespace testutil;

namespace {
const rng::Stream kStream = rng::stream(27182818, rng::kSaltTest);
const SpinQuantum kSpin1 = SpinQuantum::of(1.0);
const double kSqrt2 = std::sqrt(2.0);
}  // namespace

TEST_CASE("mean spin of the flat state and its rotations") {
  const Vec3 m = mean_spin(StateVector::scaled({1.0, 1.0, 1.0}), kSpin1);
  CHECK(m.x() == doctest::Approx(2.0 * kSqrt2 / 3.0).epsilon(1e-12));
  CHECK(std::abs(m.y()) < 1e-12);
  CHECK(std::abs(m.z()) < 1e-12);

  const Vec3 m2 = mean_spin(StateVector::scaled({Complex(1, 0), kOmega, Complex(1, 0)}), kSpin1);
  CHECK(m2.x() == doctest::Approx(-kSqrt2 / 3.0).epsilon(1e-12));
  CHECK(std::abs(m2.y()) < 1e-12);
  CHECK(std::abs(m2.z()) < 1e-12);
}

TEST_CASE("unbiased states always have zero z mean") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    const double a = 2.0 * kPi * kStream.u01(2 * i);
    const double b = 2.0 * kPi * kStream.u01(2 * i + 1);
    const StateVector psi =
        StateVector::scaled({Complex(1, 0), std::polar(1.0, a), std::polar(1.0, b)});
    CHECK(std::abs(mean_spin(psi, kSpin1).z()) < 1e-12);
  }
}

TEST_CASE("unpolarized family has zero mean spin") {
  for (std::uint64_t i = 0; i < 50; ++i) {
    const double a = 2.0 * kPi * kStream.u01(300 + i);
    CHECK(mean_spin(alpha_state(AlphaKind::unpolarized, a), kSpin1).norm() < 1e-12);
  }
}

TEST_CASE("polarized family mean length is |(2 sqrt2/3) cos a|") {
  for (std::uint64_t i = 0; i < 50; ++i) {
    const double a = 2.0 * kPi * kStream.u01(400 + i);
    const Vec3 m = mean_spin(alpha_state(AlphaKind::polarized, a), kSpin1);
    CHECK(m.norm() ==
          doctest::Approx(std::abs(2.0 * kSqrt2 / 3.0 * std::cos(a))).epsilon(1e-10));
    CHECK(std::abs(m.y()) < 1e-12);
    CHECK(std::abs(m.z()) < 1e-12);
  }
}

TEST_CASE("polarized-family variances are parameter independent") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    const double a = 2.0 * kPi * kStream.u01(500 + i);
    const StateVector psi = alpha_state(AlphaKind::polarized, a);
    CHECK(variance_along(psi, kSpin1, Direction::y_axis()) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    CHECK(variance_along(psi, kSpin1, Direction::z_axis()) ==
          doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  }
}

TEST_CASE("unpolarized-family variances follow the cos 2a law") {
  for (std::uint64_t i = 0; i < 100; ++i) {
    const double a = 2.0 * kPi * kStream.u01(600 + i);
    const StateVector psi = alpha_state(AlphaKind::unpolarized, a);
    const double vx = variance_along(psi, kSpin1, Direction::x_axis());
    const double vy = variance_along(psi, kSpin1, Direction::y_axis());
    const double vz = variance_along(psi, kSpin1, Direction::z_axis());
    CHECK(vy == doctest::Approx(2.0 / 3.0 + std::cos(2.0 * a) / 3.0).epsilon(1e-12));
    CHECK(vx == doctest::Approx(2.0 / 3.0 - std::cos(2.0 * a) / 3.0).epsilon(1e-12));
    CHECK(vz == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    // Zero mean makes the variances sum to the Casimir value s(s+1) = 2.
    CHECK(vx + vy + vz == doctest::Approx(2.0).epsilon(1e-12));
  }
}

TEST_CASE("covariance reproduces directional variances and is PSD") {
  for (std::uint64_t i = 0; i < 40; ++i) {
    const StateVector psi = random_state(kStream, 10000 + 10 * i, 3);
    const SpinStats st = spin_stats(psi, kSpin1);

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(st.covariance);
    CHECK(es.eigenvalues()(0) > -1e-10);

    for (std::uint64_t j = 0; j < 3; ++j) {
      const Direction dir = random_direction(kStream, 20000 + 10 * i + j);
      const double via_cov = dir.vec().dot(st.covariance * dir.vec());
      CHECK(variance_along(psi, kSpin1, dir) == doctest::Approx(via_cov).epsilon(1e-10));
      CHECK(variance_along(psi, kSpin1, dir) > -1e-12);
      // Cross-check against the handwritten matrices.
      CHECK(direct_variance3(psi, dir.vec()) ==
            doctest::Approx(variance_along(psi, kSpin1, dir)).epsilon(1e-10));
    }
  }
}

TEST_CASE("conjugation reflects the mean spin in the xz plane") {
  for (std::uint64_t i = 0; i < 30; ++i) {
    const StateVector psi = random_state(kStream, 30000 + 10 * i, 3);
    const StateVector conj = StateVector::scaled(psi.vec().conjugate());
    const Vec3 m = mean_spin(psi, kSpin1);
    const Vec3 mc = mean_spin(conj, kSpin1);
    CHECK(mc.x() == doctest::Approx(m.x()).epsilon(1e-10));
    CHECK(mc.y() == doctest::Approx(-m.y()).epsilon(1e-10));
    CHECK(mc.z() == doctest::Approx(m.z()).epsilon(1e-10));
  }
}

TEST_CASE("squeezing report for the flat state") {
  const SqueezingReport rep = squeezing_report(StateVector::scaled({1.0, 1.0, 1.0}), kSpin1);
  CHECK(rep.min_variance == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(rep.threshold == doctest::Approx(0.5));
  CHECK(rep.squeezed);
  CHECK_FALSE(rep.degenerate_mean);
  // Minimum along +y under the sign convention.
  CHECK(rep.min_direction.vec().y() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(std::abs(rep.min_direction.vec().dot(rep.mean)) < 1e-8 * rep.mean.norm());
}

TEST_CASE("squeezing report for the twisted-basis state") {
  const StateVector psi = StateVector::scaled({Complex(1, 0), kOmega, Complex(1, 0)});
  const SqueezingReport rep = squeezing_report(psi, kSpin1);

  const double exact = 0.5 - std::sqrt(7.0) / 6.0;
  CHECK(rep.min_variance == doctest::Approx(exact).epsilon(1e-10));
  CHECK(rep.min_variance < 0.06);
  CHECK(rep.max_transverse_variance == doctest::Approx(0.5 + std::sqrt(7.0) / 6.0).epsilon(1e-10));
  CHECK(rep.squeezed);

  // Scan oracle at 1e-4 rad.
  const double scanned = scan_min_transverse_variance(psi, rep.mean, 1e-4);
  CHECK(std::abs(scanned - rep.min_variance) < 1e-8);

  // Tilt from +y toward z is -(1/2) arctan(sqrt 6) in the yz plane.
  const Vec3 dir = rep.min_direction.vec();
  CHECK(std::abs(dir.x()) < 1e-10);
  const double tilt = std::atan2(dir.z(), dir.y());
  CHECK(tilt == doctest::Approx(-0.5 * std::atan(std::sqrt(6.0))).epsilon(1e-10));
  CHECK(std::abs(dir.dot(rep.mean)) < 1e-8 * rep.mean.norm());

  // Conjugate state tilts the other way.
  const SqueezingReport repc =
      squeezing_report(StateVector::scaled(psi.vec().conjugate()), kSpin1);
  const double tiltc = std::atan2(repc.min_direction.vec().z(), repc.min_direction.vec().y());
  CHECK(tiltc == doctest::Approx(0.5 * std::atan(std::sqrt(6.0))).epsilon(1e-10));
}

TEST_CASE("coherent eigenstates are not squeezed") {
  // Mean along +z exercises the transverse-frame fallback; both transverse
  // variances are 1/2, exactly at the threshold.
  const SqueezingReport rep = squeezing_report(StateVector::scaled({1.0, 0.0, 0.0}), kSpin1);
  CHECK_FALSE(rep.degenerate_mean);
  CHECK(rep.mean.z() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rep.min_variance == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(rep.max_transverse_variance == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_FALSE(rep.squeezed);
}

TEST_CASE("squeezing report for null states is degenerate with zero minimum") {
  for (double alpha : {0.0, 0.9, 2.7}) {
    const StateVector psi = alpha_state(AlphaKind::unpolarized, alpha);
    const SqueezingReport rep = squeezing_report(psi, kSpin1);
    CHECK(rep.degenerate_mean);
    CHECK(std::abs(rep.min_variance) < 1e-10);
    CHECK(rep.squeezed);
    // The zero-variance axis is the tetrahedral direction with parameter
    // alpha + pi.
    const Direction axis = null_direction(alpha + kPi);
    CHECK(std::abs(std::abs(rep.min_direction.vec().dot(axis.vec())) - 1.0) < 1e-8);
  }
}

TEST_CASE("scan oracle agrees with the closed-form minimum on random states") {
  for (std::uint64_t i = 0; i < 15; ++i) {
    const StateVector psi = random_state(kStream, 40000 + 10 * i, 3);
    const SqueezingReport rep = squeezing_report(psi, kSpin1);
    if (rep.degenerate_mean) continue;
    const double scanned = scan_min_transverse_variance(psi, rep.mean, 1e-4);
    CHECK(std::abs(scanned - rep.min_variance) < 5e-8);
    CHECK(scanned >= rep.min_variance - 1e-12);
    // Reported direction is transverse to the mean and sign-normalized.
    CHECK(std::abs(rep.min_direction.vec().dot(rep.mean)) <= 1e-8 * rep.mean.norm());
    CHECK(rep.min_direction.vec().y() >= -1e-12);
  }
}

TEST_CASE("alpha_state pins") {
  CHECK((alpha_state(AlphaKind::polarized, 0.0).vec() -
         StateVector::scaled({1.0, 1.0, 1.0}).vec())
            .norm() < 1e-15);
  CHECK((alpha_state(AlphaKind::unpolarized, 0.0).vec() -
         StateVector::scaled({1.0, 1.0, -1.0}).vec())
            .norm() < 1e-15);
  const StateVector p23 = alpha_state(AlphaKind::polarized, 2.0 * kPi / 3.0);
  CHECK(equal_up_to_phase(p23, StateVector::scaled({Complex(1, 0), kOmega, Complex(1, 0)}),
                          1e-12)
            .matches);
  // Both families are unbiased to the computational basis.
  for (double a : {0.1, 1.0, 3.0}) {
    for (const AlphaKind kind : {AlphaKind::polarized, AlphaKind::unpolarized}) {
      const StateVector psi = alpha_state(kind, a);
      for (int k = 0; k < 3; ++k) {
        CHECK(std::norm(psi[k]) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("null_direction geometry and pairing") {
  const Direction d0 = null_direction(0.0);
  CHECK(d0.x() == doctest::Approx(kSqrt2 * kInvSqrt3).epsilon(1e-12));
  CHECK(std::abs(d0.y()) < 1e-15);
  CHECK(d0.z() == doctest::Approx(kInvSqrt3).epsilon(1e-12));

  const Direction dh = null_direction(kPi / 2.0);
  CHECK(dh.y() == doctest::Approx(kSqrt2 * kInvSqrt3).epsilon(1e-12));

  for (std::uint64_t i = 0; i < 50; ++i) {
    const double a = 2.0 * kPi * kStream.u01(700 + i);
    const Direction d = null_direction(a);
    CHECK(d.z() == doctest::Approx(kInvSqrt3).epsilon(1e-12));
    CHECK(d.theta() == doctest::Approx(std::acos(kInvSqrt3)).epsilon(1e-12));

    // Corrected pairing: the axis with parameter a + pi annihilates the
    // parameter-a family member.
    const StateVector psi = alpha_state(AlphaKind::unpolarized, a);
    CHECK((sn3(null_direction(a + kPi).vec()) * psi.vec()).norm() < 1e-10);
    // The literal same-parameter pairing leaves a residual of 2 sqrt2/3.
    CHECK((sn3(d.vec()) * psi.vec()).norm() ==
          doctest::Approx(2.0 * kSqrt2 / 3.0).epsilon(1e-9));
  }
}

TEST_CASE("uncertainty product checks") {
  // Flat state with (i, j, k) = (y, z, x): both sides equal 2/9.
  const UncertaintyCheck flat =
      uncertainty_check(StateVector::scaled({1.0, 1.0, 1.0}), kSpin1, Direction::y_axis(),
                        Direction::z_axis(), Direction::x_axis());
  CHECK(flat.lhs == doctest::Approx(2.0 / 9.0).epsilon(1e-12));
  CHECK(flat.rhs == doctest::Approx(2.0 / 9.0).epsilon(1e-12));
  CHECK(flat.lhs == doctest::Approx(flat.rhs).epsilon(1e-12));
  CHECK(flat.satisfied);

  // Coherent m = +-1 eigenstates saturate at 1/4.
  for (const StateVector& psi :
       {StateVector::scaled({1.0, 0.0, 0.0}), StateVector::scaled({0.0, 0.0, 1.0})}) {
    const UncertaintyCheck uc = uncertainty_check(psi, kSpin1, Direction::x_axis(),
                                                  Direction::y_axis(), Direction::z_axis());
    CHECK(uc.lhs == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(uc.rhs == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(uc.satisfied);
  }

  // A null state has zero mean spin, so the bound is trivially satisfied.
  const UncertaintyCheck nullcase = uncertainty_check(null_state(Direction::z_axis()), kSpin1,
                                                  Direction::x_axis(), Direction::y_axis(),
                                                  Direction::z_axis());
  CHECK(std::abs(nullcase.rhs) < 1e-15);
  CHECK(nullcase.satisfied);

  CHECK_THROWS_AS(uncertainty_check(StateVector::scaled({1.0, 0.0, 0.0}), kSpin1,
                                    Direction::x_axis(), Direction(1.0, 0.3, 0.0),
                                    Direction::z_axis()),
                  std::invalid_argument);

  // Random states never violate the bound.
  for (std::uint64_t i = 0; i < 40; ++i) {
    const StateVector psi = random_state(kStream, 50000 + 10 * i, 3);
    const UncertaintyCheck uc = uncertainty_check(psi, kSpin1, Direction::y_axis(),
                                                  Direction::z_axis(), Direction::x_axis());
    CHECK(uc.satisfied);
  }
}

TEST_CASE("flat-state statistics across dimensions") {
  const FourierStateStats f3 = fourier_state_stats(3);
  CHECK(f3.mean_x == doctest::Approx(2.0 * kSqrt2 / 3.0).epsilon(1e-12));
  CHECK(f3.var_z == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(f3.var_y == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  const FourierStateStats f5 = fourier_state_stats(5);
  CHECK(f5.var_z == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(f5.squeeze_threshold == doctest::Approx(1.0));

  // d = 2 boundary: the flat qubit state is coherent; all inequalities
  // collapse to equalities.
  const FourierStateStats f2 = fourier_state_stats(2);
  CHECK(f2.mean_x == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(f2.mean_x == doctest::Approx(f2.s).epsilon(1e-12));
  CHECK(f2.var_z == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(f2.var_y == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(f2.var_y == doctest::Approx(f2.squeeze_threshold).epsilon(1e-12));

  for (int d = 3; d <= 25; ++d) {
    const FourierStateStats fs = fourier_state_stats(d);
    CHECK(std::abs(fs.mean_x - fs.mean_x_direct) < 1e-10);
    CHECK(std::abs(fs.var_z - fs.var_z_direct) < 1e-10);
    CHECK(std::abs(fs.var_y - fs.var_y_direct) < 1e-10);
    CHECK(fs.var_z == doctest::Approx((d * d - 1.0) / 12.0).epsilon(1e-12));
    CHECK(fs.var_y < fs.squeeze_threshold);
    CHECK(fs.squeeze_threshold < fs.var_z);
    CHECK(fs.mean_x < fs.coherent_bound);
    // The relaxed cross-term bound collapses to s/2 identically, and the
    // exact sum sits strictly below it.
    CHECK(fs.var_y_relaxed == doctest::Approx(fs.squeeze_threshold).epsilon(1e-12));
    CHECK(fs.var_y < fs.var_y_relaxed);
  }

  CHECK_THROWS_AS(fourier_state_stats(1), std::invalid_argument);
}

TEST_CASE("dimension mismatch is rejected") {
  CHECK_THROWS_AS(mean_spin(StateVector::scaled({1.0, 0.0}), kSpin1), std::invalid_argument);
  CHECK_THROWS_AS(variance_along(StateVector::scaled({1.0, 0.0}), kSpin1, Direction::z_axis()),
                  std::invalid_argument);
}
