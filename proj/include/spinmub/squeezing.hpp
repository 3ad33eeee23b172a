#pragma once

#include "spinmub/types.hpp"

namespace spinmub {

/// First and second moments of the spin vector for one state.
/// covariance(i, j) = <{S_i, S_j}>/2 - <S_i><S_j>; the variance along any
/// unit direction n equals n^T covariance n exactly.
struct SpinStats {
  Vec3 mean = Vec3::Zero();
  double length = 0.0;
  Eigen::Matrix3d covariance = Eigen::Matrix3d::Zero();
  double var_x = 0.0, var_y = 0.0, var_z = 0.0;
};

SpinStats spin_stats(const StateVector& state, SpinQuantum sq);

Vec3 mean_spin(const StateVector& state, SpinQuantum sq);

double variance_along(const StateVector& state, SpinQuantum sq, const Direction& dir);

/// Transverse-variance extremum report. With a nondegenerate mean the search
/// runs over the unit circle orthogonal to it (closed-form 2x2 eigenproblem);
/// with ||mean|| < kDegenerateMean it runs over the whole sphere and
/// degenerate_mean is set. min_direction is sign-normalized to nonnegative y
/// (ties: nonnegative z, then nonnegative x).
struct SqueezingReport {
  Vec3 mean = Vec3::Zero();
  double min_variance = 0.0;
  double max_transverse_variance = 0.0;
  Direction min_direction = Direction::z_axis();
  double threshold = 0.5;  // s/2
  bool squeezed = false;
  bool degenerate_mean = false;
};

SqueezingReport squeezing_report(const StateVector& state, SpinQuantum sq);

/// The two alpha-parameterized families of spin-1 states unbiased to the
/// computational basis: polarized (1, e^{ia}, 1)/sqrt3 with mean spin along
/// x, and unpolarized (1, e^{ia}, -e^{2ia})/sqrt3 with zero mean spin.
enum class AlphaKind { polarized, unpolarized };

StateVector alpha_state(AlphaKind kind, double alpha);

/// The tetrahedral axis family (sqrt2 cos a, sqrt2 sin a, 1)/sqrt3. Every
/// member makes angle arccos(1/sqrt3) with z. Pairing with the unpolarized
/// family: spin_along(null_direction(a)) annihilates
/// alpha_state(unpolarized, a + pi); the axis that annihilates the
/// parameter-a state is null_direction(a + pi), not null_direction(a).
Direction null_direction(double alpha);

/// Product uncertainty bound Delta S_i^2 Delta S_j^2 >= |<S_k>|^2 / 4 for a
/// mutually orthogonal triple. The bound is informative when k lies along
/// the mean spin vector.
struct UncertaintyCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = false;
};

UncertaintyCheck uncertainty_check(const StateVector& state, SpinQuantum sq,
                                   const Direction& i, const Direction& j,
                                   const Direction& k);

/// Moments of the flat state (1, ..., 1)/sqrt(d) for arbitrary d = 2s+1.
/// The mean_x / var_z / var_y fields hold the closed-form sums
///   mean_x = (1/d) sum_j sqrt(j(d-j)),
///   var_z  = (d^2 - 1)/12,
///   var_y  = sum_j j(d-j)/(2d) - sum_j sqrt(j(d-j)(j+1)(d-j-1))/(2d);
/// the *_direct fields hold the matrix expectation values, and construction
/// fails if any pair disagrees beyond kDerivedTol. var_y_relaxed is the
/// intermediate bound obtained by replacing the square root with j(d-j-1);
/// it equals squeeze_threshold = s/2 identically, and var_y < var_y_relaxed
/// strictly for d >= 3 (equality at d = 2).
struct FourierStateStats {
  int d = 0;
  double s = 0.0;
  double mean_x = 0.0;
  double var_z = 0.0;
  double var_y = 0.0;
  double mean_x_direct = 0.0;
  double var_z_direct = 0.0;
  double var_y_direct = 0.0;
  double var_y_relaxed = 0.0;
  double coherent_bound = 0.0;    // = s
  double squeeze_threshold = 0.0; // = s/2
};

FourierStateStats fourier_state_stats(int d);

}  // namespace spinmub
