#include "spinmub/squeezing.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "spinmub/spin_algebra.hpp"

namespace spinmub {

namespace {

double expectation(const StateVector& state, const Matrix& op) {
  return (state.vec().dot(op * state.vec())).real();
}

void check_dim(const StateVector& state, SpinQuantum sq) {
  if (state.dim() != sq.dim()) {
    throw std::invalid_argument("state dimension does not match 2s+1");
  }
}

// Sign-normalize a unit vector: nonnegative y, ties broken by z then x.
Vec3 canonical_sign(Vec3 v) {
  constexpr double tol = 1e-12;
  double lead = v.y();
  if (std::abs(lead) <= tol) lead = v.z();
  if (std::abs(lead) <= tol) lead = v.x();
  return lead < 0.0 ? Vec3(-v) : v;
}

}  // namespace

SpinStats spin_stats(const StateVector& state, SpinQuantum sq) {
  check_dim(state, sq);
  const SpinOperators ops = spin_operators(sq);
  const Matrix* s[3] = {&ops.x.mat, &ops.y.mat, &ops.z.mat};

  SpinStats st;
  for (int i = 0; i < 3; ++i) st.mean(i) = expectation(state, *s[i]);
  st.length = st.mean.norm();
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      const double anti = 0.5 * expectation(state, (*s[i]) * (*s[j]) + (*s[j]) * (*s[i]));
      st.covariance(i, j) = st.covariance(j, i) = anti - st.mean(i) * st.mean(j);
    }
  }
  st.var_x = st.covariance(0, 0);
  st.var_y = st.covariance(1, 1);
  st.var_z = st.covariance(2, 2);
  return st;
}

Vec3 mean_spin(const StateVector& state, SpinQuantum sq) {
  check_dim(state, sq);
  const SpinOperators ops = spin_operators(sq);
  return {expectation(state, ops.x.mat), expectation(state, ops.y.mat),
          expectation(state, ops.z.mat)};
}

double variance_along(const StateVector& state, SpinQuantum sq, const Direction& dir) {
  check_dim(state, sq);
  const SpinOperators ops = spin_operators(sq);
  const Matrix sn = spin_along(ops, dir).mat;
  const double first = expectation(state, sn);
  return expectation(state, sn * sn) - first * first;
}

SqueezingReport squeezing_report(const StateVector& state, SpinQuantum sq) {
  const SpinStats st = spin_stats(state, sq);

  SqueezingReport rep;
  rep.mean = st.mean;
  rep.threshold = 0.5 * sq.s();
  rep.degenerate_mean = st.length < kDegenerateMean;

  if (rep.degenerate_mean) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(st.covariance);
    rep.min_variance = es.eigenvalues()(0);
    rep.max_transverse_variance = es.eigenvalues()(2);
    const Vec3 dir = canonical_sign(es.eigenvectors().col(0));
    rep.min_direction = Direction(dir);
  } else {
    const Vec3 m = st.mean / st.length;
    Vec3 e1 = m.cross(Vec3::UnitZ());
    if (e1.norm() < 1e-8) e1 = m.cross(Vec3::UnitX());
    e1.normalize();
    const Vec3 e2 = m.cross(e1).normalized();

    Eigen::Matrix2d q;
    q(0, 0) = e1.dot(st.covariance * e1);
    q(0, 1) = q(1, 0) = e1.dot(st.covariance * e2);
    q(1, 1) = e2.dot(st.covariance * e2);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> es(q);
    rep.min_variance = es.eigenvalues()(0);
    rep.max_transverse_variance = es.eigenvalues()(1);
    const Eigen::Vector2d c = es.eigenvectors().col(0);
    rep.min_direction = Direction(canonical_sign((c(0) * e1 + c(1) * e2).normalized()));
  }
  rep.squeezed = rep.min_variance < rep.threshold - 1e-12;
  return rep;
}

StateVector alpha_state(AlphaKind kind, double alpha) {
  const Complex ea = std::polar(1.0, alpha);
  if (kind == AlphaKind::polarized) {
    return StateVector::scaled({Complex(1.0, 0.0), ea, Complex(1.0, 0.0)});
  }
  return StateVector::scaled({Complex(1.0, 0.0), ea, -std::polar(1.0, 2.0 * alpha)});
}

Direction null_direction(double alpha) {
  const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
  const double r = std::sqrt(2.0) * inv_sqrt3;
  return {r * std::cos(alpha), r * std::sin(alpha), inv_sqrt3};
}

UncertaintyCheck uncertainty_check(const StateVector& state, SpinQuantum sq,
                                   const Direction& i, const Direction& j,
                                   const Direction& k) {
  constexpr double ortho_tol = 1e-10;
  if (std::abs(i.vec().dot(j.vec())) > ortho_tol ||
      std::abs(i.vec().dot(k.vec())) > ortho_tol ||
      std::abs(j.vec().dot(k.vec())) > ortho_tol) {
    throw std::invalid_argument("uncertainty_check requires a mutually orthogonal triple");
  }
  check_dim(state, sq);
  const SpinOperators ops = spin_operators(sq);
  const Matrix sk = spin_along(ops, k).mat;

  UncertaintyCheck uc;
  uc.lhs = variance_along(state, sq, i) * variance_along(state, sq, j);
  const double mk = expectation(state, sk);
  uc.rhs = 0.25 * mk * mk;
  uc.satisfied = uc.lhs >= uc.rhs - 1e-10;
  return uc;
}

FourierStateStats fourier_state_stats(int d) {
  if (d < 2) throw std::invalid_argument("fourier_state_stats requires d >= 2");

  FourierStateStats fs;
  fs.d = d;
  fs.s = 0.5 * (d - 1);
  fs.coherent_bound = fs.s;
  fs.squeeze_threshold = 0.5 * fs.s;

  for (int j = 1; j < d; ++j) {
    fs.mean_x += std::sqrt(static_cast<double>(j) * (d - j));
  }
  fs.mean_x /= d;
  fs.var_z = (static_cast<double>(d) * d - 1.0) / 12.0;

  double diag_sum = 0.0, cross_sum = 0.0, relaxed_cross = 0.0;
  for (int j = 1; j < d; ++j) diag_sum += static_cast<double>(j) * (d - j);
  for (int j = 1; j < d - 1; ++j) {
    cross_sum += std::sqrt(static_cast<double>(j) * (d - j) * (j + 1.0) * (d - j - 1.0));
    relaxed_cross += static_cast<double>(j) * (d - j - 1.0);
  }
  fs.var_y = (diag_sum - cross_sum) / (2.0 * d);
  fs.var_y_relaxed = (diag_sum - relaxed_cross) / (2.0 * d);

  const StateVector flat = StateVector::scaled(CVector::Ones(d));
  const SpinQuantum sq = SpinQuantum::from_dim(d);
  const SpinOperators ops = spin_operators(sq);
  fs.mean_x_direct = expectation(flat, ops.x.mat);
  fs.var_z_direct = variance_along(flat, sq, Direction::z_axis());
  fs.var_y_direct = variance_along(flat, sq, Direction::y_axis());

  if (std::abs(fs.mean_x - fs.mean_x_direct) > kDerivedTol ||
      std::abs(fs.var_z - fs.var_z_direct) > kDerivedTol ||
      std::abs(fs.var_y - fs.var_y_direct) > kDerivedTol) {
    throw std::runtime_error("fourier_state_stats: closed form disagrees with matrix expectation");
  }
  return fs;
}

}  // namespace spinmub
