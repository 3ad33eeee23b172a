#include "spinmub/spin_algebra.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace spinmub {

SpinOperators spin_operators(SpinQuantum sq) {
  const int d = sq.dim();
  const double s = sq.s();

  Matrix sz = Matrix::Zero(d, d);
  for (int i = 0; i < d; ++i) sz(i, i) = s - i;

  // Raising operator in descending-m order: <m+1|S_+|m> = sqrt(s(s+1) - m(m+1))
  // sits one row above the diagonal.
  Matrix sp = Matrix::Zero(d, d);
  for (int i = 1; i < d; ++i) {
    const double m = s - i;
    sp(i - 1, i) = std::sqrt(s * (s + 1.0) - m * (m + 1.0));
  }
  const Matrix sm = sp.adjoint();

  Operator x{(sp + sm) / 2.0, true, false, false};
  Operator y{(sp - sm) / Complex(0.0, 2.0), true, false, false};
  Operator z{std::move(sz), true, false, true};
  return SpinOperators{sq, std::move(x), std::move(y), std::move(z)};
}

Operator spin_along(const SpinOperators& ops, const Direction& dir) {
  Matrix m = dir.x() * ops.x.mat + dir.y() * ops.y.mat + dir.z() * ops.z.mat;
  const bool diag = std::abs(dir.x()) < 1e-15 && std::abs(dir.y()) < 1e-15;
  return Operator{std::move(m), true, false, diag};
}

Operator propagator(const Operator& h, double t) {
  const double herm_dev = (h.mat - h.mat.adjoint()).norm();
  if (herm_dev > kStructTol) {
    throw std::invalid_argument("propagator requires a hermitian generator, ||H - H^dag||_F = " +
                                std::to_string(herm_dev));
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(h.mat);
  const Eigen::VectorXd& ev = es.eigenvalues();
  CVector phases(ev.size());
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    phases(i) = std::polar(1.0, -ev(i) * t);
  }
  Matrix u = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
  return Operator{std::move(u), false, true, h.diagonal};
}

Operator rotation(const SpinOperators& ops, const Direction& dir, double angle) {
  return propagator(spin_along(ops, dir), angle);
}

Operator twisting(const SpinOperators& ops, const Direction& dir, double t) {
  const Operator s = spin_along(ops, dir);
  Operator squared{s.mat * s.mat, true, false, s.diagonal};
  return propagator(squared, t);
}

PhaseMatch equal_up_to_phase(const StateVector& a, const StateVector& b, double tol) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("equal_up_to_phase: dimension mismatch");
  }
  const Complex inner = a.vec().dot(b.vec());
  const double mag = std::abs(inner);
  PhaseMatch pm;
  pm.matches = mag >= 1.0 - tol;
  pm.phase = mag > 1e-300 ? inner / mag : Complex(1.0, 0.0);
  return pm;
}

PhaseMatch equal_up_to_phase(const Operator& a, const Operator& b, double tol) {
  if (a.dim() != b.dim() || a.mat.cols() != b.mat.cols()) {
    throw std::invalid_argument("equal_up_to_phase: dimension mismatch");
  }
  const Complex tr = (a.mat.adjoint() * b.mat).trace();
  const double mag = std::abs(tr) / static_cast<double>(a.dim());
  PhaseMatch pm;
  pm.matches = mag >= 1.0 - tol;
  pm.phase = std::abs(tr) > 1e-300 ? tr / std::abs(tr) : Complex(1.0, 0.0);
  return pm;
}

StateVector apply(const Operator& op, const StateVector& state) {
  if (op.mat.cols() != state.dim()) {
    throw std::invalid_argument("apply: dimension mismatch");
  }
  return StateVector::scaled(op.mat * state.vec());
}

}  // namespace spinmub
