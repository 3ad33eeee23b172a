#include "spinmub/types.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace spinmub {

SpinQuantum SpinQuantum::of(double s) {
  const double t = 2.0 * s;
  const double r = std::round(t);
  if (s < 0.0 || std::abs(t - r) > 1e-9) {
    throw std::invalid_argument("spin quantum number must be a nonnegative half-integer, got s=" +
                                std::to_string(s));
  }
  return SpinQuantum{static_cast<int>(r)};
}

SpinQuantum SpinQuantum::from_dim(int d) {
  if (d < 1) throw std::invalid_argument("Hilbert-space dimension must be positive");
  return SpinQuantum{d - 1};
}

Direction::Direction(double x, double y, double z) : n_(x, y, z) {
  const double norm = n_.norm();
  if (std::abs(norm - 1.0) > kNormSlack) {
    throw std::invalid_argument("direction norm " + std::to_string(norm) +
                                " violates unit-norm invariant (|norm - 1| > 1e-6)");
  }
  n_ /= norm;
}

Direction Direction::polar(double theta, double phi) {
  return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

double Direction::theta() const { return std::acos(std::clamp(n_.z(), -1.0, 1.0)); }

double Direction::phi() const { return std::atan2(n_.y(), n_.x()); }

void validate_structure(const Operator& op, double tol) {
  if (op.mat.rows() != op.mat.cols()) {
    throw std::invalid_argument("operator matrix is not square");
  }
  if (op.hermitian) {
    const double dev = (op.mat - op.mat.adjoint()).norm();
    if (dev > tol) {
      throw std::invalid_argument("hermitian flag violated: ||A - A^dag||_F = " +
                                  std::to_string(dev));
    }
  }
  if (op.unitary) {
    const Matrix gram = op.mat.adjoint() * op.mat;
    const double dev = (gram - Matrix::Identity(op.dim(), op.dim())).norm();
    if (dev > tol) {
      throw std::invalid_argument("unitary flag violated: ||A^dag A - I||_F = " +
                                  std::to_string(dev));
    }
  }
  if (op.diagonal) {
    Matrix off = op.mat;
    off.diagonal().setZero();
    if (off.norm() > tol) {
      throw std::invalid_argument("diagonal flag violated: off-diagonal norm = " +
                                  std::to_string(off.norm()));
    }
  }
}

StateVector StateVector::normalized(CVector amps, double slack) {
  if (amps.size() < 1) throw std::invalid_argument("state vector must be non-empty");
  const double norm = amps.norm();
  if (std::abs(norm - 1.0) > slack) {
    throw std::invalid_argument("state vector norm " + std::to_string(norm) +
                                " violates unit-norm invariant (|norm - 1| > " +
                                std::to_string(slack) + ")");
  }
  amps /= norm;
  return StateVector(std::move(amps));
}

StateVector StateVector::normalized(std::initializer_list<Complex> amps, double slack) {
  CVector v(static_cast<Eigen::Index>(amps.size()));
  Eigen::Index i = 0;
  for (const Complex& c : amps) v(i++) = c;
  return normalized(std::move(v), slack);
}

StateVector StateVector::scaled(CVector amps) {
  if (amps.size() < 1) throw std::invalid_argument("state vector must be non-empty");
  const double norm = amps.norm();
  if (norm < 1e-300) throw std::invalid_argument("cannot normalize the zero vector");
  amps /= norm;
  return StateVector(std::move(amps));
}

StateVector StateVector::scaled(std::initializer_list<Complex> amps) {
  CVector v(static_cast<Eigen::Index>(amps.size()));
  Eigen::Index i = 0;
  for (const Complex& c : amps) v(i++) = c;
  return scaled(std::move(v));
}

}  // namespace spinmub
