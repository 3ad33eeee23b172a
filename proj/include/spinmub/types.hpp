#pragma once

#include <complex>
#include <initializer_list>
#include <string>

#include <Eigen/Dense>

namespace spinmub {

using Complex = std::complex<double>;
using Matrix  = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Vec3    = Eigen::Vector3d;

// Structural identities (hermiticity, unitarity, exact norms) hold to this.
inline constexpr double kStructTol = 1e-12;
// Quantities that pass through an eigensolver are checked against this one.
inline constexpr double kDerivedTol = 1e-10;
// Constructors renormalize inputs within this band around unit norm and
// reject anything farther; a grossly non-unit input is a caller bug.
inline constexpr double kNormSlack = 1e-6;
// Below this mean-spin length the transverse-plane constraint is meaningless.
inline constexpr double kDegenerateMean = 1e-8;

/// Spin quantum number s, stored as 2s so half-integers stay exact.
/// Hilbert-space dimension d = 2s + 1.
struct SpinQuantum {
  int twice_s = 2;

  static SpinQuantum of(double s);
  static SpinQuantum from_dim(int d);

  double s() const { return 0.5 * twice_s; }
  int dim() const { return twice_s + 1; }
  bool half_integer() const { return twice_s % 2 != 0; }
};

/// Unit vector in real 3-space selecting a spin projection axis.
/// Inputs within kNormSlack of unit length are renormalized exactly;
/// anything farther throws.
class Direction {
public:
  Direction(double x, double y, double z);
  explicit Direction(const Vec3& v) : Direction(v.x(), v.y(), v.z()) {}

  /// theta measured from +z (colatitude), phi from +x in the xy plane.
  static Direction polar(double theta, double phi);

  static Direction x_axis() { return {1.0, 0.0, 0.0}; }
  static Direction y_axis() { return {0.0, 1.0, 0.0}; }
  static Direction z_axis() { return {0.0, 0.0, 1.0}; }

  const Vec3& vec() const { return n_; }
  double x() const { return n_.x(); }
  double y() const { return n_.y(); }
  double z() const { return n_.z(); }
  double theta() const;
  double phi() const;

  Direction operator-() const { return {-n_.x(), -n_.y(), -n_.z()}; }

private:
  Vec3 n_;
};

/// d x d complex matrix with declared structure flags. The flags are
/// promises set by the constructing operation; validate_structure checks
/// them against the entries.
struct Operator {
  Matrix mat;
  bool hermitian = false;
  bool unitary = false;
  bool diagonal = false;

  Eigen::Index dim() const { return mat.rows(); }
};

/// Throws std::invalid_argument naming the violated flag.
void validate_structure(const Operator& op, double tol = kStructTol);

/// Unit-norm amplitude vector in the S_z eigenbasis, components ordered by
/// m = s, s-1, ..., -s (descending).
class StateVector {
public:
  static StateVector normalized(CVector amps, double slack = kNormSlack);
  static StateVector normalized(std::initializer_list<Complex> amps,
                                double slack = kNormSlack);

  /// Normalizes unconditionally (for constructions written with unnormalized
  /// amplitudes, e.g. {1, 1, 1}). Rejects the zero vector.
  static StateVector scaled(CVector amps);
  static StateVector scaled(std::initializer_list<Complex> amps);

  const CVector& vec() const { return amps_; }
  Eigen::Index dim() const { return amps_.size(); }
  Complex operator[](Eigen::Index i) const { return amps_(i); }

private:
  explicit StateVector(CVector v) : amps_(std::move(v)) {}
  CVector amps_;
};

/// Result of a phase-insensitive comparison. When matches is true,
/// b == phase * a up to the supplied tolerance.
struct PhaseMatch {
  bool matches = false;
  Complex phase{1.0, 0.0};
};

}  // namespace spinmub
