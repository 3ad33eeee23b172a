#include "spinmub/mub.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spinmub {

namespace {
constexpr double kOrthoTol = 1e-10;
const Complex kI{0.0, 1.0};
}  // namespace

Basis Basis::from_columns(const Matrix& m, std::string label) {
  Basis b;
  b.dim = static_cast<int>(m.rows());
  b.label = std::move(label);
  b.vectors.reserve(m.cols());
  for (Eigen::Index k = 0; k < m.cols(); ++k) {
    b.vectors.push_back(StateVector::scaled(m.col(k)));
  }
  return b;
}

Basis computational_basis(int d) {
  return Basis::from_columns(Matrix::Identity(d, d), "computational");
}

std::pair<Operator, Operator> weyl_pair(int d) {
  if (d < 2) throw std::invalid_argument("weyl_pair requires d >= 2");
  const Complex q = std::polar(1.0, 2.0 * std::numbers::pi / d);

  Matrix u = Matrix::Zero(d, d);
  for (int k = 0; k < d; ++k) u((k + d - 1) % d, k) = 1.0;

  Matrix v = Matrix::Zero(d, d);
  Complex qj{1.0, 0.0};
  for (int j = 0; j < d; ++j) {
    v(j, j) = qj;
    qj *= q;
  }
  return {Operator{std::move(u), false, true, false}, Operator{std::move(v), false, true, true}};
}

Operator fourier_matrix(int d) {
  if (d < 2) throw std::invalid_argument("fourier_matrix requires d >= 2");
  Matrix f(d, d);
  const double step = 2.0 * std::numbers::pi / d;
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (int j = 0; j < d; ++j) {
    for (int k = 0; k < d; ++k) {
      f(j, k) = std::polar(scale, step * ((j * k) % d));
    }
  }
  return Operator{std::move(f), false, true, false};
}

MubSet standard_mubs3() {
  const Complex w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
  const Complex wc = std::conj(w);
  const Complex one{1.0, 0.0};

  auto make_basis = [](std::initializer_list<std::array<Complex, 3>> cols, std::string label) {
    Basis b;
    b.dim = 3;
    b.label = std::move(label);
    for (const auto& c : cols) b.vectors.push_back(StateVector::scaled({c[0], c[1], c[2]}));
    return b;
  };

  MubSet set;
  set.dim = 3;
  set.bases.push_back(computational_basis(3));
  set.bases.push_back(make_basis({{one, one, one}, {one, w, wc}, {one, wc, w}}, "fourier"));
  set.bases.push_back(make_basis({{one, w, one}, {one, wc, wc}, {one, one, w}}, "twist1"));
  set.bases.push_back(make_basis({{one, wc, one}, {one, one, wc}, {one, w, w}}, "twist2"));
  return set;
}

StateVector null_state(const Direction& dir) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  const Complex top = Complex(-dir.x(), dir.y()) * inv_sqrt2;
  const Complex bot = Complex(dir.x(), dir.y()) * inv_sqrt2;
  return StateVector::scaled({top, Complex(dir.z(), 0.0), bot});
}

Basis null_basis(const std::array<Direction, 3>& dirs) {
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      const double dot = std::abs(dirs[a].vec().dot(dirs[b].vec()));
      if (dot > kOrthoTol) {
        throw std::invalid_argument("null_basis requires mutually orthogonal directions, |dot| = " +
                                    std::to_string(dot));
      }
    }
  }
  Basis b;
  b.dim = 3;
  b.label = "null-frame";
  for (const auto& d : dirs) b.vectors.push_back(null_state(d));
  return b;
}

Operator two_axis_operator(const Direction& i, const Direction& j) {
  const double dot = std::abs(i.vec().dot(j.vec()));
  if (dot > kOrthoTol) {
    throw std::invalid_argument("two_axis_operator requires orthogonal axes, |dot| = " +
                                std::to_string(dot));
  }
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  Matrix sx = Matrix::Zero(3, 3), sy = Matrix::Zero(3, 3), sz = Matrix::Zero(3, 3);
  sx(0, 1) = sx(1, 0) = sx(1, 2) = sx(2, 1) = inv_sqrt2;
  sy(0, 1) = sy(1, 2) = -kI * inv_sqrt2;
  sy(1, 0) = sy(2, 1) = kI * inv_sqrt2;
  sz(0, 0) = 1.0;
  sz(2, 2) = -1.0;
  const Matrix si = i.x() * sx + i.y() * sy + i.z() * sz;
  const Matrix sj = j.x() * sx + j.y() * sy + j.z() * sz;
  return Operator{si * si - sj * sj, true, false, false};
}

UnbiasednessReport unbiasedness(const Basis& a, const Basis& b, double tol) {
  if (a.dim != b.dim) throw std::invalid_argument("unbiasedness: dimension mismatch");
  const double target = 1.0 / a.dim;
  UnbiasednessReport rep;
  rep.tol = tol;
  for (int j = 0; j < static_cast<int>(a.vectors.size()); ++j) {
    for (int k = 0; k < static_cast<int>(b.vectors.size()); ++k) {
      const Complex ov = a.vectors[j].vec().dot(b.vectors[k].vec());
      const double dev = std::abs(std::norm(ov) - target);
      if (dev > rep.max_deviation) {
        rep.max_deviation = dev;
        rep.worst_pair = {0, j, 1, k};
      }
    }
  }
  rep.pass = rep.max_deviation <= tol;
  return rep;
}

UnbiasednessReport mub_set_valid(const MubSet& set, double tol) {
  if (set.bases.size() < 2) {
    throw std::invalid_argument("mub_set_valid requires at least two bases");
  }
  UnbiasednessReport rep;
  rep.tol = tol;
  for (std::size_t a = 0; a < set.bases.size(); ++a) {
    if (set.bases[a].dim != set.dim) {
      throw std::invalid_argument("mub_set_valid: basis dimension mismatch");
    }
    for (std::size_t b = a + 1; b < set.bases.size(); ++b) {
      const UnbiasednessReport pair = unbiasedness(set.bases[a], set.bases[b], tol);
      if (pair.max_deviation > rep.max_deviation) {
        rep.max_deviation = pair.max_deviation;
        rep.worst_pair = {static_cast<int>(a), pair.worst_pair[1], static_cast<int>(b),
                          pair.worst_pair[3]};
      }
    }
    for (std::size_t j = 0; j < set.bases[a].vectors.size(); ++j) {
      for (std::size_t k = 0; k < set.bases[a].vectors.size(); ++k) {
        const Complex ov = set.bases[a].vectors[j].vec().dot(set.bases[a].vectors[k].vec());
        const double dev = std::abs(ov - (j == k ? 1.0 : 0.0));
        rep.max_orthonormality_deviation = std::max(rep.max_orthonormality_deviation, dev);
      }
    }
  }
  rep.pass = rep.max_deviation <= tol && rep.max_orthonormality_deviation <= tol;
  return rep;
}

}  // namespace spinmub
