#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "spinmub/types.hpp"

namespace spinmub {

/// Orthonormal basis: dim vectors with |<v_j|v_k> - delta_jk| <= kDerivedTol.
struct Basis {
  int dim = 0;
  std::vector<StateVector> vectors;
  std::string label;

  static Basis from_columns(const Matrix& m, std::string label);
};

/// Ordered list of bases asserted pairwise unbiased.
struct MubSet {
  int dim = 0;
  std::vector<Basis> bases;
};

/// Verdict of an unbiasedness / set-validity check.
/// worst_pair = {basis index a, vector j, basis index b, vector k} of the
/// largest deviation from |<a_j|b_k>|^2 = 1/d. For pairwise checks pass
/// tracks max_deviation only; set checks also require orthonormality.
struct UnbiasednessReport {
  double max_deviation = 0.0;
  std::array<int, 4> worst_pair{0, 0, 0, 0};
  bool pass = false;
  double tol = kDerivedTol;
  double max_orthonormality_deviation = 0.0;
};

Basis computational_basis(int d);

/// Shift/clock pair: U|k> = |k-1 mod d>, V = diag(1, q, q^2, ...) with
/// q = exp(i 2 pi / d), so that U V = q V U exactly.
std::pair<Operator, Operator> weyl_pair(int d);

/// The canonical spin-1 MUB quadruple in row order: computational basis,
/// Fourier basis, and the two bases reached from it by diag(1, w, 1) and
/// diag(1, w, 1)^2, w = exp(i 2 pi / 3). Vector order inside each basis
/// follows the usual left-to-right listing; measurement outcomes and
/// tomography rows are indexed by this order.
MubSet standard_mubs3();

/// F_jk = w_d^{jk} / sqrt(d), w_d = exp(i 2 pi / d). Columns give the basis
/// unbiased to the computational one; for d = 3 column k is the k-th Fourier
/// MUB vector exactly.
Operator fourier_matrix(int d);

/// Spin-1 state annihilated by spin_along(dir), built as the real combination
/// n_x |X> + n_y |Y> + n_z |Z> of the Cartesian frame
///
///   |X> = (-1, 0, 1)/sqrt2,  |Y> = (i, 0, i)/sqrt2,  |Z> = (0, 1, 0).
///
/// |Y> carries the extra factor i relative to the common (1,0,1)/sqrt2 form,
/// and |X> is phase-flipped relative to the common (1,0,-1)/sqrt2: these are
/// the unique phases (up to one global factor) for which every real unit
/// combination is the null state of the same-named direction. With the
/// unflipped x state the combination lands on the reflected direction
/// (-n_x, n_y, n_z) instead.
StateVector null_state(const Direction& dir);

/// Null states of three mutually orthogonal directions; orthonormal.
Basis null_basis(const std::array<Direction, 3>& dirs);

/// Two-axis countertwisting observable S_i^2 - S_j^2 for orthogonal axes
/// (spin 1). Eigenvalues {1, 0, -1}; the eigenvectors are the null states of
/// axes j, k, i respectively (k the mutual orthogonal).
Operator two_axis_operator(const Direction& i, const Direction& j);

UnbiasednessReport unbiasedness(const Basis& a, const Basis& b, double tol = kDerivedTol);

/// Aggregates pairwise unbiasedness over all basis pairs and re-checks each
/// basis for orthonormality; pass requires both within tol.
UnbiasednessReport mub_set_valid(const MubSet& set, double tol = kDerivedTol);

}  // namespace spinmub
