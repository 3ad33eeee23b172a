#pragma once

#include "spinmub/types.hpp"

namespace spinmub {

/// The three spin projection operators for one spin quantum number.
/// Conventions: hbar = 1, Condon-Shortley ladder phases, basis ordered by
/// m = s, s-1, ..., -s, so z.mat = diag(s, s-1, ..., -s). With these choices
/// [S_i, S_j] = i eps_ijk S_k holds cyclically.
struct SpinOperators {
  SpinQuantum sq;
  Operator x, y, z;
};

SpinOperators spin_operators(SpinQuantum sq);

/// n_x S_x + n_y S_y + n_z S_z; hermitian with the same spectrum as S_z.
Operator spin_along(const SpinOperators& ops, const Direction& dir);

/// exp(-i H t) by spectral decomposition of the hermitian H.
/// Rejects matrices with ||H - H^dag||_F beyond kStructTol.
Operator propagator(const Operator& h, double t);

/// exp(-i angle S_dir): spin rotation about dir.
Operator rotation(const SpinOperators& ops, const Direction& dir, double angle);

/// exp(-i t S_dir^2): one-axis twisting about dir.
Operator twisting(const SpinOperators& ops, const Direction& dir, double t);

/// Phase-insensitive comparison. For unit vectors a, b: matches iff
/// |<a|b>| >= 1 - tol; for unitaries: |tr(A^dag B)|/d >= 1 - tol.
/// On a match, b == phase * a up to tol.
PhaseMatch equal_up_to_phase(const StateVector& a, const StateVector& b,
                             double tol = kDerivedTol);
PhaseMatch equal_up_to_phase(const Operator& a, const Operator& b,
                             double tol = kDerivedTol);

/// op.mat * state, renormalized (removes eigensolver-level norm drift).
StateVector apply(const Operator& op, const StateVector& state);

}  // namespace spinmub
