#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "spinmub/mub.hpp"
#include "spinmub/sampler.hpp"
#include "spinmub/spin_algebra.hpp"
#include "spinmub/types.hpp"

namespace spinmub {

enum class PulseKind { rotation, twisting, fixed_unitary };

/// One physical pulse: matrix holds the resolved unitary and, for rotation /
/// twisting kinds, equals the exponential of the description.
struct Pulse {
  PulseKind kind = PulseKind::fixed_unitary;
  Direction axis = Direction::z_axis();
  double duration = 0.0;
  Operator matrix;
};

/// Pulses listed in application order; net = pulses[n-1].matrix ... pulses[0].matrix.
struct Circuit {
  std::vector<Pulse> pulses;
  Operator net;
};

/// Recompute the ordered product of the pulse matrices (identity when empty).
Operator circuit_net(const std::vector<Pulse>& pulses, int dim = 3);

/// The complex Hadamard reached by one-axis twisting about the tetrahedral
/// axis null_direction(phi) for time 2 pi / 3, written out explicitly:
///
///          ( e^{i pi/3}   e^{-i phi}    e^{-2i phi} )
///  1/sqrt3 ( e^{i phi}    e^{i pi/3}   -e^{-i phi}  )
///          ( e^{2i phi}  -e^{i phi}     e^{i pi/3}  )
///
/// Unitary with every entry of modulus 1/sqrt3; equals
/// twisting(null_direction(phi), 2 pi/3) up to the global phase e^{-5i pi/6}.
Operator twisting_hadamard(double phi);

/// Operationally generated quadruple: computational basis, the columns of
/// twisting_hadamard(phi), and those columns advanced by one and two
/// one-axis twisting 2 pi/3 pulses about z.
MubSet generated_mub_set(double phi);

struct Preparation {
  Circuit circuit;
  StateVector state;
};

/// Pulse sequence that turns computational vector state_index into
/// generated_mub_set(phi)[basis_index][state_index] (up to global phase).
Preparation prepare(int basis_index, int state_index, double phi);

/// Circuit whose net unitary maps every vector of generated MUB basis_index
/// to a computational basis vector up to phase. The number of z-twisting
/// pulses (0, 1 or 2) ahead of the inverse Hadamard is resolved
/// constructively: candidates are tried in that order and the first one
/// whose net passes the mapping check is kept. The inverse Hadamard is the
/// 4 pi/3 twisting pulse about the same tetrahedral axis.
Circuit measurement_circuit(int basis_index, double phi);

/// Born probabilities of measure() outcomes: applies the measurement circuit
/// and reads computational-basis weights.
std::vector<double> outcome_distribution(const StateVector& state, int basis_index,
                                         double phi);

/// Measurement pipeline: measurement_circuit then a computational-basis
/// projective sample. Stream rule: identical to born_sample (one stream from
/// (seed, kSaltBorn), shot i consumes draw i).
Counts measure(const StateVector& state, int basis_index, double phi, long long shots,
               std::uint64_t seed, Exec exec = Exec::parallel);

/// Complete-MUB linear reconstruction rho = sum_b sum_k p[b][k] |b_k><b_k| - I.
/// rho_raw is the unaltered reconstruction; rho_projected clips negative
/// eigenvalues and renormalizes the trace. negative is set when the raw
/// minimum eigenvalue lies below -1e-8 (sampling noise).
struct Tomography {
  Matrix rho_raw;
  Matrix rho_projected;
  Eigen::VectorXd eigenvalues;
  bool negative = false;
};

Tomography tomography(const std::array<std::array<double, 3>, 4>& probs, const MubSet& set);

/// Key-distribution sift on an ideal (optionally depolarizing) channel.
/// n_bases = 2 uses generated bases {computational, twisting-Hadamard};
/// n_bases = 4 uses the full quadruple. Stream rule: one stream from
/// (seed, kSaltQkd); round r consumes draws 6r..6r+5 as
/// {alice basis, alice symbol, bob basis, outcome u, noise coin, noisy outcome}.
struct QkdResult {
  long long rounds = 0;
  long long sifted = 0;
  long long errors = 0;
  double sifted_fraction = 0.0;
  double qber = 0.0;
  int n_bases = 2;
  std::array<long long, 4> alice_basis_hist{0, 0, 0, 0};
  std::array<long long, 4> bob_basis_hist{0, 0, 0, 0};
};

QkdResult qkd_sift(long long rounds, int n_bases, double phi, std::uint64_t seed,
                   double noise = 0.0, Exec exec = Exec::parallel);

/// Parameters (t, theta) such that rotation(z, theta) * twisting(z, t)
/// carries the columns of twisting_hadamard(phi) onto the Fourier columns up
/// to per-column phases. Solved numerically from the column phase pattern;
/// residual reports the worst column mismatch after applying the solution.
struct FourierCompletion {
  double twist_time = 0.0;
  double rotation_angle = 0.0;
  double residual = 0.0;
};

FourierCompletion fourier_completion(double phi);

}  // namespace spinmub
