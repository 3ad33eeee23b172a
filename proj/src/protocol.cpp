#include "spinmub/protocol.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "spinmub/rng.hpp"
#include "spinmub/squeezing.hpp"

namespace spinmub {

namespace {

constexpr double kTwoPiOver3 = 2.0 * std::numbers::pi / 3.0;

void check_basis_index(int basis_index) {
  if (basis_index < 0 || basis_index > 3) {
    throw std::invalid_argument("basis index must lie in 0..3");
  }
}

Pulse twisting_pulse(const SpinOperators& ops, const Direction& axis, double t) {
  return Pulse{PulseKind::twisting, axis, t, twisting(ops, axis, t)};
}

/// True when op maps every vector of b onto the computational vector with the
/// same index, up to phase.
bool maps_to_computational(const Operator& op, const Basis& b, double tol) {
  for (std::size_t k = 0; k < b.vectors.size(); ++k) {
    const CVector mapped = op.mat * b.vectors[k].vec();
    if (std::abs(std::abs(mapped(static_cast<Eigen::Index>(k))) - 1.0) > tol) return false;
  }
  return true;
}

}  // namespace

Operator circuit_net(const std::vector<Pulse>& pulses, int dim) {
  Matrix net = Matrix::Identity(dim, dim);
  for (const Pulse& p : pulses) net = p.matrix.mat * net;
  return Operator{std::move(net), false, true, false};
}

Operator twisting_hadamard(double phi) {
  const double inv_sqrt3 = 1.0 / std::sqrt(3.0);
  const Complex diag = std::polar(inv_sqrt3, std::numbers::pi / 3.0);
  const Complex ep = std::polar(inv_sqrt3, phi);
  const Complex em = std::polar(inv_sqrt3, -phi);
  const Complex ep2 = std::polar(inv_sqrt3, 2.0 * phi);
  const Complex em2 = std::polar(inv_sqrt3, -2.0 * phi);

  Matrix h(3, 3);
  h << diag, em, em2,
       ep, diag, -em,
       ep2, -ep, diag;
  return Operator{std::move(h), false, true, false};
}

MubSet generated_mub_set(double phi) {
  const SpinOperators ops = spin_operators(SpinQuantum::of(1.0));
  const Matrix h = twisting_hadamard(phi).mat;
  const Matrix t = twisting(ops, Direction::z_axis(), kTwoPiOver3).mat;

  MubSet set;
  set.dim = 3;
  set.bases.push_back(computational_basis(3));
  set.bases.push_back(Basis::from_columns(h, "hadamard"));
  set.bases.push_back(Basis::from_columns(t * h, "t-hadamard"));
  set.bases.push_back(Basis::from_columns(t * t * h, "t2-hadamard"));
  return set;
}

Preparation prepare(int basis_index, int state_index, double phi) {
  check_basis_index(basis_index);
  if (state_index < 0 || state_index > 2) {
    throw std::invalid_argument("state index must lie in 0..2");
  }
  const SpinOperators ops = spin_operators(SpinQuantum::of(1.0));

  Circuit circuit;
  if (basis_index >= 1) {
    circuit.pulses.push_back(twisting_pulse(ops, null_direction(phi), kTwoPiOver3));
    for (int j = 1; j < basis_index; ++j) {
      circuit.pulses.push_back(twisting_pulse(ops, Direction::z_axis(), kTwoPiOver3));
    }
  }
  circuit.net = circuit_net(circuit.pulses);

  CVector comp = CVector::Zero(3);
  comp(state_index) = 1.0;
  StateVector state = StateVector::scaled(circuit.net.mat * comp);
  return Preparation{std::move(circuit), std::move(state)};
}

Circuit measurement_circuit(int basis_index, double phi) {
  check_basis_index(basis_index);
  Circuit circuit;
  if (basis_index == 0) {
    circuit.net = Operator{Matrix::Identity(3, 3), false, true, true};
    return circuit;
  }

  const SpinOperators ops = spin_operators(SpinQuantum::of(1.0));
  const Pulse inverse_hadamard =
      twisting_pulse(ops, null_direction(phi), 2.0 * kTwoPiOver3);
  const MubSet set = generated_mub_set(phi);
  const Basis& target = set.bases[static_cast<std::size_t>(basis_index)];

  for (int z_pulses = 0; z_pulses <= 2; ++z_pulses) {
    std::vector<Pulse> pulses;
    for (int j = 0; j < z_pulses; ++j) {
      pulses.push_back(twisting_pulse(ops, Direction::z_axis(), kTwoPiOver3));
    }
    pulses.push_back(inverse_hadamard);
    Operator net = circuit_net(pulses);
    if (maps_to_computational(net, target, 1e-9)) {
      circuit.pulses = std::move(pulses);
      circuit.net = std::move(net);
      return circuit;
    }
  }
  throw std::logic_error("measurement_circuit: no pulse count maps the basis (unreachable)");
}

std::vector<double> outcome_distribution(const StateVector& state, int basis_index,
                                         double phi) {
  const Circuit circuit = measurement_circuit(basis_index, phi);
  const CVector mapped = circuit.net.mat * state.vec();
  std::vector<double> probs(3);
  double total = 0.0;
  for (int k = 0; k < 3; ++k) {
    probs[static_cast<std::size_t>(k)] = std::norm(mapped(k));
    total += probs[static_cast<std::size_t>(k)];
  }
  for (double& p : probs) p /= total;
  return probs;
}

Counts measure(const StateVector& state, int basis_index, double phi, long long shots,
               std::uint64_t seed, Exec exec) {
  if (state.dim() != 3) throw std::invalid_argument("measure expects a spin-1 state");
  return sample_distribution(outcome_distribution(state, basis_index, phi), shots, seed,
                             rng::kSaltBorn, exec);
}

Tomography tomography(const std::array<std::array<double, 3>, 4>& probs, const MubSet& set) {
  if (set.dim != 3 || set.bases.size() != 4) {
    throw std::invalid_argument("tomography requires a complete set of 4 bases in d = 3");
  }
  const UnbiasednessReport rep = mub_set_valid(set, 1e-8);
  if (!rep.pass) {
    throw std::invalid_argument("tomography basis set is not mutually unbiased");
  }
  for (const auto& row : probs) {
    const double sum = row[0] + row[1] + row[2];
    if (std::abs(sum - 1.0) > 1e-6) {
      throw std::invalid_argument("tomography probability row sums to " + std::to_string(sum) +
                                  " (must be 1 within 1e-6)");
    }
  }

  Matrix rho = -Matrix::Identity(3, 3);
  for (int b = 0; b < 4; ++b) {
    for (int k = 0; k < 3; ++k) {
      const CVector& v = set.bases[static_cast<std::size_t>(b)]
                             .vectors[static_cast<std::size_t>(k)]
                             .vec();
      rho += probs[static_cast<std::size_t>(b)][static_cast<std::size_t>(k)] *
             (v * v.adjoint());
    }
  }
  rho = 0.5 * (rho + rho.adjoint().eval());

  Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
  const Eigen::VectorXd ev = es.eigenvalues();

  Eigen::VectorXd clipped = ev.cwiseMax(0.0);
  const double total = clipped.sum();
  if (total <= 0.0) throw std::invalid_argument("tomography reconstruction has nonpositive trace");
  clipped /= total;

  Tomography result;
  result.rho_raw = rho;
  result.eigenvalues = ev;
  result.negative = ev.minCoeff() < -1e-8;
  result.rho_projected = es.eigenvectors() * clipped.asDiagonal().toDenseMatrix().cast<Complex>() *
                         es.eigenvectors().adjoint();
  return result;
}

QkdResult qkd_sift(long long rounds, int n_bases, double phi, std::uint64_t seed,
                   double noise, Exec exec) {
  if (rounds < 1) throw std::invalid_argument("rounds must be >= 1");
  if (n_bases != 2 && n_bases != 4) throw std::invalid_argument("n_bases must be 2 or 4");
  if (noise < 0.0 || noise > 1.0) throw std::invalid_argument("noise must lie in [0, 1]");

  const MubSet set = generated_mub_set(phi);

  // Cumulative outcome distributions for every (prepared basis a, symbol k,
  // measured basis b); the per-round loop is then pure table lookup.
  std::array<std::array<std::array<std::array<double, 3>, 4>, 3>, 4> cum{};
  for (int a = 0; a < n_bases; ++a) {
    for (int k = 0; k < 3; ++k) {
      const StateVector& prepared =
          set.bases[static_cast<std::size_t>(a)].vectors[static_cast<std::size_t>(k)];
      for (int b = 0; b < n_bases; ++b) {
        const std::vector<double> p = outcome_distribution(prepared, b, phi);
        cum[a][k][b][0] = p[0];
        cum[a][k][b][1] = p[0] + p[1];
        cum[a][k][b][2] = 1.0;
      }
    }
  }

  const rng::Stream st = rng::stream(seed, rng::kSaltQkd);
  const auto run_round = [&](long long r, QkdResult& acc) {
    const std::uint64_t base = static_cast<std::uint64_t>(r) * 6;
    const int a = static_cast<int>(st.pick(base + 0, static_cast<std::uint64_t>(n_bases)));
    const int k = static_cast<int>(st.pick(base + 1, 3));
    const int b = static_cast<int>(st.pick(base + 2, static_cast<std::uint64_t>(n_bases)));
    int outcome;
    if (noise > 0.0 && st.u01(base + 4) < noise) {
      outcome = static_cast<int>(st.pick(base + 5, 3));
    } else {
      const double u = st.u01(base + 3);
      const auto& c = cum[a][k][b];
      outcome = u < c[0] ? 0 : (u < c[1] ? 1 : 2);
    }
    acc.alice_basis_hist[static_cast<std::size_t>(a)]++;
    acc.bob_basis_hist[static_cast<std::size_t>(b)]++;
    if (a == b) {
      acc.sifted++;
      if (outcome != k) acc.errors++;
    }
  };

  QkdResult result;
  result.rounds = rounds;
  result.n_bases = n_bases;

#ifdef _OPENMP
  if (exec == Exec::parallel) {
    #pragma omp parallel
    {
      QkdResult local;
      #pragma omp for schedule(static)
      for (long long r = 0; r < rounds; ++r) run_round(r, local);
      #pragma omp critical
      {
        result.sifted += local.sifted;
        result.errors += local.errors;
        for (int i = 0; i < 4; ++i) {
          result.alice_basis_hist[static_cast<std::size_t>(i)] +=
              local.alice_basis_hist[static_cast<std::size_t>(i)];
          result.bob_basis_hist[static_cast<std::size_t>(i)] +=
              local.bob_basis_hist[static_cast<std::size_t>(i)];
        }
      }
    }
  } else
#else
  (void)exec;
#endif
  {
    for (long long r = 0; r < rounds; ++r) run_round(r, result);
  }

  result.sifted_fraction = static_cast<double>(result.sifted) / static_cast<double>(rounds);
  result.qber = result.sifted > 0
                    ? static_cast<double>(result.errors) / static_cast<double>(result.sifted)
                    : 0.0;
  return result;
}

FourierCompletion fourier_completion(double phi) {
  const Matrix h = twisting_hadamard(phi).mat;
  const Matrix f = fourier_matrix(3).mat;

  // Row 1 carries no unknown factor, so the column phases d_k follow from it;
  // rows 0 and 2 then fix the diagonal factors r_0, r_2 of
  // rotation(z, theta) * twisting(z, t) = diag(r_0, 1, r_2).
  std::array<Complex, 3> d{};
  for (int k = 0; k < 3; ++k) d[static_cast<std::size_t>(k)] = h(1, k) / f(1, k);
  const Complex r0 = f(0, 0) * d[0] / h(0, 0);
  const Complex r2 = f(2, 0) * d[0] / h(2, 0);

  FourierCompletion fc;
  fc.twist_time = -0.5 * (std::arg(r0) + std::arg(r2));
  fc.rotation_angle = 0.5 * (std::arg(r2) - std::arg(r0));
  // (t, theta) and (t + pi, theta + pi) give the same diagonal; report the
  // canonical branch with t in [0, pi) and theta in (-pi, pi].
  const double shift = std::floor(fc.twist_time / std::numbers::pi);
  fc.twist_time -= shift * std::numbers::pi;
  fc.rotation_angle = std::remainder(fc.rotation_angle - shift * std::numbers::pi,
                                     2.0 * std::numbers::pi);

  const SpinOperators ops = spin_operators(SpinQuantum::of(1.0));
  const Matrix w = rotation(ops, Direction::z_axis(), fc.rotation_angle).mat *
                   twisting(ops, Direction::z_axis(), fc.twist_time).mat * h;
  double worst = 0.0;
  for (int k = 0; k < 3; ++k) {
    const Complex phase = f.col(k).dot(w.col(k));  // <f_k|w_k>, unit on success
    worst = std::max(worst, (w.col(k) - phase * f.col(k)).norm());
  }
  fc.residual = worst;
  if (worst > 1e-9) {
    throw std::runtime_error("fourier_completion: solved parameters fail verification");
  }
  return fc;
}

}  // namespace spinmub
