#include "spinmub/sampler.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "spinmub/rng.hpp"

namespace spinmub {

namespace {

std::vector<double> cumulative(const std::vector<double>& probs) {
  double total = 0.0;
  for (double p : probs) {
    if (p < -1e-12) throw std::invalid_argument("negative probability");
    total += p;
  }
  if (total <= 0.0) throw std::invalid_argument("probabilities sum to zero");
  std::vector<double> cum(probs.size());
  double run = 0.0;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    run += probs[k] / total;
    cum[k] = run;
  }
  cum.back() = 1.0;
  return cum;
}

inline int draw(const std::vector<double>& cum, double u) {
  const auto it = std::upper_bound(cum.begin(), cum.end(), u);
  return static_cast<int>(std::min<std::ptrdiff_t>(it - cum.begin(),
                                                   static_cast<std::ptrdiff_t>(cum.size()) - 1));
}

}  // namespace

Counts sample_distribution(const std::vector<double>& probs, long long shots,
                           std::uint64_t seed, std::uint64_t salt, Exec exec) {
  if (shots < 1) throw std::invalid_argument("shots must be >= 1");
  const std::vector<double> cum = cumulative(probs);
  const int n = static_cast<int>(cum.size());
  const rng::Stream st = rng::stream(seed, salt);

  Counts counts;
  counts.shots = shots;
  counts.seed = seed;
  counts.outcomes.assign(n, 0);

#ifdef _OPENMP
  if (exec == Exec::parallel) {
    #pragma omp parallel
    {
      std::vector<long long> local(n, 0);
      #pragma omp for schedule(static)
      for (long long i = 0; i < shots; ++i) {
        local[draw(cum, st.u01(static_cast<std::uint64_t>(i)))]++;
      }
      #pragma omp critical
      for (int k = 0; k < n; ++k) counts.outcomes[k] += local[k];
    }
    return counts;
  }
#else
  (void)exec;
#endif
  for (long long i = 0; i < shots; ++i) {
    counts.outcomes[draw(cum, st.u01(static_cast<std::uint64_t>(i)))]++;
  }
  return counts;
}

Counts born_sample(const StateVector& state, const Basis& basis, long long shots,
                   std::uint64_t seed, Exec exec) {
  if (basis.dim != state.dim()) {
    throw std::invalid_argument("born_sample: basis/state dimension mismatch");
  }
  std::vector<double> probs(basis.vectors.size());
  for (std::size_t k = 0; k < basis.vectors.size(); ++k) {
    probs[k] = std::norm(basis.vectors[k].vec().dot(state.vec()));
  }
  return sample_distribution(probs, shots, seed, rng::kSaltBorn, exec);
}

}  // namespace spinmub
