// Compares the serial reference sampling kernels against the OpenMP ones.
// The two paths must produce identical counts (checked here as well as in
// the test suite); the table reports wall times and speedup.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "spinmub/mub.hpp"
#include "spinmub/protocol.hpp"
#include "spinmub/sampler.hpp"
#include "spinmub/squeezing.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Row {
  std::string name;
  double serial_s = 0.0;
  double parallel_s = 0.0;
  bool identical = false;
};

void print(const Row& r) {
  std::printf("%-28s serial %8.3f ms   parallel %8.3f ms   speedup %5.2fx   identical %s\n",
              r.name.c_str(), 1e3 * r.serial_s, 1e3 * r.parallel_s,
              r.parallel_s > 0 ? r.serial_s / r.parallel_s : 0.0,
              r.identical ? "yes" : "NO");
}

}  // namespace

int main(int argc, char** argv) {
  long long shots = 8'000'000;
  long long rounds = 2'000'000;
  if (argc > 1) shots = std::atoll(argv[1]);
  if (argc > 2) rounds = std::atoll(argv[2]);

#ifdef _OPENMP
  std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; parallel path falls back to serial\n");
#endif

  const spinmub::StateVector state = spinmub::alpha_state(spinmub::AlphaKind::polarized, 0.3);
  const spinmub::Basis comp = spinmub::computational_basis(3);

  {
    Row row{"born_sample " + std::to_string(shots), 0, 0, false};
    auto t0 = Clock::now();
    const spinmub::Counts serial =
        spinmub::born_sample(state, comp, shots, 42, spinmub::Exec::serial);
    row.serial_s = seconds_since(t0);
    t0 = Clock::now();
    const spinmub::Counts parallel =
        spinmub::born_sample(state, comp, shots, 42, spinmub::Exec::parallel);
    row.parallel_s = seconds_since(t0);
    row.identical = serial.outcomes == parallel.outcomes;
    print(row);
  }

  {
    Row row{"qkd_sift " + std::to_string(rounds), 0, 0, false};
    auto t0 = Clock::now();
    const spinmub::QkdResult serial =
        spinmub::qkd_sift(rounds, 4, 0.25, 42, 0.0, spinmub::Exec::serial);
    row.serial_s = seconds_since(t0);
    t0 = Clock::now();
    const spinmub::QkdResult parallel =
        spinmub::qkd_sift(rounds, 4, 0.25, 42, 0.0, spinmub::Exec::parallel);
    row.parallel_s = seconds_since(t0);
    row.identical = serial.sifted == parallel.sifted && serial.errors == parallel.errors &&
                    serial.alice_basis_hist == parallel.alice_basis_hist &&
                    serial.bob_basis_hist == parallel.bob_basis_hist;
    print(row);
  }
  return 0;
}
