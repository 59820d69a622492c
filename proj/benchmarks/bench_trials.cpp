// Throughput comparison of the serial reference trial loop against the
// OpenMP runner, on a moderate Erdos-Renyi host.
#include <cstdio>
#include <cstdlib>

#include "subsample/generators.hpp"
#include "subsample/harness.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace subsample;

int main(int argc, char** argv) {
  long long trials = argc > 1 ? std::atoll(argv[1]) : 2000000;
  HostGraph g = make_erdos_renyi(24, 0.4, 7);
  Pattern h = Pattern::parse("K3");
  Decomposition t = decompose(h);
  long long f = count_configurations(h, t);

  RunConfig cfg;
  cfg.trials = trials;
  cfg.seed = 42;

  cfg.threads = 0;
  RunResult serial = run_trials_reference(g, h, t, f, cfg);
  std::printf("serial   : %lld trials, %lld successes, %.3f s (%.2f Mtrials/s)\n",
              serial.trials, serial.successes, serial.wall_seconds,
              trials / serial.wall_seconds / 1e6);

  int max_threads = 1;
#ifdef _OPENMP
  max_threads = omp_get_max_threads();
#endif
  for (int threads : {2, 4, max_threads}) {
    if (threads <= 1) continue;
    cfg.threads = threads;
    RunResult par = run_trials(g, h, t, f, cfg);
    bool same = par.successes == serial.successes &&
                par.histogram == serial.histogram;
    std::printf("omp x%-3d : %lld trials, %lld successes, %.3f s (%.2f Mtrials/s) "
                "speedup %.2fx, matches serial: %s\n",
                threads, par.trials, par.successes, par.wall_seconds,
                trials / par.wall_seconds / 1e6,
                serial.wall_seconds / par.wall_seconds, same ? "yes" : "NO");
    if (!same) return 1;
  }
  return 0;
}
