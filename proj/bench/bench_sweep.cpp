// Timing comparison of the OpenMP Monte Carlo harness against the serial
// reference. Run manually: build/bench/bench_sweep [trials]

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "bellforge/montecarlo.hpp"

using namespace bellforge;

namespace {

template <typename F>
double time_seconds(F &&f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char **argv) {
    const int trials = argc > 1 ? std::atoi(argv[1]) : 20000;

    std::vector<SampleRow> a, b;
    const double t_serial = time_seconds([&] { a = run_sample_serial(trials, 7, Sign::Plus); });
    const double t_parallel = time_seconds([&] { b = run_sample(trials, 7, Sign::Plus); });
    std::printf("sample  trials=%d  serial %.3f s  parallel %.3f s  speedup %.2fx\n", trials,
                t_serial, t_parallel, t_serial / t_parallel);

    SweepSpec spec;
    spec.noise = NoiseKind::Ginibre;
    spec.epsilons = {0.01, 0.02, 0.04, 0.08};
    spec.steps = 3;
    spec.trials = trials / 40;
    spec.seed = 7;
    std::vector<SweepRow> c, d;
    const double s_serial = time_seconds([&] { c = run_sweep_serial(spec); });
    const double s_parallel = time_seconds([&] { d = run_sweep(spec); });
    std::printf("sweep   rows=%zu  serial %.3f s  parallel %.3f s  speedup %.2fx\n", c.size(),
                s_serial, s_parallel, s_serial / s_parallel);

    // Results must be identical regardless of scheduling.
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i].p_cumulative != b[i].p_cumulative) {
            std::printf("MISMATCH at sample row %zu\n", i);
            return 1;
        }
    for (size_t i = 0; i < c.size(); ++i)
        if (c[i].fidelity != d[i].fidelity) {
            std::printf("MISMATCH at sweep row %zu\n", i);
            return 1;
        }
    return 0;
}
