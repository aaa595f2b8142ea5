#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bellforge/protocol.hpp"

namespace bellforge {

struct SampleRow {
    int trial = 0;
    double concurrence = 0.0;
    InputClass cls = InputClass::GenericEntangled;
    double p_step1 = 0.0;
    double p_step2 = 0.0;
    double p_cumulative = 0.0;
    double fidelity = 0.0;  // 0 on failure
};

// Haar-random pure inputs through the two-step concentration scheme.
// Trial i uses an independent RNG stream seeded with seed ^ i, so the result
// does not depend on scheduling.
std::vector<SampleRow> run_sample(int trials, std::uint64_t seed, Sign sign);
std::vector<SampleRow> run_sample_serial(int trials, std::uint64_t seed, Sign sign);

struct SweepSpec {
    bool haar_random_base = true;     // fresh Haar base per trial
    PureState2Q base_state;           // used when haar_random_base is false
    NoiseKind noise = NoiseKind::White;
    std::vector<double> epsilons;     // ascending, in (0, 1)
    int steps = 3;
    Sign sign = Sign::Plus;
    int trials = 1;
    std::uint64_t seed = 0;
};

struct SweepRow {
    double epsilon = 0.0;
    int trial = 0;
    int steps = 0;
    Sign sign = Sign::Plus;
    double p_cumulative = 0.0;
    double fidelity = 0.0;
    double infidelity = 1.0;
    int failed_at_step = 0;  // 0 = success
};

std::vector<SweepRow> run_sweep(const SweepSpec &spec);
std::vector<SweepRow> run_sweep_serial(const SweepSpec &spec);

// Least-squares slope of log(y) vs log(x).
double loglog_slope(const std::vector<double> &x, const std::vector<double> &y);

}  // namespace bellforge
