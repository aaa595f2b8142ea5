#include "bellforge/montecarlo.hpp"

#include <cmath>
#include <stdexcept>

namespace bellforge {

namespace {

SampleRow sample_trial(int trial, std::uint64_t seed, Sign sign) {
    Rng rng(seed ^ static_cast<std::uint64_t>(trial));
    const PureState2Q s = random_pure(rng);
    const IterationTrace tr = concentrate(s, sign);
    SampleRow row;
    row.trial = trial;
    row.concurrence = concurrence_pure(s);
    row.cls = classify_input(s).cls;
    row.p_step1 = tr.step_probabilities.size() > 0 ? tr.step_probabilities[0] : 0.0;
    row.p_step2 = tr.step_probabilities.size() > 1 ? tr.step_probabilities[1] : 0.0;
    row.p_cumulative = tr.cumulative_probability;
    row.fidelity = tr.succeeded() ? tr.final_fidelity_phi_plus : 0.0;
    return row;
}

SweepRow sweep_trial(const SweepSpec &spec, std::size_t row_index) {
    const std::size_t n_eps = spec.epsilons.size();
    const double epsilon = spec.epsilons[row_index % n_eps];
    const int trial = static_cast<int>(row_index / n_eps);

    Rng rng(spec.seed ^ static_cast<std::uint64_t>(row_index));
    const PureState2Q base = spec.haar_random_base ? random_pure(rng) : spec.base_state;
    const Density2Q rho = random_density({spec.noise, epsilon}, base, rng);
    const IterationTrace tr = distill(rho, spec.sign, spec.steps);

    SweepRow row;
    row.epsilon = epsilon;
    row.trial = trial;
    row.steps = spec.steps;
    row.sign = spec.sign;
    row.p_cumulative = tr.cumulative_probability;
    row.fidelity = tr.succeeded() ? tr.final_fidelity_phi_plus : 0.0;
    row.infidelity = 1.0 - row.fidelity;
    row.failed_at_step = tr.failed_at_step.value_or(0);
    return row;
}

void validate(const SweepSpec &spec) {
    if (spec.trials < 1) throw std::invalid_argument("sweep: trials must be >= 1");
    if (spec.epsilons.empty()) throw std::invalid_argument("sweep: empty epsilon list");
    for (std::size_t i = 0; i < spec.epsilons.size(); ++i) {
        const double e = spec.epsilons[i];
        if (e <= 0.0 || e >= 1.0) throw std::invalid_argument("sweep: epsilon outside (0,1)");
        if (i > 0 && e <= spec.epsilons[i - 1])
            throw std::invalid_argument("sweep: epsilons must be sorted ascending");
    }
}

}  // namespace

std::vector<SampleRow> run_sample(int trials, std::uint64_t seed, Sign sign) {
    if (trials < 1) throw std::invalid_argument("sample: trials must be >= 1");
    std::vector<SampleRow> rows(static_cast<std::size_t>(trials));
#pragma omp parallel for schedule(dynamic, 64)
    for (int i = 0; i < trials; ++i) rows[static_cast<std::size_t>(i)] = sample_trial(i, seed, sign);
    return rows;
}

std::vector<SampleRow> run_sample_serial(int trials, std::uint64_t seed, Sign sign) {
    if (trials < 1) throw std::invalid_argument("sample: trials must be >= 1");
    std::vector<SampleRow> rows(static_cast<std::size_t>(trials));
    for (int i = 0; i < trials; ++i) rows[static_cast<std::size_t>(i)] = sample_trial(i, seed, sign);
    return rows;
}

std::vector<SweepRow> run_sweep(const SweepSpec &spec) {
    validate(spec);
    const std::size_t n = spec.epsilons.size() * static_cast<std::size_t>(spec.trials);
    std::vector<SweepRow> rows(n);
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
        rows[static_cast<std::size_t>(i)] = sweep_trial(spec, static_cast<std::size_t>(i));
    return rows;
}

std::vector<SweepRow> run_sweep_serial(const SweepSpec &spec) {
    validate(spec);
    const std::size_t n = spec.epsilons.size() * static_cast<std::size_t>(spec.trials);
    std::vector<SweepRow> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = sweep_trial(spec, i);
    return rows;
}

double loglog_slope(const std::vector<double> &x, const std::vector<double> &y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("loglog_slope: need >= 2 matching points");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]), ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace bellforge
