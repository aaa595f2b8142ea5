#pragma once

#include <optional>
#include <vector>

#include "bellforge/core_step.hpp"

namespace bellforge {

// Record of an iterated run. Cumulative probability follows the depth-k
// binary tree: P1^(2^(k-1)) * P2^(2^(k-2)) * ... * Pk, all copies at a
// level sharing the same input state. pairs_consumed = 2^k.
struct IterationTrace {
    std::vector<double> step_probabilities;
    std::vector<Density2Q> step_states;  // unnormalized outputs, one per step
    double cumulative_probability = 0.0;
    int pairs_consumed = 0;
    std::optional<int> failed_at_step;  // 1-based
    double final_fidelity_phi_plus = 0.0;  // valid only on success

    bool succeeded() const { return !failed_at_step.has_value(); }
};

// Two-step unambiguous concentration of a pure input. Every success yields
// the Phi+ Bell state.
IterationTrace concentrate(const PureState2Q &s, Sign sign);

// k-step distillation of a mixed input, k in {2, 3}.
IterationTrace distill(const Density2Q &rho, Sign sign, int steps);

// First-order noise operators carried through the iterations for
// rho = |psi><psi| + eps M (U+ only).
struct PerturbationSeries {
    PureState2Q psi;
    CMatrix m{4};
    CMatrix m1{4};  // after step 1
    CMatrix m2{4};  // after step 2
    CMatrix m3{4};  // after step 3; proportional to |Phi+><Phi+|
};

PerturbationSeries perturbation_series(const PureState2Q &psi, const CMatrix &m);

struct RetryResult {
    IterationTrace trace;
    int attempts = 0;
    bool exhausted = false;
};

// Run concentrate; on failure scramble with fresh random local unitaries and
// retry, up to max_attempts. Entangled blind-spot inputs escape with
// probability ~1; separable inputs keep failing and exhaust.
RetryResult scramble_and_retry(const PureState2Q &s, Sign sign, Rng &rng, int max_attempts);

// Expected input pairs per successful output under the all-or-nothing model.
double expected_cost(const IterationTrace &trace);

}  // namespace bellforge
