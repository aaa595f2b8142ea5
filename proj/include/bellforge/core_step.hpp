#pragma once

#include "bellforge/gates.hpp"
#include "bellforge/states.hpp"

namespace bellforge {

enum class Representation { ClosedForm, Oracle };

struct PureStepOutcome {
    PureState2Q state;  // unnormalized
    double probability = 0.0;
    Sign sign = Sign::Plus;
    Representation representation = Representation::ClosedForm;

    bool failed() const { return probability < kFailureThreshold; }
};

// Intermediate terms of the closed-form mixed map, kept visible for tests.
struct XTerms {
    double a_plus = 0, a_minus = 0;
    double b_plus = 0, b_minus = 0;
    Complex d_plus{}, d_minus{};
};

struct MixedStepOutcome {
    Density2Q state;  // unnormalized X-state
    double probability = 0.0;
    Sign sign = Sign::Plus;
    Representation representation = Representation::ClosedForm;
    XTerms terms{};

    bool failed() const { return probability < kFailureThreshold; }
};

// One core step on two copies of a pure state:
//   c1' = c1 c4 +- c2 c3,  c2' = c3' = 0,  c4' = c1 c4 -+ c2 c3.
// Success probability |c1'|^2 + |c4'|^2.
PureStepOutcome step_pure_closed(const PureState2Q &s, Sign sign);

// Brute-force route: build |psi>_13 x |psi>_24 in 16 dimensions, apply
// U x U, project qubits 2 and 4 onto |0>.
PureStepOutcome step_pure_oracle(const PureState2Q &s, Sign sign);

// Raw closed-form mixed map on an arbitrary 4x4 input (no density validation,
// no normalization requirement). Quadratic in the input.
CMatrix x_step_apply(const CMatrix &rho, Sign sign, XTerms *terms = nullptr);

// One core step on two copies of a normalized density operator; output in
// X-state form, trace 4 a+.
MixedStepOutcome step_mixed_closed(const Density2Q &rho, Sign sign);

// Brute-force route via the 16x16 product state.
MixedStepOutcome step_mixed_oracle(const Density2Q &rho, Sign sign);

// Same 16-dim route without density validation, for perturbation tests.
CMatrix mixed_oracle_apply(const CMatrix &rho, Sign sign);

}  // namespace bellforge
