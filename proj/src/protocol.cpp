#include "bellforge/protocol.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bellforge {

IterationTrace concentrate(const PureState2Q &s, Sign sign) {
    IterationTrace tr;
    tr.pairs_consumed = 4;

    const PureStepOutcome o1 = step_pure_closed(s, sign);
    tr.step_probabilities.push_back(o1.probability);
    tr.step_states.push_back(Density2Q::from_pure(o1.state));
    if (o1.failed()) {
        tr.failed_at_step = 1;
        tr.cumulative_probability = 0.0;
        return tr;
    }

    const PureStepOutcome o2 = step_pure_closed(o1.state.normalized(), sign);
    tr.step_probabilities.push_back(o2.probability);
    tr.step_states.push_back(Density2Q::from_pure(o2.state));
    tr.cumulative_probability = o1.probability * o1.probability * o2.probability;
    if (o2.failed()) {
        tr.failed_at_step = 2;
        tr.cumulative_probability = 0.0;
        return tr;
    }

    tr.final_fidelity_phi_plus =
        fidelity_with_pure(o2.state.normalized(), bell_state(BellState::PhiPlus));
    return tr;
}

IterationTrace distill(const Density2Q &rho, Sign sign, int steps) {
    if (steps != 2 && steps != 3) throw std::invalid_argument("distill: steps must be 2 or 3");
    if (!rho.is_valid()) throw std::invalid_argument("distill: input is not a density operator");

    IterationTrace tr;
    tr.pairs_consumed = 1 << steps;

    Density2Q current = rho.normalized();
    double cumulative = 1.0;
    for (int k = 1; k <= steps; ++k) {
        const MixedStepOutcome o = step_mixed_closed(current, sign);
        tr.step_probabilities.push_back(o.probability);
        tr.step_states.push_back(o.state);
        cumulative *= std::pow(o.probability, 1 << (steps - k));
        if (o.failed()) {
            tr.failed_at_step = k;
            tr.cumulative_probability = 0.0;
            return tr;
        }
        current = o.state.normalized();
    }
    tr.cumulative_probability = cumulative;
    tr.final_fidelity_phi_plus = fidelity_with_pure(current, bell_state(BellState::PhiPlus));
    return tr;
}

PerturbationSeries perturbation_series(const PureState2Q &psi, const CMatrix &m) {
    if (!psi.is_normalized(1e-10))
        throw std::invalid_argument("perturbation_series: psi not normalized");
    if (m.n != 4 || !hermitize_check(m, 1e-10))
        throw std::invalid_argument("perturbation_series: M must be 4x4 Hermitian");
    if (std::abs(trace(m)) > 1e-10)
        throw std::invalid_argument("perturbation_series: M must be traceless");

    const Complex c1 = psi.c[0], c2 = psi.c[1], c3 = psi.c[2], c4 = psi.c[3];
    const double m11 = m.at(0, 0).real(), m22 = m.at(1, 1).real();
    const double m33 = m.at(2, 2).real(), m44 = m.at(3, 3).real();
    const Complex m14 = m.at(0, 3), m23 = m.at(1, 2);
    const Complex m12 = m.at(0, 1), m34 = m.at(2, 3);
    const Complex m13 = m.at(0, 2), m24 = m.at(1, 3);

    const double alpha_p =
        0.5 * (std::norm(c1) * m44 + std::norm(c2) * m33 + std::norm(c3) * m22 + std::norm(c4) * m11);
    const double alpha_m =
        0.5 * (std::norm(c1) * m44 - std::norm(c2) * m33 - std::norm(c3) * m22 + std::norm(c4) * m11);
    const Complex beta_p = c1 * std::conj(c4) * std::conj(m14) + c2 * std::conj(c3) * std::conj(m23);
    const Complex beta_m = c1 * std::conj(c4) * std::conj(m14) - c2 * std::conj(c3) * std::conj(m23);
    const Complex gamma_p = c1 * std::conj(c2) * std::conj(m34) + std::conj(c3) * c4 * m12 +
                            c1 * std::conj(c3) * std::conj(m24) + std::conj(c2) * c4 * m13;
    const Complex gamma_m = c1 * std::conj(c2) * std::conj(m34) + std::conj(c3) * c4 * m12 -
                            c1 * std::conj(c3) * std::conj(m24) - std::conj(c2) * c4 * m13;

    PerturbationSeries ps;
    ps.psi = psi;
    ps.m = m;

    const Complex i{0.0, 1.0};
    CMatrix m1(4);
    m1.at(0, 0) = alpha_p + beta_p.real() + gamma_p.real();
    m1.at(0, 3) = alpha_m + beta_m.real() - i * gamma_p.imag();
    m1.at(1, 1) = alpha_p - beta_p.real() - gamma_m.real();
    m1.at(1, 2) = alpha_m - beta_m.real() + i * gamma_m.imag();
    m1.at(2, 2) = alpha_p - beta_p.real() + gamma_m.real();
    m1.at(3, 3) = alpha_p + beta_p.real() - gamma_p.real();
    m1.at(3, 0) = std::conj(m1.at(0, 3));
    m1.at(2, 1) = std::conj(m1.at(1, 2));
    ps.m1 = m1;

    // Unnormalized amplitudes after the first step (U+).
    const Complex c1p = c1 * c4 + c2 * c3;
    const Complex c4p = c1 * c4 - c2 * c3;

    const double alpha1_p = 0.5 * (std::norm(c1p) * m1.at(3, 3).real() + std::norm(c4p) * m1.at(0, 0).real());
    const Complex beta1_p = c1p * std::conj(c4p) * std::conj(m1.at(0, 3));
    const double hi = alpha1_p + beta1_p.real();
    const double lo = alpha1_p - beta1_p.real();

    CMatrix m2(4);
    m2.at(0, 0) = m2.at(0, 3) = m2.at(3, 0) = m2.at(3, 3) = hi;
    m2.at(1, 1) = m2.at(1, 2) = m2.at(2, 1) = m2.at(2, 2) = lo;
    ps.m2 = m2;

    // Coefficient pinned by differentiating the exact three-step map: the
    // corner entries equal 2 |c1'|^2 |c4'|^2 m''_11.
    const double scale = 2.0 * std::norm(c1p) * std::norm(c4p) * hi;
    CMatrix m3(4);
    m3.at(0, 0) = m3.at(0, 3) = m3.at(3, 0) = m3.at(3, 3) = scale;
    ps.m3 = m3;

    return ps;
}

RetryResult scramble_and_retry(const PureState2Q &s, Sign sign, Rng &rng, int max_attempts) {
    RetryResult res;
    PureState2Q current = s;
    for (int attempt = 1; attempt <= max_attempts; ++attempt) {
        res.attempts = attempt;
        res.trace = concentrate(current, sign);
        if (res.trace.succeeded()) return res;
        current = apply_local_pair(s, random_local_unitary(rng), random_local_unitary(rng));
    }
    res.exhausted = true;
    return res;
}

double expected_cost(const IterationTrace &trace) {
    if (trace.cumulative_probability <= 0.0) return std::numeric_limits<double>::infinity();
    return trace.pairs_consumed / trace.cumulative_probability;
}

}  // namespace bellforge
