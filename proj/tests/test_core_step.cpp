#include <doctest.h>

#include <cmath>

#include "bellforge/core_step.hpp"

using namespace bellforge;

namespace {

double pure_outcome_diff(const PureStepOutcome &a, const PureStepOutcome &b) {
    double d = std::abs(a.probability - b.probability);
    for (int i = 0; i < 4; ++i)
        d = std::max(d, std::abs(a.state.c[static_cast<size_t>(i)] - b.state.c[static_cast<size_t>(i)]));
    return d;
}

}  // namespace

TEST_CASE("pure step: Phi+ keeps its form with probability 1/2") {
    const PureStepOutcome out = step_pure_closed(bell_state(BellState::PhiPlus), Sign::Plus);
    CHECK(std::abs(out.state.c[0] - 0.5) <= 1e-15);
    CHECK(out.state.c[1] == Complex{0.0});
    CHECK(out.state.c[2] == Complex{0.0});
    CHECK(std::abs(out.state.c[3] - 0.5) <= 1e-15);
    CHECK(out.probability == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("pure step: |+>|+> collapses to |00> with probability 1/4") {
    const PureStepOutcome out = step_pure_closed({0.5, 0.5, 0.5, 0.5}, Sign::Plus);
    CHECK(std::abs(out.state.c[0] - 0.5) <= 1e-15);
    CHECK(std::abs(out.state.c[3]) <= 1e-15);
    CHECK(out.probability == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("pure step: singlet becomes Phi-") {
    const double s = 1.0 / std::sqrt(2.0);
    const PureStepOutcome out = step_pure_closed({0, s, -s, 0}, Sign::Plus);
    CHECK(out.probability == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(fidelity_with_pure(out.state.normalized(), bell_state(BellState::PhiMinus)) ==
          doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("pure step: entangled blind spot goes to |11> under U+") {
    const PureStepOutcome out = step_pure_closed({0.5, 0.5, 0.5, -0.5}, Sign::Plus);
    CHECK(std::abs(out.state.c[0]) <= 1e-15);
    CHECK(std::abs(out.state.c[3] + 0.5) <= 1e-15);
    CHECK(out.probability == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("pure step: |00> fails in both representations") {
    const PureState2Q zero{1, 0, 0, 0};
    CHECK(step_pure_closed(zero, Sign::Plus).failed());
    CHECK(step_pure_oracle(zero, Sign::Plus).failed());
}

TEST_CASE("pure oracle matches closed form on Haar-random states") {
    Rng rng(31);
    for (Sign sign : {Sign::Plus, Sign::Minus}) {
        double worst = 0.0;
        for (int k = 0; k < 1000; ++k) {
            const PureState2Q s = random_pure(rng);
            worst = std::max(worst,
                             pure_outcome_diff(step_pure_closed(s, sign), step_pure_oracle(s, sign)));
        }
        CHECK(worst <= 1e-12);
    }
}

TEST_CASE("probability laws: Schmidt family C^2/2, product family 4|c1 c4|^2") {
    Rng rng(37);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    for (int k = 0; k < 1000; ++k) {
        // Schmidt form c2 = c3 = 0.
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const double t = unit(rng);
        const PureState2Q schmidt{std::sqrt(t), 0.0, 0.0,
                                  std::polar(std::sqrt(1.0 - t), angle(rng))};
        const double c = concurrence_pure(schmidt);
        CHECK(std::abs(step_pure_closed(schmidt, Sign::Plus).probability - c * c / 2.0) <= 1e-12);

        const PureState2Q prod = random_product(rng);
        const double expected = 4.0 * std::norm(prod.c[0] * prod.c[3]);
        CHECK(std::abs(step_pure_closed(prod, Sign::Plus).probability - expected) <= 1e-12);
    }
}

TEST_CASE("mixed step on a pure projector matches the pure step") {
    Rng rng(41);
    for (int k = 0; k < 200; ++k) {
        const PureState2Q s = random_pure(rng);
        for (Sign sign : {Sign::Plus, Sign::Minus}) {
            const MixedStepOutcome mixed = step_mixed_closed(Density2Q::from_pure(s), sign);
            const PureStepOutcome pure = step_pure_closed(s, sign);
            CHECK(max_abs_diff(mixed.state.m, pure.state.projector()) <= 1e-12);
            CHECK(std::abs(mixed.probability - pure.probability) <= 1e-12);
        }
    }
}

TEST_CASE("mixed step: white-noise Bell worked example") {
    Rng rng(0);
    const Density2Q rho =
        random_density({NoiseKind::White, 0.1}, bell_state(BellState::PhiPlus), rng);
    const MixedStepOutcome out = step_mixed_closed(rho, Sign::Plus);
    CHECK(out.probability == doctest::Approx(0.4525).epsilon(1e-12));
    CHECK(fidelity_with_pure(out.state, bell_state(BellState::PhiPlus)) ==
          doctest::Approx(0.428125 / 0.4525).epsilon(1e-12));
    // Cross-check the closed form against the oracle route.
    const MixedStepOutcome ref = step_mixed_oracle(rho, Sign::Plus);
    CHECK(max_abs_diff(out.state.m, ref.state.m) <= 1e-12);
}

TEST_CASE("mixed step: maximally mixed input agrees with the oracle") {
    const Density2Q rho{0.25 * CMatrix::identity(4)};
    for (Sign sign : {Sign::Plus, Sign::Minus}) {
        const MixedStepOutcome closed = step_mixed_closed(rho, sign);
        const MixedStepOutcome oracle = step_mixed_oracle(rho, sign);
        CHECK(max_abs_diff(closed.state.m, oracle.state.m) <= 1e-12);
        CHECK(std::abs(closed.probability - oracle.probability) <= 1e-12);
    }
}

TEST_CASE("mixed oracle sweep over ginibre-noise densities, both signs") {
    Rng rng(43);
    double worst = 0.0;
    for (int k = 0; k < 500; ++k) {
        const Density2Q rho = random_density({NoiseKind::Ginibre, 0.3}, random_pure(rng), rng);
        for (Sign sign : {Sign::Plus, Sign::Minus}) {
            const MixedStepOutcome closed = step_mixed_closed(rho, sign);
            const MixedStepOutcome oracle = step_mixed_oracle(rho, sign);
            worst = std::max(worst, max_abs_diff(closed.state.m, oracle.state.m));
            worst = std::max(worst, std::abs(closed.probability - oracle.probability));
        }
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("mixed output is an X-state with trace 4 a+") {
    Rng rng(47);
    for (int k = 0; k < 200; ++k) {
        const Density2Q rho = random_density({NoiseKind::Ginibre, 0.5}, random_pure(rng), rng);
        const MixedStepOutcome out = step_mixed_closed(rho, Sign::Plus);
        // Closed form: entries off the diagonal/anti-diagonal are exactly zero.
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (i != j && i + j != 3) CHECK(out.state.m.at(i, j) == Complex{0.0});
        CHECK(out.state.trace_real() == doctest::Approx(4.0 * out.terms.a_plus).epsilon(1e-14));
        CHECK(hermitize_check(out.state.m));
        CHECK(psd_check(out.state.m));
        // Oracle route: same structure up to numerical noise.
        const MixedStepOutcome oracle = step_mixed_oracle(rho, Sign::Plus);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                if (i != j && i + j != 3) CHECK(std::abs(oracle.state.m.at(i, j)) <= 1e-12);
    }
}

TEST_CASE("mixed step rejects non-density input") {
    CMatrix bad(4);
    bad.at(0, 0) = 1.0;
    bad.at(0, 1) = 1.0;  // not Hermitian
    CHECK_THROWS(step_mixed_closed(Density2Q{bad}, Sign::Plus));
}
