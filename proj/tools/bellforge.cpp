#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bellforge/io.hpp"

namespace {

using namespace bellforge;

constexpr int kExitParse = 2;
constexpr int kExitInvalidState = 3;
constexpr int kExitProtocolFailure = 4;

std::uint64_t default_seed() {
    if (const char *env = std::getenv("BELLFORGE_SEED")) return std::strtoull(env, nullptr, 10);
    return 0;
}

Sign parse_sign(const std::string &s) {
    if (s == "+" || s == "plus") return Sign::Plus;
    if (s == "-" || s == "minus") return Sign::Minus;
    throw CLI::ValidationError("--sign", "must be + or -");
}

void print_pure(const char *name, const PureState2Q &s) {
    std::cout << name << ":";
    for (const auto &c : s.c)
        std::cout << " (" << format_double(c.real()) << ", " << format_double(c.imag()) << ")";
    std::cout << "\n";
}

void print_density(const char *name, const CMatrix &m) {
    std::cout << name << ":\n";
    for (int i = 0; i < 4; ++i) {
        std::cout << " ";
        for (int j = 0; j < 4; ++j)
            std::cout << " (" << format_double(m.at(i, j).real()) << ", "
                      << format_double(m.at(i, j).imag()) << ")";
        std::cout << "\n";
    }
}

void print_bell_fidelities(const Density2Q &rho) {
    for (BellState b :
         {BellState::PhiPlus, BellState::PhiMinus, BellState::PsiPlus, BellState::PsiMinus})
        std::cout << "fidelity(" << bell_name(b)
                  << ") = " << format_double(fidelity_with_pure(rho, bell_state(b))) << "\n";
}

int cmd_step(const std::string &path, Sign sign, bool mixed_oracle) {
    const StateFile sf = load_state_file(path);
    if (sf.is_pure()) {
        const auto &s = std::get<PureState2Q>(sf.state);
        const PureStepOutcome out = step_pure_closed(s, sign);
        print_pure("unnormalized output", out.state);
        std::cout << "success_probability = " << format_double(out.probability) << "\n";
        if (out.failed()) {
            std::cout << "FAILURE (probability 0)\n";
            return kExitProtocolFailure;
        }
        const PureState2Q norm = out.state.normalized();
        print_pure("normalized output", norm);
        print_bell_fidelities(Density2Q::from_pure(norm));
    } else {
        const auto &rho = std::get<Density2Q>(sf.state);
        const MixedStepOutcome out = step_mixed_closed(rho, sign);
        print_density("unnormalized output", out.state.m);
        std::cout << "success_probability = " << format_double(out.probability) << "\n";
        if (mixed_oracle) {
            const MixedStepOutcome ref = step_mixed_oracle(rho, sign);
            std::cout << "oracle/closed-form max discrepancy = "
                      << format_double(max_abs_diff(out.state.m, ref.state.m)) << "\n";
        }
        if (out.failed()) {
            std::cout << "FAILURE (probability 0)\n";
            return kExitProtocolFailure;
        }
        print_density("normalized output", out.state.normalized().m);
        print_bell_fidelities(out.state);
    }
    return 0;
}

void print_trace(const IterationTrace &tr) {
    for (std::size_t i = 0; i < tr.step_probabilities.size(); ++i)
        std::cout << "p_step" << (i + 1) << " = " << format_double(tr.step_probabilities[i])
                  << "\n";
    std::cout << "p_cumulative = " << format_double(tr.cumulative_probability) << "\n";
    std::cout << "pairs_consumed = " << tr.pairs_consumed << "\n";
    if (tr.succeeded()) {
        std::cout << "expected_cost = " << format_double(expected_cost(tr)) << "\n";
        std::cout << "fidelity(Phi+) = " << format_double(tr.final_fidelity_phi_plus) << "\n";
    } else {
        std::cout << "failed_at_step = " << *tr.failed_at_step << "\n";
    }
}

int cmd_concentrate(const std::string &path, Sign sign, bool scramble, int max_attempts,
                    std::uint64_t seed) {
    const StateFile sf = load_state_file(path);
    if (!sf.is_pure()) throw InvalidStateError("concentrate needs a pure input (use distill)");
    const auto &s = std::get<PureState2Q>(sf.state);
    std::cout << "class = " << input_class_name(classify_input(s).cls) << "\n";

    if (scramble) {
        Rng rng(seed);
        const RetryResult res = scramble_and_retry(s, sign, rng, max_attempts);
        std::cout << "attempts = " << res.attempts << "\n";
        print_trace(res.trace);
        return res.trace.succeeded() ? 0 : kExitProtocolFailure;
    }
    const IterationTrace tr = concentrate(s, sign);
    print_trace(tr);
    return tr.succeeded() ? 0 : kExitProtocolFailure;
}

int cmd_distill(const std::string &path, const std::string &generate, double epsilon,
                const std::string &noise, int steps, Sign sign, std::uint64_t seed) {
    Rng rng(seed);
    Density2Q rho;
    if (!path.empty()) {
        const StateFile sf = load_state_file(path);
        rho = sf.is_pure() ? Density2Q::from_pure(std::get<PureState2Q>(sf.state))
                           : std::get<Density2Q>(sf.state);
    } else {
        const PureState2Q base =
            generate == "haar" ? random_pure(rng) : bell_state(BellState::PhiPlus);
        rho = random_density({parse_noise_kind(noise), epsilon}, base, rng);
    }
    const IterationTrace tr = distill(rho, sign, steps);
    print_trace(tr);
    return tr.succeeded() ? 0 : kExitProtocolFailure;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Bell-pair concentration and distillation simulator"};
    app.require_subcommand(1);

    std::string state_path, out_path, sign_str = "+", noise = "white", generate = "bell";
    bool mixed_oracle = false, scramble = false;
    int max_attempts = 10, steps = 3, trials = 1;
    double epsilon = 0.0;
    std::uint64_t seed = default_seed();

    auto *step = app.add_subcommand("step", "apply one core step to a state file");
    step->add_option("state", state_path)->required();
    step->add_option("--sign", sign_str);
    step->add_flag("--mixed-oracle", mixed_oracle,
                   "also run the brute-force oracle and print the discrepancy");

    auto *conc = app.add_subcommand("concentrate", "two-step concentration of a pure state");
    conc->add_option("state", state_path)->required();
    conc->add_option("--sign", sign_str);
    conc->add_flag("--scramble", scramble, "retry with random local unitaries on failure");
    conc->add_option("--max-attempts", max_attempts);
    conc->add_option("--seed", seed);

    auto *dist = app.add_subcommand("distill", "iterated distillation of a mixed state");
    dist->add_option("state", state_path);
    dist->add_option("--generate", generate)->check(CLI::IsMember({"bell", "haar"}));
    dist->add_option("--epsilon", epsilon);
    dist->add_option("--noise", noise)->check(CLI::IsMember({"white", "dephasing", "ginibre"}));
    dist->add_option("--steps", steps)->check(CLI::IsMember({2, 3}));
    dist->add_option("--sign", sign_str);
    dist->add_option("--seed", seed);

    auto *sweep = app.add_subcommand("sweep", "noise sweep driven by a spec file, CSV out");
    std::string spec_path;
    sweep->add_option("spec", spec_path)->required();
    sweep->add_option("--out", out_path)->required();

    auto *sample = app.add_subcommand("sample", "Haar-random concentration statistics, CSV out");
    sample->add_option("--trials", trials);
    sample->add_option("--seed", seed);
    sample->add_option("--sign", sign_str);
    sample->add_option("--out", out_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        const Sign sign = parse_sign(sign_str);
        if (step->parsed()) return cmd_step(state_path, sign, mixed_oracle);
        if (conc->parsed()) return cmd_concentrate(state_path, sign, scramble, max_attempts, seed);
        if (dist->parsed())
            return cmd_distill(state_path, generate, epsilon, noise, steps, sign, seed);
        if (sweep->parsed()) {
            write_file(out_path, sweep_csv(run_sweep(load_sweep_spec(spec_path))));
            return 0;
        }
        if (sample->parsed()) {
            write_file(out_path, sample_csv(run_sample(trials, seed, sign)));
            return 0;
        }
    } catch (const ParseError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const InvalidStateError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidState;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidState;
    }
    return 0;
}
