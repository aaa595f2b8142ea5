#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>

#include "bellforge/linalg.hpp"

namespace bellforge {

using Rng = std::mt19937_64;

// Two-qubit pure state, amplitudes of |00>, |01>, |10>, |11>.
struct PureState2Q {
    std::array<Complex, 4> c{};

    PureState2Q() = default;
    PureState2Q(Complex c1, Complex c2, Complex c3, Complex c4) : c{c1, c2, c3, c4} {}

    double norm_sq() const;
    bool is_normalized(double tol = 1e-12) const;
    PureState2Q normalized() const;
    CVector to_vector() const;
    CMatrix projector() const;  // |psi><psi|
};

// Two-qubit density operator; may be unnormalized mid-protocol.
struct Density2Q {
    CMatrix m{4};

    Density2Q() : m(4) {}
    explicit Density2Q(CMatrix mat);

    double trace_real() const { return trace(m).real(); }
    bool is_valid(double herm_tol = 1e-10, double psd_tol = 1e-9) const;
    bool is_normalized(double tol = 1e-12) const;
    Density2Q normalized() const;

    static Density2Q from_pure(const PureState2Q &s);
};

enum class BellState { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

PureState2Q bell_state(BellState b);
const char *bell_name(BellState b);

enum class InputClass {
    GenericEntangled,
    SeparableNonBlind,
    BlindSpotEntangled,
    BlindSpotSeparable,
};

const char *input_class_name(InputClass c);

struct Classification {
    InputClass cls;
    double residual_minus;  // |c1 c4 - c2 c3|
    double residual_plus;   // |c1 c4 + c2 c3|
};

// Case analysis on the products c1 c4 and c2 c3:
//  - both products ~0          -> BlindSpotSeparable (fails at step 1)
//  - c1 c4 =  c2 c3            -> SeparableNonBlind  (fails at step 2)
//  - c1 c4 = -c2 c3            -> BlindSpotEntangled (fails at step 2)
//  - otherwise                 -> GenericEntangled
Classification classify_input(const PureState2Q &s, double tol = 1e-10);

// C = 2 |c1 c4 - c2 c3| for normalized pure states.
double concurrence_pure(const PureState2Q &s);

// <target|rho|target>, normalizing rho by its trace first.
// Throws if trace(rho) is below the failure threshold.
double fidelity_with_pure(const Density2Q &rho, const PureState2Q &target);
double fidelity_with_pure(const PureState2Q &s, const PureState2Q &target);

enum class NoiseKind { White, Dephasing, Ginibre };

struct NoiseModel {
    NoiseKind kind = NoiseKind::White;
    double epsilon = 0.0;  // in [0, 1)
};

NoiseKind parse_noise_kind(const std::string &name);
const char *noise_kind_name(NoiseKind k);

// Haar-uniform pure two-qubit state.
PureState2Q random_pure(Rng &rng);

// Random single-qubit product state (pure).
PureState2Q random_product(Rng &rng);

// Haar-random 2x2 unitary (QR of a complex Ginibre matrix, R diagonal positive).
CMatrix random_local_unitary(Rng &rng);

// Random 4x4 Ginibre density matrix W W^dag / Tr(W W^dag).
CMatrix ginibre_density(Rng &rng);

// (1-eps)|base><base| + eps * rho_err, rho_err per the noise model.
Density2Q random_density(const NoiseModel &model, const PureState2Q &base, Rng &rng);

// Conjugate by uA x uB (local unitaries, one per party).
PureState2Q apply_local_pair(const PureState2Q &s, const CMatrix &uA, const CMatrix &uB);
Density2Q apply_local_pair(const Density2Q &rho, const CMatrix &uA, const CMatrix &uB);

// Success probabilities below this are treated as deterministic failure.
inline constexpr double kFailureThreshold = 1e-15;

}  // namespace bellforge
