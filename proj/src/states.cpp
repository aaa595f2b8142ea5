#include "bellforge/states.hpp"

#include <cmath>
#include <stdexcept>

namespace bellforge {

double PureState2Q::norm_sq() const {
    double s = 0.0;
    for (const auto &ci : c) s += std::norm(ci);
    return s;
}

bool PureState2Q::is_normalized(double tol) const { return std::abs(norm_sq() - 1.0) <= tol; }

PureState2Q PureState2Q::normalized() const {
    const double n = std::sqrt(norm_sq());
    if (n < kFailureThreshold) throw std::domain_error("cannot normalize near-zero state");
    return {c[0] / n, c[1] / n, c[2] / n, c[3] / n};
}

CVector PureState2Q::to_vector() const {
    CVector v(4);
    for (int i = 0; i < 4; ++i) v[i] = c[static_cast<size_t>(i)];
    return v;
}

CMatrix PureState2Q::projector() const {
    const CVector v = to_vector();
    return outer(v, v);
}

Density2Q::Density2Q(CMatrix mat) : m(std::move(mat)) {
    if (m.n != 4) throw std::invalid_argument("Density2Q: need a 4x4 matrix");
}

bool Density2Q::is_valid(double herm_tol, double psd_tol) const {
    return hermitize_check(m, herm_tol) && psd_check(m, psd_tol);
}

bool Density2Q::is_normalized(double tol) const { return std::abs(trace_real() - 1.0) <= tol; }

Density2Q Density2Q::normalized() const {
    const double t = trace_real();
    if (t < kFailureThreshold) throw std::domain_error("no post-selected state (trace ~ 0)");
    return Density2Q{(1.0 / t) * m};
}

Density2Q Density2Q::from_pure(const PureState2Q &s) { return Density2Q{s.projector()}; }

PureState2Q bell_state(BellState b) {
    const double s = 1.0 / std::sqrt(2.0);
    switch (b) {
        case BellState::PhiPlus: return {s, 0, 0, s};
        case BellState::PhiMinus: return {s, 0, 0, -s};
        case BellState::PsiPlus: return {0, s, s, 0};
        case BellState::PsiMinus: return {0, s, -s, 0};
    }
    throw std::logic_error("unreachable");
}

const char *bell_name(BellState b) {
    switch (b) {
        case BellState::PhiPlus: return "Phi+";
        case BellState::PhiMinus: return "Phi-";
        case BellState::PsiPlus: return "Psi+";
        case BellState::PsiMinus: return "Psi-";
    }
    return "?";
}

const char *input_class_name(InputClass c) {
    switch (c) {
        case InputClass::GenericEntangled: return "GenericEntangled";
        case InputClass::SeparableNonBlind: return "SeparableNonBlind";
        case InputClass::BlindSpotEntangled: return "BlindSpotEntangled";
        case InputClass::BlindSpotSeparable: return "BlindSpotSeparable";
    }
    return "?";
}

Classification classify_input(const PureState2Q &s, double tol) {
    const Complex p14 = s.c[0] * s.c[3];
    const Complex p23 = s.c[1] * s.c[2];
    Classification r;
    r.residual_minus = std::abs(p14 - p23);
    r.residual_plus = std::abs(p14 + p23);
    if (std::abs(p14) <= tol && std::abs(p23) <= tol)
        r.cls = InputClass::BlindSpotSeparable;
    else if (r.residual_minus <= tol)
        r.cls = InputClass::SeparableNonBlind;
    else if (r.residual_plus <= tol)
        r.cls = InputClass::BlindSpotEntangled;
    else
        r.cls = InputClass::GenericEntangled;
    return r;
}

double concurrence_pure(const PureState2Q &s) {
    if (!s.is_normalized(1e-9)) throw std::invalid_argument("concurrence_pure: state not normalized");
    return 2.0 * std::abs(s.c[0] * s.c[3] - s.c[1] * s.c[2]);
}

double fidelity_with_pure(const Density2Q &rho, const PureState2Q &target) {
    const double t = rho.trace_real();
    if (t < kFailureThreshold) throw std::domain_error("no post-selected state (trace ~ 0)");
    const CVector v = target.to_vector();
    Complex f{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) f += std::conj(v[i]) * rho.m.at(i, j) * v[j];
    return f.real() / t;
}

double fidelity_with_pure(const PureState2Q &s, const PureState2Q &target) {
    Complex ov{};
    for (int i = 0; i < 4; ++i)
        ov += std::conj(target.c[static_cast<size_t>(i)]) * s.c[static_cast<size_t>(i)];
    return std::norm(ov) / s.norm_sq();
}

NoiseKind parse_noise_kind(const std::string &name) {
    if (name == "white") return NoiseKind::White;
    if (name == "dephasing") return NoiseKind::Dephasing;
    if (name == "ginibre") return NoiseKind::Ginibre;
    throw std::invalid_argument("unknown noise kind: " + name);
}

const char *noise_kind_name(NoiseKind k) {
    switch (k) {
        case NoiseKind::White: return "white";
        case NoiseKind::Dephasing: return "dephasing";
        case NoiseKind::Ginibre: return "ginibre";
    }
    return "?";
}

namespace {

Complex gaussian(Rng &rng) {
    std::normal_distribution<double> n(0.0, 1.0);
    return {n(rng), n(rng)};
}

}  // namespace

PureState2Q random_pure(Rng &rng) {
    PureState2Q s{gaussian(rng), gaussian(rng), gaussian(rng), gaussian(rng)};
    return s.normalized();
}

PureState2Q random_product(Rng &rng) {
    Complex a0 = gaussian(rng), a1 = gaussian(rng);
    Complex b0 = gaussian(rng), b1 = gaussian(rng);
    const double na = std::sqrt(std::norm(a0) + std::norm(a1));
    const double nb = std::sqrt(std::norm(b0) + std::norm(b1));
    a0 /= na;
    a1 /= na;
    b0 /= nb;
    b1 /= nb;
    return {a0 * b0, a0 * b1, a1 * b0, a1 * b1};
}

CMatrix random_local_unitary(Rng &rng) {
    // Gram-Schmidt on a 2x2 Ginibre matrix; positive normalization makes
    // the implicit R diagonal real positive, so Q is Haar distributed.
    Complex g00 = gaussian(rng), g10 = gaussian(rng);
    Complex g01 = gaussian(rng), g11 = gaussian(rng);
    const double r11 = std::sqrt(std::norm(g00) + std::norm(g10));
    const Complex q00 = g00 / r11, q10 = g10 / r11;
    const Complex proj = std::conj(q00) * g01 + std::conj(q10) * g11;
    Complex w0 = g01 - proj * q00, w1 = g11 - proj * q10;
    const double r22 = std::sqrt(std::norm(w0) + std::norm(w1));
    CMatrix u(2);
    u.at(0, 0) = q00;
    u.at(1, 0) = q10;
    u.at(0, 1) = w0 / r22;
    u.at(1, 1) = w1 / r22;
    return u;
}

CMatrix ginibre_density(Rng &rng) {
    CMatrix w(4);
    for (auto &c : w.a) c = gaussian(rng);
    CMatrix m = w * dagger(w);
    return (1.0 / trace(m).real()) * m;
}

Density2Q random_density(const NoiseModel &model, const PureState2Q &base, Rng &rng) {
    if (model.epsilon < 0.0 || model.epsilon >= 1.0)
        throw std::invalid_argument("noise epsilon must be in [0, 1)");
    const CMatrix proj = base.projector();
    CMatrix err(4);
    switch (model.kind) {
        case NoiseKind::White:
            err = 0.25 * CMatrix::identity(4);
            break;
        case NoiseKind::Dephasing:
            for (int i = 0; i < 4; ++i) err.at(i, i) = proj.at(i, i);
            break;
        case NoiseKind::Ginibre:
            err = ginibre_density(rng);
            break;
    }
    return Density2Q{(1.0 - model.epsilon) * proj + model.epsilon * err};
}

namespace {

void require_unitary(const CMatrix &u) {
    if (u.n != 2 || max_abs_diff(dagger(u) * u, CMatrix::identity(2)) > 1e-10)
        throw std::invalid_argument("apply_local_pair: operator is not a 2x2 unitary");
}

}  // namespace

PureState2Q apply_local_pair(const PureState2Q &s, const CMatrix &uA, const CMatrix &uB) {
    require_unitary(uA);
    require_unitary(uB);
    const CVector v = kron(uA, uB) * s.to_vector();
    return {v[0], v[1], v[2], v[3]};
}

Density2Q apply_local_pair(const Density2Q &rho, const CMatrix &uA, const CMatrix &uB) {
    require_unitary(uA);
    require_unitary(uB);
    const CMatrix u = kron(uA, uB);
    return Density2Q{u * rho.m * dagger(u)};
}

}  // namespace bellforge
