#include "bellforge/core_step.hpp"

#include <cmath>
#include <stdexcept>

namespace bellforge {

namespace {

const QubitOrder kNatural{1, 3, 2, 4};
const QubitOrder kProtocol{1, 2, 3, 4};

}  // namespace

PureStepOutcome step_pure_closed(const PureState2Q &s, Sign sign) {
    const double p = sign == Sign::Plus ? 1.0 : -1.0;
    const Complex t14 = s.c[0] * s.c[3];
    const Complex t23 = s.c[1] * s.c[2];
    PureStepOutcome out;
    out.state = {t14 + p * t23, 0.0, 0.0, t14 - p * t23};
    out.probability = out.state.norm_sq();
    out.sign = sign;
    out.representation = Representation::ClosedForm;
    return out;
}

PureStepOutcome step_pure_oracle(const PureState2Q &s, Sign sign) {
    const CVector psi = s.to_vector();
    CVector v = reorder_qubits(kron(psi, psi), kNatural, kProtocol);
    const CMatrix u = u_pm(sign);
    v = kron(u, u) * v;
    const CVector kept = project_ancillas_to_zero(v);
    PureStepOutcome out;
    out.state = {kept[0], kept[1], kept[2], kept[3]};
    out.probability = kept.norm_sq();
    out.sign = sign;
    out.representation = Representation::Oracle;
    return out;
}

CMatrix x_step_apply(const CMatrix &rho, Sign sign, XTerms *terms) {
    if (rho.n != 4) throw std::invalid_argument("x_step_apply: need a 4x4 matrix");
    const double flip = sign == Sign::Plus ? 1.0 : -1.0;

    const Complex r11 = rho.at(0, 0), r22 = rho.at(1, 1), r33 = rho.at(2, 2), r44 = rho.at(3, 3);
    const Complex r14 = rho.at(0, 3), r23 = rho.at(1, 2);
    const Complex r12 = rho.at(0, 1), r34 = rho.at(2, 3);
    const Complex r13 = rho.at(0, 2), r24 = rho.at(1, 3);

    XTerms t;
    t.a_plus = 0.5 * (r11 * r44 + r22 * r33).real();
    t.a_minus = 0.5 * (r11 * r44 - r22 * r33).real();
    t.b_plus = 0.5 * (std::norm(r14) + std::norm(r23));
    t.b_minus = 0.5 * (std::norm(r14) - std::norm(r23));
    t.d_plus = r12 * std::conj(r34) + r13 * std::conj(r24);
    t.d_minus = r12 * std::conj(r34) - r13 * std::conj(r24);
    if (terms) *terms = t;

    const Complex i{0.0, 1.0};
    CMatrix out(4);
    out.at(0, 0) = t.a_plus + t.b_plus + flip * t.d_plus.real();
    out.at(0, 3) = t.a_minus + t.b_minus - flip * i * t.d_plus.imag();
    out.at(1, 1) = t.a_plus - t.b_plus - flip * t.d_minus.real();
    out.at(1, 2) = t.a_minus - t.b_minus + flip * i * t.d_minus.imag();
    out.at(2, 2) = t.a_plus - t.b_plus + flip * t.d_minus.real();
    out.at(3, 3) = t.a_plus + t.b_plus - flip * t.d_plus.real();
    out.at(3, 0) = std::conj(out.at(0, 3));
    out.at(2, 1) = std::conj(out.at(1, 2));
    return out;
}

MixedStepOutcome step_mixed_closed(const Density2Q &rho, Sign sign) {
    if (!rho.is_valid()) throw std::invalid_argument("step_mixed_closed: input is not a density operator");
    MixedStepOutcome out;
    out.state = Density2Q{x_step_apply(rho.m, sign, &out.terms)};
    out.probability = 4.0 * out.terms.a_plus;
    out.sign = sign;
    out.representation = Representation::ClosedForm;
    return out;
}

CMatrix mixed_oracle_apply(const CMatrix &rho, Sign sign) {
    if (rho.n != 4) throw std::invalid_argument("mixed_oracle_apply: need a 4x4 matrix");
    CMatrix big = reorder_qubits(kron(rho, rho), kNatural, kProtocol);
    const CMatrix u = kron(u_pm(sign), u_pm(sign));
    big = u * big * dagger(u);
    return project_ancillas_to_zero(big);
}

MixedStepOutcome step_mixed_oracle(const Density2Q &rho, Sign sign) {
    MixedStepOutcome out;
    out.state = Density2Q{mixed_oracle_apply(rho.m, sign)};
    out.probability = out.state.trace_real();
    out.sign = sign;
    out.representation = Representation::Oracle;
    return out;
}

}  // namespace bellforge
