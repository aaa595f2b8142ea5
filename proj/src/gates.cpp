#include "bellforge/gates.hpp"

#include <cmath>

namespace bellforge {

CMatrix pauli_x() {
    CMatrix m(2);
    m.at(0, 1) = 1.0;
    m.at(1, 0) = 1.0;
    return m;
}

CMatrix hadamard() {
    const double s = 1.0 / std::sqrt(2.0);
    CMatrix m(2);
    m.at(0, 0) = s;
    m.at(0, 1) = s;
    m.at(1, 0) = s;
    m.at(1, 1) = -s;
    return m;
}

CMatrix identity2() { return CMatrix::identity(2); }

CMatrix cnot() {
    CMatrix m(4);
    m.at(0, 0) = 1.0;
    m.at(1, 1) = 1.0;
    m.at(2, 3) = 1.0;
    m.at(3, 2) = 1.0;
    return m;
}

CMatrix u_pm(Sign sign) {
    const double p = sign == Sign::Plus ? 1.0 : -1.0;
    const double s = 1.0 / std::sqrt(2.0);
    CMatrix m(4);
    m.at(0, 1) = s;
    m.at(0, 2) = p * s;
    m.at(1, 0) = s;
    m.at(1, 3) = p * s;
    m.at(2, 1) = s;
    m.at(2, 2) = -p * s;
    m.at(3, 0) = s;
    m.at(3, 3) = -p * s;
    return m;
}

CMatrix u_pm_from_decomposition(Sign sign) {
    CMatrix u = kron(hadamard(), identity2()) * cnot() * kron(identity2(), pauli_x());
    if (sign == Sign::Minus) u = kron(pauli_x(), identity2()) * u;
    return u;
}

}  // namespace bellforge
