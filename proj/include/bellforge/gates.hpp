#pragma once

#include "bellforge/linalg.hpp"

namespace bellforge {

enum class Sign { Plus, Minus };

inline const char *sign_name(Sign s) { return s == Sign::Plus ? "+" : "-"; }

CMatrix pauli_x();
CMatrix hadamard();
CMatrix identity2();

// CNOT with control on the first (left) tensor factor.
CMatrix cnot();

// The protocol unitary U+ / U-,
//   (1/sqrt2) [[0,1,+-1,0],[1,0,0,+-1],[0,1,-+1,0],[1,0,0,-+1]].
CMatrix u_pm(Sign sign);

// Same unitary built from elementary gates:
//   U+ = (H x 1) CNOT (1 x X),  U- = (X x 1)(H x 1) CNOT (1 x X).
// Matches u_pm entrywise, no global phase involved.
CMatrix u_pm_from_decomposition(Sign sign);

}  // namespace bellforge
