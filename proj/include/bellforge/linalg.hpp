#pragma once

#include <complex>
#include <vector>

namespace bellforge {

using Complex = std::complex<double>;

// Dense complex vector, dim in {2, 4, 16}.
struct CVector {
    std::vector<Complex> a;

    CVector() = default;
    explicit CVector(int dim) : a(static_cast<size_t>(dim)) {}

    int dim() const { return static_cast<int>(a.size()); }
    Complex &operator[](int i) { return a[static_cast<size_t>(i)]; }
    const Complex &operator[](int i) const { return a[static_cast<size_t>(i)]; }

    double norm_sq() const;
};

// Dense square complex matrix, row-major.
struct CMatrix {
    int n = 0;
    std::vector<Complex> a;

    CMatrix() = default;
    explicit CMatrix(int dim) : n(dim), a(static_cast<size_t>(dim) * dim) {}

    Complex &at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const Complex &at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

    static CMatrix identity(int dim);
};

// Qubit labels in basis-index order, most significant bit first.
using QubitOrder = std::vector<int>;

CMatrix operator*(const CMatrix &x, const CMatrix &y);
CVector operator*(const CMatrix &m, const CVector &v);
CMatrix operator*(Complex s, const CMatrix &m);
CMatrix operator+(const CMatrix &x, const CMatrix &y);
CMatrix operator-(const CMatrix &x, const CMatrix &y);

CMatrix dagger(const CMatrix &m);
Complex trace(const CMatrix &m);
double max_abs_diff(const CMatrix &x, const CMatrix &y);
double max_abs(const CMatrix &m);

// Kronecker product; result dimension must not exceed 16.
CMatrix kron(const CMatrix &x, const CMatrix &y);
CVector kron(const CVector &x, const CVector &y);

// Outer product |x><y|.
CMatrix outer(const CVector &x, const CVector &y);

// Permute qubit positions so that basis bits follow `to` instead of `from`.
// Both orders must be permutations of the same label set.
CVector reorder_qubits(const CVector &v, const QubitOrder &from, const QubitOrder &to);
CMatrix reorder_qubits(const CMatrix &m, const QubitOrder &from, const QubitOrder &to);

// Unnormalized component of a 4-qubit state (order 1,2,3,4) with qubits 2 and 4
// projected onto |0>, returned on qubits (1,3). Squared norm / trace of the
// result is the post-selection probability.
CVector project_ancillas_to_zero(const CVector &v);
CMatrix project_ancillas_to_zero(const CMatrix &m);

bool hermitize_check(const CMatrix &m, double tol = 1e-10);
bool psd_check(const CMatrix &m, double tol = 1e-9);

struct EighResult {
    std::vector<double> eigenvalues;  // ascending
    CMatrix eigenvectors;             // columns
};

// Cyclic Jacobi for Hermitian matrices (dims <= 16). Converges when the
// off-diagonal Frobenius norm drops below `tol`.
EighResult jacobi_eigh(const CMatrix &m, double tol = 1e-14, int max_sweeps = 100);

}  // namespace bellforge
