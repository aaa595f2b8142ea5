#include "bellforge/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace bellforge {

double CVector::norm_sq() const {
    double s = 0.0;
    for (const auto &c : a) s += std::norm(c);
    return s;
}

CMatrix CMatrix::identity(int dim) {
    CMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
    return m;
}

CMatrix operator*(const CMatrix &x, const CMatrix &y) {
    if (x.n != y.n) throw std::invalid_argument("matrix dimension mismatch");
    CMatrix r(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int k = 0; k < x.n; ++k) {
            const Complex xik = x.at(i, k);
            if (xik == Complex{}) continue;
            for (int j = 0; j < x.n; ++j) r.at(i, j) += xik * y.at(k, j);
        }
    return r;
}

CVector operator*(const CMatrix &m, const CVector &v) {
    if (m.n != v.dim()) throw std::invalid_argument("matrix/vector dimension mismatch");
    CVector r(m.n);
    for (int i = 0; i < m.n; ++i) {
        Complex s{};
        for (int j = 0; j < m.n; ++j) s += m.at(i, j) * v[j];
        r[i] = s;
    }
    return r;
}

CMatrix operator*(Complex s, const CMatrix &m) {
    CMatrix r = m;
    for (auto &c : r.a) c *= s;
    return r;
}

CMatrix operator+(const CMatrix &x, const CMatrix &y) {
    if (x.n != y.n) throw std::invalid_argument("matrix dimension mismatch");
    CMatrix r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
    return r;
}

CMatrix operator-(const CMatrix &x, const CMatrix &y) {
    if (x.n != y.n) throw std::invalid_argument("matrix dimension mismatch");
    CMatrix r = x;
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
    return r;
}

CMatrix dagger(const CMatrix &m) {
    CMatrix r(m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) r.at(i, j) = std::conj(m.at(j, i));
    return r;
}

Complex trace(const CMatrix &m) {
    Complex s{};
    for (int i = 0; i < m.n; ++i) s += m.at(i, i);
    return s;
}

double max_abs_diff(const CMatrix &x, const CMatrix &y) {
    if (x.n != y.n) throw std::invalid_argument("matrix dimension mismatch");
    double d = 0.0;
    for (size_t i = 0; i < x.a.size(); ++i) d = std::max(d, std::abs(x.a[i] - y.a[i]));
    return d;
}

double max_abs(const CMatrix &m) {
    double d = 0.0;
    for (const auto &c : m.a) d = std::max(d, std::abs(c));
    return d;
}

CMatrix kron(const CMatrix &x, const CMatrix &y) {
    const int n = x.n * y.n;
    if (n > 16) throw std::invalid_argument("kron: result dimension exceeds 16");
    CMatrix r(n);
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j)
            for (int k = 0; k < y.n; ++k)
                for (int l = 0; l < y.n; ++l)
                    r.at(i * y.n + k, j * y.n + l) = x.at(i, j) * y.at(k, l);
    return r;
}

CVector kron(const CVector &x, const CVector &y) {
    const int n = x.dim() * y.dim();
    if (n > 16) throw std::invalid_argument("kron: result dimension exceeds 16");
    CVector r(n);
    for (int i = 0; i < x.dim(); ++i)
        for (int k = 0; k < y.dim(); ++k) r[i * y.dim() + k] = x[i] * y[k];
    return r;
}

CMatrix outer(const CVector &x, const CVector &y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("outer: dimension mismatch");
    CMatrix r(x.dim());
    for (int i = 0; i < x.dim(); ++i)
        for (int j = 0; j < x.dim(); ++j) r.at(i, j) = x[i] * std::conj(y[j]);
    return r;
}

namespace {

// index_map[i] = source index in `from` ordering for destination index i in
// `to` ordering. Qubit at position k is bit (n-1-k) of the basis index.
std::vector<int> reorder_index_map(const QubitOrder &from, const QubitOrder &to) {
    const int n = static_cast<int>(from.size());
    QubitOrder sf = from, st = to;
    std::sort(sf.begin(), sf.end());
    std::sort(st.begin(), st.end());
    if (sf != st) throw std::invalid_argument("reorder_qubits: label sets differ");
    const int dim = 1 << n;
    std::vector<int> map(static_cast<size_t>(dim));
    for (int i = 0; i < dim; ++i) {
        int j = 0;
        for (int k = 0; k < n; ++k) {
            const int label = from[static_cast<size_t>(k)];
            const auto pos = std::find(to.begin(), to.end(), label) - to.begin();
            const int bit = (i >> (n - 1 - pos)) & 1;
            j |= bit << (n - 1 - k);
        }
        map[static_cast<size_t>(i)] = j;
    }
    return map;
}

}  // namespace

CVector reorder_qubits(const CVector &v, const QubitOrder &from, const QubitOrder &to) {
    const auto map = reorder_index_map(from, to);
    if (static_cast<int>(map.size()) != v.dim())
        throw std::invalid_argument("reorder_qubits: dimension mismatch");
    CVector r(v.dim());
    for (int i = 0; i < v.dim(); ++i) r[i] = v[map[static_cast<size_t>(i)]];
    return r;
}

CMatrix reorder_qubits(const CMatrix &m, const QubitOrder &from, const QubitOrder &to) {
    const auto map = reorder_index_map(from, to);
    if (static_cast<int>(map.size()) != m.n)
        throw std::invalid_argument("reorder_qubits: dimension mismatch");
    CMatrix r(m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            r.at(i, j) = m.at(map[static_cast<size_t>(i)], map[static_cast<size_t>(j)]);
    return r;
}

namespace {

// In order (1,2,3,4) with qubit 1 as MSB: qubit 2 is bit 2, qubit 4 is bit 0.
// Surviving indices have both ancilla bits zero; output index is (b1<<1)|b3.
constexpr int kKeep[4] = {0b0000, 0b0010, 0b1000, 0b1010};

}  // namespace

CVector project_ancillas_to_zero(const CVector &v) {
    if (v.dim() != 16) throw std::invalid_argument("project_ancillas_to_zero: need dim 16");
    CVector r(4);
    for (int i = 0; i < 4; ++i) r[i] = v[kKeep[i]];
    return r;
}

CMatrix project_ancillas_to_zero(const CMatrix &m) {
    if (m.n != 16) throw std::invalid_argument("project_ancillas_to_zero: need dim 16");
    CMatrix r(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) r.at(i, j) = m.at(kKeep[i], kKeep[j]);
    return r;
}

bool hermitize_check(const CMatrix &m, double tol) {
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            if (std::abs(m.at(i, j) - std::conj(m.at(j, i))) > tol) return false;
    return true;
}

bool psd_check(const CMatrix &m, double tol) {
    // Eigenvalues of the Hermitian part.
    CMatrix h(m.n);
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j)
            h.at(i, j) = 0.5 * (m.at(i, j) + std::conj(m.at(j, i)));
    const auto eig = jacobi_eigh(h);
    return eig.eigenvalues.front() >= -tol;
}

EighResult jacobi_eigh(const CMatrix &m, double tol, int max_sweeps) {
    CMatrix a = m;
    CMatrix v = CMatrix::identity(m.n);
    const int n = m.n;

    auto off_norm = [&a, n]() {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) s += std::norm(a.at(i, j));
        return std::sqrt(s);
    };

    for (int sweep = 0; sweep < max_sweeps && off_norm() > tol; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const Complex apq = a.at(p, q);
                const double r = std::abs(apq);
                if (r < 1e-300) continue;
                const Complex phase = apq / r;  // e^{i phi}
                const double app = a.at(p, p).real();
                const double aqq = a.at(q, q).real();
                const double tau = (app - aqq) / (2.0 * r);
                double t;
                if (tau == 0.0)
                    t = 1.0;
                else
                    t = (tau > 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // J(p,p)=c, J(p,q)=-s*phase, J(q,p)=s*conj(phase), J(q,q)=c
                for (int i = 0; i < n; ++i) {  // A <- A J, V <- V J
                    const Complex aip = a.at(i, p), aiq = a.at(i, q);
                    a.at(i, p) = c * aip + s * std::conj(phase) * aiq;
                    a.at(i, q) = -s * phase * aip + c * aiq;
                    const Complex vip = v.at(i, p), viq = v.at(i, q);
                    v.at(i, p) = c * vip + s * std::conj(phase) * viq;
                    v.at(i, q) = -s * phase * vip + c * viq;
                }
                for (int j = 0; j < n; ++j) {  // A <- J^dag A
                    const Complex apj = a.at(p, j), aqj = a.at(q, j);
                    a.at(p, j) = c * apj + s * phase * aqj;
                    a.at(q, j) = -s * std::conj(phase) * apj + c * aqj;
                }
            }
        }
    }

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&a](int x, int y) { return a.at(x, x).real() < a.at(y, y).real(); });

    EighResult res;
    res.eigenvalues.resize(static_cast<size_t>(n));
    res.eigenvectors = CMatrix(n);
    for (int k = 0; k < n; ++k) {
        const int src = order[static_cast<size_t>(k)];
        res.eigenvalues[static_cast<size_t>(k)] = a.at(src, src).real();
        for (int i = 0; i < n; ++i) res.eigenvectors.at(i, k) = v.at(i, src);
    }
    return res;
}

}  // namespace bellforge
