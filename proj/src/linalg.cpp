#include "timeflip/linalg.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace timeflip {

CMat CMat::identity(std::size_t n) {
    CMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMat CMat::zero(std::size_t rows, std::size_t cols) { return CMat(rows, cols); }

CMat CMat::transpose() const {
    CMat m(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

CMat CMat::conj() const {
    CMat m(rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) m(i, j) = std::conj((*this)(i, j));
    return m;
}

CMat CMat::adjoint() const { return transpose().conj(); }

CMat operator*(const CMat& a, const CMat& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
    CMat c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Cplx aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
        }
    return c;
}

CMat operator+(const CMat& a, const CMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix sum shape mismatch");
    CMat c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
    return c;
}

CMat operator-(const CMat& a, const CMat& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("matrix difference shape mismatch");
    CMat c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
    return c;
}

CMat operator*(Cplx s, const CMat& a) {
    CMat c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
    return c;
}

CVec operator*(const CMat& a, const CVec& v) {
    if (a.cols() != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    CVec w(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Cplx s = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * v[j];
        w[i] = s;
    }
    return w;
}

CMat kron(const CMat& a, const CMat& b) {
    CMat c(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    return c;
}

CVec kron(const CVec& a, const CVec& b) {
    CVec c(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i * b.size() + j] = a[i] * b[j];
    return c;
}

Cplx inner(const CVec& a, const CVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("inner product shape mismatch");
    Cplx s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

double norm2(const CVec& v) {
    double s = 0.0;
    for (const Cplx& x : v) s += std::norm(x);
    return s;
}

double max_abs(const CMat& m) {
    double mx = 0.0;
    for (const Cplx& x : m.data()) mx = std::max(mx, std::abs(x));
    return mx;
}

bool is_unitary(const CMat& m, double tol) {
    if (m.rows() != m.cols()) return false;
    return max_abs(m.adjoint() * m - CMat::identity(m.rows())) < tol;
}

bool is_normalized(const CVec& v, double tol) {
    return std::abs(std::sqrt(norm2(v)) - 1.0) < tol;
}

void apply_single_qubit_gate(CVec& state, const CMat& gate,
                             std::size_t target, std::size_t n_qubits) {
    assert(gate.rows() == 2 && gate.cols() == 2);
    assert(state.size() == (std::size_t{1} << n_qubits));
    assert(target < n_qubits);
    // Qubit 0 is the most-significant factor, so its bit position is n-1-target.
    const std::size_t stride = std::size_t{1} << (n_qubits - 1 - target);
    for (std::size_t base = 0; base < state.size(); ++base) {
        if (base & stride) continue;
        const Cplx a0 = state[base];
        const Cplx a1 = state[base | stride];
        state[base] = gate(0, 0) * a0 + gate(0, 1) * a1;
        state[base | stride] = gate(1, 0) * a0 + gate(1, 1) * a1;
    }
}

namespace {
CMat make_pauli(int which) {
    CMat m(2, 2);
    const Cplx i(0.0, 1.0);
    switch (which) {
        case 0: m(0, 1) = 1.0; m(1, 0) = 1.0; break;          // sigma_x
        case 1: m(0, 1) = -i;  m(1, 0) = i;   break;          // sigma_y
        default: m(0, 0) = 1.0; m(1, 1) = -1.0; break;        // sigma_z
    }
    return m;
}
}  // namespace

const CMat& pauli_x() { static const CMat m = make_pauli(0); return m; }
const CMat& pauli_y() { static const CMat m = make_pauli(1); return m; }
const CMat& pauli_z() { static const CMat m = make_pauli(2); return m; }
const CMat& identity2() { static const CMat m = CMat::identity(2); return m; }

std::pair<Cplx, Cplx> eig2(const CMat& m) {
    if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument("eig2 expects 2x2");
    const Cplx tr = m(0, 0) + m(1, 1);
    const Cplx det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    const Cplx disc = std::sqrt(tr * tr - 4.0 * det);
    return {(tr + disc) / 2.0, (tr - disc) / 2.0};
}

}  // namespace timeflip
