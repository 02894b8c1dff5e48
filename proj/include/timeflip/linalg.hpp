// Dense complex vectors/matrices, tensor products and the handful of
// linear-algebra primitives the rest of the toolkit is built on.
#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace timeflip {

using Cplx = std::complex<double>;
using CVec = std::vector<Cplx>;

/// Small dense complex matrix, row-major.  Dimensions are fixed at
/// construction; element access is bounds-checked in debug builds only.
class CMat {
public:
    CMat() = default;
    CMat(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Cplx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Cplx& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    static CMat identity(std::size_t n);
    static CMat zero(std::size_t rows, std::size_t cols);

    CMat transpose() const;
    CMat adjoint() const;
    CMat conj() const;

    const CVec& data() const { return a_; }

private:
    std::size_t rows_ = 0, cols_ = 0;
    CVec a_;
};

CMat operator*(const CMat& a, const CMat& b);
CMat operator+(const CMat& a, const CMat& b);
CMat operator-(const CMat& a, const CMat& b);
CMat operator*(Cplx s, const CMat& a);
CVec operator*(const CMat& a, const CVec& v);

/// Kronecker product; the first factor is the most-significant index.
CMat kron(const CMat& a, const CMat& b);
CVec kron(const CVec& a, const CVec& b);

/// <a|b> = sum_i conj(a_i) b_i.
Cplx inner(const CVec& a, const CVec& b);
double norm2(const CVec& v);          // squared 2-norm
double max_abs(const CMat& m);        // entrywise max modulus
bool is_unitary(const CMat& m, double tol = 1e-12);
bool is_normalized(const CVec& v, double tol = 1e-12);

/// Applies a 2x2 gate to qubit `target` of an n-qubit statevector, where
/// qubit 0 is the most-significant tensor factor.
void apply_single_qubit_gate(CVec& state, const CMat& gate,
                             std::size_t target, std::size_t n_qubits);

// Pauli matrices and the 2x2 identity.
const CMat& pauli_x();
const CMat& pauli_y();
const CMat& pauli_z();
const CMat& identity2();

/// Eigenvalues of a 2x2 matrix via the closed-form characteristic equation.
std::pair<Cplx, Cplx> eig2(const CMat& m);

}  // namespace timeflip
