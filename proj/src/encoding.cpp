#include "timeflip/encoding.hpp"

#include <cmath>
#include <stdexcept>

namespace timeflip {

namespace {

CMat tensor_power(const CMat& A, std::size_t n) {
    CMat out = CMat::identity(1);
    for (std::size_t i = 0; i < n; ++i) out = kron(out, A);
    return out;
}

std::size_t probe_qubit_count(std::size_t dim) {
    std::size_t n = 0;
    while ((std::size_t{1} << n) < dim) ++n;
    if ((std::size_t{1} << n) != dim)
        throw std::invalid_argument("probe dimension is not a power of two");
    return n;
}

}  // namespace

CMat FlipGate::full() const {
    const std::size_t d = forward.rows();
    CMat g(2 * d, 2 * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            g(i, j) = forward(i, j);
            g(d + i, d + j) = backward(i, j);
        }
    return g;
}

FlipGate flip_gate(const CMat& U, std::size_t n_probes) {
    if (!is_unitary(U)) throw std::invalid_argument("flip_gate requires a unitary");
    return {n_probes, tensor_power(U, n_probes), tensor_power(U.transpose(), n_probes)};
}

CVec tensor_power_apply(const CMat& A, const CVec& psi) {
    const std::size_t n = probe_qubit_count(psi.size());
    CVec out = psi;
    for (std::size_t k = 0; k < n; ++k) apply_single_qubit_gate(out, A, k, n);
    return out;
}

CVec tensor_power_derivative(const CMat& A, const CMat& dA, const CVec& psi) {
    const std::size_t n = probe_qubit_count(psi.size());
    CVec out(psi.size(), 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        CVec term = psi;
        for (std::size_t j = 0; j < n; ++j)
            apply_single_qubit_gate(term, j == k ? dA : A, j, n);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += term[i];
    }
    return out;
}

namespace {

CVec assemble_encoded(const PureQubit& control, const CVec& fwd, const CVec& bwd) {
    const std::size_t d = fwd.size();
    const Cplx a0 = std::sqrt(control.p);
    const Cplx a1 = std::exp(Cplx(0.0, control.phi)) * std::sqrt(1.0 - control.p);
    CVec out(2 * d);
    for (std::size_t i = 0; i < d; ++i) {
        out[i] = a0 * fwd[i];
        out[d + i] = a1 * bwd[i];
    }
    return out;
}

}  // namespace

CVec encode_pure(const PureQubit& control, const CVec& probe, const CMat& U) {
    if (!is_unitary(U)) throw std::invalid_argument("encode_pure requires a unitary");
    if (!is_normalized(probe)) throw std::invalid_argument("probe must be normalized");
    return assemble_encoded(control, tensor_power_apply(U, probe),
                            tensor_power_apply(U.transpose(), probe));
}

CVec encode_pure_derivative(const PureQubit& control, const CVec& probe,
                            const CMat& U, const CMat& dU) {
    return assemble_encoded(control, tensor_power_derivative(U, dU, probe),
                            tensor_power_derivative(U.transpose(), dU.transpose(), probe));
}

bool is_bistochastic(const std::vector<CMat>& kraus, double tol) {
    if (kraus.empty()) return false;
    const std::size_t d = kraus.front().rows();
    CMat left(d, d), right(d, d);
    for (const CMat& k : kraus) {
        left = left + k.adjoint() * k;
        right = right + k * k.adjoint();
    }
    const CMat id = CMat::identity(d);
    return max_abs(left - id) < tol && max_abs(right - id) < tol;
}

ChannelBlocks channel_blocks(const std::vector<CMat>& kraus, const CMat& rho) {
    const std::size_t d = rho.rows();
    ChannelBlocks b{CMat(d, d), CMat(d, d), CMat(d, d), CMat(d, d)};
    for (const CMat& k : kraus) {
        const CMat kt = k.transpose();
        b.m00 = b.m00 + k * rho * k.adjoint();
        b.m01 = b.m01 + k * rho * kt.adjoint();
        b.m10 = b.m10 + kt * rho * k.adjoint();
        b.m11 = b.m11 + kt * rho * kt.adjoint();
    }
    return b;
}

EncodedDensity flip_channel(const std::vector<CMat>& kraus,
                            const PureQubit& control,
                            const std::vector<BlochVector>& probes) {
    if (!is_bistochastic(kraus))
        throw std::invalid_argument("flip_channel requires a bistochastic Kraus set");
    EncodedDensity out{control.p, control.phi, {}};
    out.qubits.reserve(probes.size());
    for (const BlochVector& s : probes)
        out.qubits.push_back(channel_blocks(kraus, s.density()));
    return out;
}

CMat flip_channel_brute_force(const std::vector<CMat>& kraus,
                              const PureQubit& control,
                              const std::vector<BlochVector>& probes) {
    const std::size_t n = probes.size();
    const std::size_t m = kraus.size();

    CMat rho_c(2, 2);
    {
        const CVec c = control.ket();
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) rho_c(i, j) = c[i] * std::conj(c[j]);
    }
    CMat rho_in = rho_c;
    for (const BlochVector& s : probes) rho_in = kron(rho_in, s.density());

    const std::size_t dim = rho_in.rows();
    CMat out(dim, dim);
    std::size_t strings = 1;
    for (std::size_t i = 0; i < n; ++i) strings *= m;
    for (std::size_t s = 0; s < strings; ++s) {
        CMat fwd = CMat::identity(1), bwd = fwd;
        std::size_t rem = s;
        for (std::size_t i = 0; i < n; ++i) {
            const CMat& k = kraus[rem % m];
            rem /= m;
            fwd = kron(fwd, k);
            bwd = kron(bwd, k.transpose());
        }
        const std::size_t d = fwd.rows();
        CMat f(2 * d, 2 * d);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                f(i, j) = fwd(i, j);
                f(d + i, d + j) = bwd(i, j);
            }
        out = out + f * rho_in * f.adjoint();
    }
    return out;
}

CMat EncodedDensity::dense() const {
    CMat b00 = CMat::identity(1), b01 = b00, b10 = b00, b11 = b00;
    for (const ChannelBlocks& q : qubits) {
        b00 = kron(b00, q.m00);
        b01 = kron(b01, q.m01);
        b10 = kron(b10, q.m10);
        b11 = kron(b11, q.m11);
    }
    const std::size_t d = b00.rows();
    const Cplx c00 = p_c;
    const Cplx c11 = 1.0 - p_c;
    const Cplx c01 = std::sqrt(p_c * (1.0 - p_c)) * std::exp(Cplx(0.0, -theta_c));
    const Cplx c10 = std::conj(c01);
    CMat theta(2 * d, 2 * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            theta(i, j) = c00 * b00(i, j);
            theta(i, d + j) = c01 * b01(i, j);
            theta(d + i, j) = c10 * b10(i, j);
            theta(d + i, d + j) = c11 * b11(i, j);
        }
    return theta;
}

}  // namespace timeflip
