#include "timeflip/qfi.hpp"

#include <cmath>
#include <stdexcept>

namespace timeflip {

double qfi_pure(const CVec& state, const CVec& dstate) {
    if (state.size() != dstate.size())
        throw std::invalid_argument("state/derivative dimension mismatch");
    const double q = 4.0 * (norm2(dstate) - std::norm(inner(dstate, state)));
    if (q < -1e-10)
        throw std::runtime_error("pure-state QFI came out significantly negative");
    return q < 0.0 ? 0.0 : q;
}

ProductOverlaps product_overlaps(const std::vector<PureQubit>& probes,
                                 const CMat& U, const CMat& dU) {
    const CMat Ut = U.transpose();
    const CMat dUt = dU.transpose();
    ProductOverlaps o;
    o.alpha.reserve(probes.size());
    o.beta.reserve(probes.size());
    o.chi_norm.reserve(probes.size());
    o.omega_norm.reserve(probes.size());
    for (const PureQubit& q : probes) {
        const CVec psi = q.ket();
        const CVec chi = U * psi, dchi = dU * psi;
        const CVec omega = Ut * psi, domega = dUt * psi;
        o.alpha.push_back(inner(dchi, chi));
        o.beta.push_back(inner(domega, omega));
        o.chi_norm.push_back(norm2(dchi));
        o.omega_norm.push_back(norm2(domega));
    }
    return o;
}

double qfi_product(const PureQubit& control, const ProductOverlaps& o) {
    Cplx sum_alpha = 0.0, sum_beta = 0.0;
    double sq_alpha = 0.0, sq_beta = 0.0, sum_chi = 0.0, sum_omega = 0.0;
    for (std::size_t k = 0; k < o.size(); ++k) {
        sum_alpha += o.alpha[k];
        sum_beta += o.beta[k];
        sq_alpha += std::norm(o.alpha[k]);
        sq_beta += std::norm(o.beta[k]);
        sum_chi += o.chi_norm[k];
        sum_omega += o.omega_norm[k];
    }
    const double pc = control.p;
    // The cross term sum_{j != k} a_k a_j^* equals |sum a|^2 - sum |a|^2.
    const double fwd = sum_chi + std::norm(sum_alpha) - sq_alpha;
    const double bwd = sum_omega + std::norm(sum_beta) - sq_beta;
    const double mean = std::norm(pc * sum_alpha + (1.0 - pc) * sum_beta);
    const double q = 4.0 * (pc * fwd + (1.0 - pc) * bwd - mean);
    return q < 0.0 && q > -1e-10 ? 0.0 : q;
}

double qfi_symmetric(const PureQubit& control, const PureQubit& probe,
                     const CMat& U, const CMat& dU, std::size_t n_probes) {
    const ProductOverlaps o = product_overlaps({probe}, U, dU);
    const double pc = control.p;
    const double n = static_cast<double>(n_probes);
    const double quad = 4.0 * n * n * pc * (1.0 - pc) * std::norm(o.alpha[0] - o.beta[0]);
    const double lin =
        4.0 * n * (pc * (o.chi_norm[0] - std::norm(o.alpha[0])) +
                   (1.0 - pc) * (o.omega_norm[0] - std::norm(o.beta[0])));
    return quad + lin;
}

CMat flip_asymmetry(const CMat& U, const CMat& dU) {
    const CMat Ut = U.transpose();
    const CMat dUt = dU.transpose();
    return dU.adjoint() * U - dUt.adjoint() * Ut;
}

bool nac_check(const CMat& U, const CMat& dU, double tol) {
    return max_abs(flip_asymmetry(U, dU)) < tol;
}

double advantage_measure(const CMat& U, const CMat& dU, double p_c) {
    const auto [l1, l2] = eig2(flip_asymmetry(U, dU));
    const double lmax = std::max(std::abs(l1), std::abs(l2));
    return 4.0 * p_c * (1.0 - p_c) * lmax * lmax;
}

namespace {

void check_probe_size(const CVec& amplitudes) {
    if (amplitudes.size() > (std::size_t{1} << 12))
        throw std::length_error("entangled probe limited to 12 qubits (dense statevector)");
    if (!is_normalized(amplitudes))
        throw std::invalid_argument("probe amplitudes must be normalized");
}

}  // namespace

double qfi_entangled_exact(const PureQubit& control, const CVec& amplitudes,
                           const CMat& U, const CMat& dU) {
    check_probe_size(amplitudes);
    const CVec phi = encode_pure(control, amplitudes, U);
    const CVec dphi = encode_pure_derivative(control, amplitudes, U, dU);
    return qfi_pure(phi, dphi);
}

double qfi_upper_bound(const PureQubit& control, const CVec& amplitudes,
                       const CMat& U, const CMat& dU) {
    check_probe_size(amplitudes);
    const CVec dphi = encode_pure_derivative(control, amplitudes, U, dU);
    return 4.0 * norm2(dphi);
}

}  // namespace timeflip
