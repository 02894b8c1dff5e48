// Time-flip encoding: the controlled forward/backward gate, pure encoded
// states, and the time-flipped Kraus channel for noisy encoding.
#pragma once

#include <vector>

#include "timeflip/linalg.hpp"
#include "timeflip/qubit.hpp"

namespace timeflip {

/// Controlled gate |0><0| (x) U^{(x)N} + |1><1| (x) (U^T)^{(x)N}, stored as
/// its two diagonal blocks.  The control is the most-significant qubit.
struct FlipGate {
    std::size_t n_probes;
    CMat forward;   // U^{(x)N}
    CMat backward;  // (U^T)^{(x)N}

    /// Assembles the full (2^{N+1}) x (2^{N+1}) operator.
    CMat full() const;
};

FlipGate flip_gate(const CMat& U, std::size_t n_probes);

/// |Phi> = sqrt(p_c)|0> (x) U^{(x)N}|psi>
///        + e^{i theta_c} sqrt(1-p_c)|1> (x) (U^T)^{(x)N}|psi>.
CVec encode_pure(const PureQubit& control, const CVec& probe, const CMat& U);

/// Analytic theta-derivative of encode_pure via the product rule, given
/// dU = dU/dtheta.
CVec encode_pure_derivative(const PureQubit& control, const CVec& probe,
                            const CMat& U, const CMat& dU);

/// d(A^{(x)N})|psi> = sum_k A (x) ... (x) dA_k (x) ... (x) A |psi>.
CVec tensor_power_derivative(const CMat& A, const CMat& dA, const CVec& psi);

/// Applies A to every qubit of |psi>.
CVec tensor_power_apply(const CMat& A, const CVec& psi);

/// Per-qubit 2x2 output blocks of the time-flipped channel:
///   m00 = sum_j K_j rho K_j^dag        (forward-forward)
///   m01 = sum_j K_j rho (K_j^T)^dag    (forward-backward coherence)
///   m10 = sum_j K_j^T rho K_j^dag      (backward-forward coherence)
///   m11 = sum_j K_j^T rho (K_j^T)^dag  (backward-backward)
struct ChannelBlocks {
    CMat m00, m01, m10, m11;
};

ChannelBlocks channel_blocks(const std::vector<CMat>& kraus, const CMat& rho);

/// Encoded density operator of the time-flipped channel in factored form:
/// the four control blocks are tensor products of per-qubit 2x2 blocks,
/// which keeps large probe counts cheap.  dense() assembles the full
/// 2^{N+1}-dimensional matrix (intended for small N cross-checks).
struct EncodedDensity {
    double p_c;
    double theta_c;
    std::vector<ChannelBlocks> qubits;

    std::size_t n_probes() const { return qubits.size(); }
    CMat dense() const;
};

/// Requires a bistochastic Kraus set (sum K^dag K = sum K K^dag = I).
EncodedDensity flip_channel(const std::vector<CMat>& kraus,
                            const PureQubit& control,
                            const std::vector<BlochVector>& probes);

bool is_bistochastic(const std::vector<CMat>& kraus, double tol = 1e-12);

/// Reference implementation of the encoded density summing every Kraus
/// string F_s (rho_c (x) rho) F_s^dag with
/// F_s = |0><0| (x) K_{s_1} (x) ... + |1><1| (x) K_{s_1}^T (x) ...;
/// exponential cost, kept for small-N validation of flip_channel.
CMat flip_channel_brute_force(const std::vector<CMat>& kraus,
                              const PureQubit& control,
                              const std::vector<BlochVector>& probes);

}  // namespace timeflip
