// Quantum Fisher information engines: pure-state QFI, product and symmetric
// closed forms, the no-advantage condition, the advantage measure, and exact
// QFI for arbitrary (entangled) probe amplitudes.
#pragma once

#include <string>
#include <vector>

#include "timeflip/encoding.hpp"
#include "timeflip/linalg.hpp"
#include "timeflip/qubit.hpp"

namespace timeflip {

/// Per-probe-qubit overlaps of the forward (|chi> = U|psi>) and backward
/// (|omega> = U^T|psi>) branches:
///   alpha_k     = <dchi_k|chi_k>
///   beta_k      = <domega_k|omega_k>
///   chi_norm_k  = <dchi_k|dchi_k>
///   omega_norm_k= <domega_k|domega_k>
struct ProductOverlaps {
    std::vector<Cplx> alpha, beta;
    std::vector<double> chi_norm, omega_norm;

    std::size_t size() const { return alpha.size(); }
};

/// Scalar FI/QFI value tagged with the strategy and parameter point that
/// produced it (CLI plumbing).
struct FisherResult {
    double value;
    std::string strategy;  // "flip" | "switch" | "regular"
    std::vector<double> params;
};

/// QFI of a pure state: 4(<dpsi|dpsi> - |<dpsi|psi>|^2).  Round-off
/// negatives above -1e-10 clamp to 0; anything lower throws.
double qfi_pure(const CVec& state, const CVec& dstate);

ProductOverlaps product_overlaps(const std::vector<PureQubit>& probes,
                                 const CMat& U, const CMat& dU);

/// Product-probe QFI from the per-qubit overlaps.
double qfi_product(const PureQubit& control, const ProductOverlaps& overlaps);

/// Closed form for N identical probe qubits:
///   4 N^2 p_c(1-p_c)|alpha - beta|^2
/// + 4 N [p_c(chi_norm - |alpha|^2) + (1-p_c)(omega_norm - |beta|^2)].
double qfi_symmetric(const PureQubit& control, const PureQubit& probe,
                     const CMat& U, const CMat& dU, std::size_t n_probes);

/// (dU)^dag U - (dU^T)^dag U^T; zero iff the flip gives no quadratic term.
CMat flip_asymmetry(const CMat& U, const CMat& dU);

/// True iff the no-advantage condition holds within tol (max-norm).
bool nac_check(const CMat& U, const CMat& dU, double tol = 1e-12);

/// M_A = 4 p_c (1-p_c) |lambda_max|^2 with lambda_max the max-modulus
/// eigenvalue of flip_asymmetry.
double advantage_measure(const CMat& U, const CMat& dU, double p_c);

/// Exact QFI of the encoded state for arbitrary normalized probe
/// amplitudes (dim 2^N, N <= 12).
double qfi_entangled_exact(const PureQubit& control, const CVec& amplitudes,
                           const CMat& U, const CMat& dU);

/// Upper bound 4<dPhi|dPhi> >= QFI.
double qfi_upper_bound(const PureQubit& control, const CVec& amplitudes,
                       const CMat& U, const CMat& dU);

}  // namespace timeflip
