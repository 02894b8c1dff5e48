// Derivative-free maximization (multi-start Nelder-Mead) over probe and
// control parameters or full state spaces, plus root finding and curve
// fitting for the n2 threshold between the flip and switched strategies.
#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "timeflip/qubit.hpp"

namespace timeflip {

struct OptimizationResult {
    double best_value;
    std::vector<double> best_point;
    int restarts_used;
    bool converged;                // at least one restart met the diameter tol
    double tolerance_achieved;     // final simplex diameter of the best restart
};

struct NelderMeadOptions {
    int restarts = 32;
    std::size_t max_evals = 10000;   // per restart
    double diameter_tol = 1e-9;
    std::uint64_t seed = 12345;
};

/// Multi-start simplex ascent.  Start points are drawn uniformly from the
/// [lower, upper] box; each restart owns a seed derived from options.seed,
/// so the result is deterministic regardless of thread scheduling.
OptimizationResult nelder_mead_maximize(
    const std::function<double(const std::vector<double>&)>& objective,
    const std::vector<double>& lower, const std::vector<double>& upper,
    const NelderMeadOptions& options = {});

/// Maximizes the symmetric-product-probe QFI over (theta_s, p_s, p_c,
/// theta_c) at fixed theta = 1 (phase-estimation QFI is theta independent).
OptimizationResult maximize_product_qfi(const EncodingAxis& axis,
                                        std::size_t n_probes,
                                        std::uint64_t seed = 12345,
                                        int restarts = 32);

/// Maximizes the exact QFI over all probe amplitudes (2^{N+1} real
/// parameters) jointly with the control; N <= 4.
/// The restart budget trades accuracy for speed; map generators lower it.
OptimizationResult maximize_entangled_qfi(const EncodingAxis& axis,
                                          std::size_t n_probes,
                                          std::uint64_t seed = 12345,
                                          int restarts = 32);

/// Root of avg_flip_fi(q, n2) - avg_switch_fi(q) in n2 over (0, 1).
struct ThresholdResult {
    bool has_root;
    double root;       // valid when has_root
    double diff_low;   // average difference near n2 = 0
    double diff_high;  // average difference near n2 = 1
};

ThresholdResult find_n2_threshold(double q);

/// q -> 0 limit of the threshold, by quadratic extrapolation of the roots
/// at q = 0.04, 0.02, 0.01.
double extrapolate_n2_zero();

struct FitResult {
    double g, h;              // exponents of n2_min = n2_zero (1 - q^g)^{1/h}
    double n2_zero;           // held fixed during the fit
    double residual;          // sum of squared errors
    double g_rel_uncertainty; // sqrt of diagonal covariance over |value|
    double h_rel_uncertainty;
};

/// Least-squares fit of (g, h) to the threshold roots on q_grid (>= 20
/// points in (0, 1)), with n2_zero held fixed.
FitResult fit_n2_threshold(const std::vector<double>& q_grid, double n2_zero);

/// Same fit against externally supplied (q, root) data.
FitResult fit_threshold_model(const std::vector<double>& q_grid,
                              const std::vector<double>& roots, double n2_zero);

/// Grid the fit is quoted on: 50 uniform points in [0.5, 0.999].
std::vector<double> default_threshold_grid();

}  // namespace timeflip
