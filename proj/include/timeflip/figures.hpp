// Dataset generators behind the CLI subcommands: each returns one or more
// tables reproducing a figure or table of results.  All numbers come from
// library operations; no math lives in the CLI layer.
#pragma once

#include <cstdint>
#include <vector>

#include "timeflip/io.hpp"
#include "timeflip/qubit.hpp"

namespace timeflip::figures {

/// QFI maps over the encoding-axis components (n1, n2) for N probe qubits:
/// product-state optimum, all-state optimum, and their difference.
std::vector<Table> qfi_maps(std::size_t n_probes, std::size_t grid,
                            std::uint64_t seed);

/// Single-qubit noisy comparison: flip / switch / regular FI against q.
std::vector<Table> noisy_comparison(double theta, const BlochVector& s,
                                    std::size_t grid);

/// Multiqubit noisy FI against N for each q (optionally per qubit).
std::vector<Table> multiqubit_scan(const std::vector<double>& qs, double theta,
                                   std::size_t n_max, bool per_qubit);

/// Averaged flip-switch difference heatmap over (q, n2), the threshold
/// curve, and the fitted-exponent summary.
std::vector<Table> threshold_maps(std::size_t grid, std::uint64_t seed);

/// x + y surface showing the flip >= switch inequality certificate.
std::vector<Table> xy_surface(std::size_t grid);

/// Theta-averaged multiqubit FI curves against N for each q.
std::vector<Table> averaged_multiqubit(const std::vector<double>& qs,
                                       std::size_t n_max, std::size_t resolution);

/// Theta-averaged maxima / per-qubit maxima table rows for each q.
std::vector<Table> averaged_maxima(const std::vector<double>& qs,
                                   std::size_t n_cap, std::size_t resolution);

/// Optimizer-vs-closed-form verification at random axes.
std::vector<Table> phase_optimum_scan(std::size_t n_axes,
                                      const std::vector<std::size_t>& n_probes,
                                      std::uint64_t seed);

/// Axis-estimation QFI over a phi grid at the optimal operating point.
std::vector<Table> axis_scan(std::size_t grid);

/// Eigenphase of U^dag U^T along a theta scan (unwrapped) with its slope.
std::vector<Table> spectrum_scan(double n2, std::size_t grid);

/// Small-angle FI closed form against the exact expression at theta = 1e-4.
std::vector<Table> small_theta_scan(std::size_t grid);

/// Repetition plans for a fixed qubit budget at each q.
std::vector<Table> repetition_cases(const std::vector<double>& qs,
                                    std::size_t n_total, double theta);

}  // namespace timeflip::figures
