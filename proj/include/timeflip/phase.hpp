// Phase- and axis-estimation specializations: the (A, B) coefficients of
// QFI = A N^2 + B N, the control sigma_x measurement scheme, restricted
// measurement Fisher information, the spectrum of U^dag U^T, and small-angle
// limits.
#pragma once

#include <utility>
#include <vector>

#include "timeflip/linalg.hpp"
#include "timeflip/qubit.hpp"
#include "timeflip/su2.hpp"

namespace timeflip {

/// Branch overlap <chi|omega> in polar form r e^{i f} with analytic
/// theta-derivatives.
struct PolarOverlap {
    double r;   // modulus, in [0, 1]
    double f;   // phase (principal branch; unwrap along scans)
    double dr;  // dr/dtheta
    double df;  // df/dtheta
};

/// QFI = A N^2 + B N for symmetric product probes in phase estimation;
/// both coefficients are independent of theta.
struct PhaseCoefficients {
    double A;
    double B;
};

PhaseCoefficients phase_AB(const EncodingAxis& axis, const PureQubit& probe,
                           double p_c);

/// Optimal phase-estimation QFI, N^2 n2^2 + N (1 - n2^2).
double qfi_phase_max(const EncodingAxis& axis, std::size_t n_probes);

/// Control sigma_x measurement statistics p(+|theta), p(-|theta)
/// = (1 +- cos(N theta))/2 at the optimal probe/control point.
std::pair<double, double> scheme_probabilities(std::size_t n_probes, double theta);

/// Classical Fisher information sum_b (dp_b)^2 / p_b from a list of
/// (probability, derivative) pairs.  A vanishing probability with nonzero
/// derivative is a genuine singularity and throws; 0/0 contributes 0.
double classical_fi(const std::vector<std::pair<double, double>>& outcome_probs);

/// Noiseless branch overlap in polar form (mixed probes allowed).
PolarOverlap overlap_polar(const BlochVector& probe, const EncodingAxis& axis,
                           double theta);

/// Converts re + i im (with derivatives) to polar form with dr, df.
PolarOverlap polar_overlap_from_cartesian(double re, double im, double dre,
                                          double dim);

/// Fisher information of the control sigma_x measurement for N identical
/// probes with branch overlap r e^{i f}:
///   4 p_c (1-p_c) N^2 r^{2N-2} (dr cos(Nf+theta_c) - r df sin(Nf+theta_c))^2
///   / (1 - 4 p_c (1-p_c) r^{2N} cos^2(Nf+theta_c)).
/// The removable singularity at r = 1, dr = 0, p_c = 1/2, cos^2 = 1 is
/// evaluated by its analytic limit N^2 df^2.
double restricted_fi(const PolarOverlap& overlap, std::size_t n_probes,
                     double p_c, double theta_c);

/// Eigenphases +-f and eigenvectors of U^dag U^T.  At n2 = 0 the operator
/// is the identity and the spectrum is degenerate.
struct FlipSpectrum {
    bool degenerate;
    double f;  // eigenphase, in [0, pi]
    CVec v_plus, v_minus;
};

FlipSpectrum spectrum_flip_overlap(const EncodingAxis& axis, double theta);

/// Large-N small-angle Fisher information
/// s_y^2 n2^2 N^2 + (1 - s_y^2) n2^2 N [theta_c == 0].
/// The Kronecker delta is an exact equality test: the limit is
/// discontinuous at theta_c = 0.
double small_theta_fi(double s_y, double n2, std::size_t n_probes, double theta_c);

/// QFI for estimating an axis angle (phi or xi) of
/// n(phi, xi) = (sin phi cos xi, sin phi sin xi, cos phi) at fixed theta,
/// with N identical probes.  The parameter derivative of the encoded state
/// is taken by central finite difference (h = 1e-6); the analytic route via
/// su2_axis_derivative is kept for cross-checks.
double axis_qfi(double theta, double phi, double xi, const PureQubit& probe,
                double p_c, std::size_t n_probes, AxisParam target);

/// Removes 2*pi jumps between consecutive entries of a phase scan.
std::vector<double> unwrap_phases(std::vector<double> phases);

}  // namespace timeflip
