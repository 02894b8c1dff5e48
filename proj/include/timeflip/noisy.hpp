// Depolarizing-noise strategies: the noisy-unitary Kraus set, flip-encoded
// Fisher information (single and multi qubit), switched and regular
// baselines, advantage regions, theta-averaged comparisons and the
// repetition plan for a fixed qubit budget.
#pragma once

#include <functional>
#include <vector>

#include "timeflip/linalg.hpp"
#include "timeflip/phase.hpp"
#include "timeflip/qubit.hpp"

namespace timeflip {

/// Depolarizing-composed unitary channel with survival parameter
/// q = 1 - 4p/3 and Kraus set
/// {sqrt(1-p) U, sqrt(p/3) sigma_x U, sqrt(p/3) sigma_y U, sqrt(p/3) sigma_z U}.
struct NoisyChannel {
    double q;
    double theta;
    EncodingAxis axis;
    std::vector<CMat> kraus;
};

NoisyChannel kraus_set(double q, double theta, const EncodingAxis& axis);

/// Branch overlap Tr(sum_j K_j^T rho K_j^dag) in polar form, from the
/// closed-form expression
///   (1+q)/2 - n2^2 q (1-cos theta)
///   + i q n2 [s_y sin theta + (n3 s_x - n1 s_z)(1 - cos theta)],
/// with analytic theta-derivatives.
PolarOverlap noisy_overlap_polar(const BlochVector& probe, const NoisyChannel& channel);

/// Single-qubit flip-encoded Fisher information (probe independent):
///   n2^4 q^2 sin^2 theta / (1 - [(1+q)/2 - n2^2 q (1-cos theta)]^2).
/// Removable 0/0 points return their analytic limits.
double flip_fi_single(double q, double theta, double n2);

/// Fisher information of the switch-based strategy,
/// qt^2 sin^4 theta / (1 - [qt cos theta + (1+q)^2/4]^2), qt = q(1-q).
double switched_fi(double q, double theta);

/// QFI of conventional (uncontrolled) encoding, q^2 |n x s|^2.
double regular_qfi(double q, const EncodingAxis& axis, const BlochVector& s);

/// theta-intervals in (0, 2 pi) where flip beats regular at n = y, s = x:
/// (pi/3, t-) and (t+, 5 pi/3) with t-+ = 4 atan(sqrt(q1 -+ 4 sqrt(q2))),
/// q1 = (5+7q)/(3+q), q2 = (1+4q+3q^2)/(3+q)^2.
std::vector<std::pair<double, double>> advantage_region(double q);

/// Closed-form theta-average of flip_fi_single over [0, 2 pi):
/// 1 - sqrt((3+q)(3+q-4q n2^2))/4 - sqrt((1-q)(1-q+4q n2^2))/4.
double avg_flip_fi(double q, double n2);

/// Closed-form theta-average of the switched strategy:
/// 1 - (sqrt(3)/8)(1-q) sqrt((1-q)(3+5q))
///   - (1/8) sqrt((5+6q-3q^2)(5-2q+5q^2)).
/// Note: this equals the 2 pi average of the angle-doubled integrand
/// switched_fi_doubled (the switch traverses the channel twice), not the
/// average of switched_fi itself.
double avg_switch_fi(double q);

/// qt^2 sin^2(2 theta) / (1 - [qt cos(2 theta) + (1+q)^2/4]^2) -- the
/// integrand whose 2 pi average reproduces avg_switch_fi exactly.
double switched_fi_doubled(double q, double theta);

/// N-qubit flip-encoded Fisher information with identical probes, from the
/// factored overlap (r^N, N f) and the control sigma_x measurement.
double flip_fi_multi(double q, double theta, const EncodingAxis& axis,
                     const BlochVector& probe, std::size_t n_probes,
                     double p_c, double theta_c);

/// Splitting an N_total qubit budget into independent blocks of the
/// per-qubit-optimal size.
struct RepetitionPlan {
    std::size_t tilde_n;      // block size maximizing FI per qubit
    double tilde_fi;          // block Fisher information
    std::size_t repetitions;  // floor(N_total / tilde_n)
    double effective_fi;      // repetitions * tilde_fi
    double baseline_fi;       // regular strategy, N_total q^2
};

/// tilde_n = argmax_N FI/N over N in [1, n_cap] (smallest N on ties); when
/// N_total < tilde_n the whole budget forms one block.
RepetitionPlan repetition_plan(double q, double theta, const EncodingAxis& axis,
                               const BlochVector& probe, std::size_t n_total,
                               std::size_t n_cap = 512);

/// Average of fn over [0, 2 pi) by the composite midpoint rule; the grid is
/// offset by half a step so removable endpoint singularities are never
/// sampled.  Non-finite samples throw with the offending theta.
double theta_avg(const std::function<double(double)>& fn, std::size_t resolution = 4096);

/// Serial reference implementation of theta_avg (identical result).
double theta_avg_serial(const std::function<double(double)>& fn,
                        std::size_t resolution = 4096);

}  // namespace timeflip
