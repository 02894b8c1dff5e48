#include "timeflip/noisy.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "timeflip/parallel.hpp"
#include "timeflip/su2.hpp"

namespace timeflip {

namespace {
constexpr double two_pi = 2.0 * std::numbers::pi;
}

NoisyChannel kraus_set(double q, double theta, const EncodingAxis& axis) {
    if (q < 0.0 || q > 1.0) throw std::domain_error("noise parameter q outside [0,1]");
    const double p = 3.0 * (1.0 - q) / 4.0;
    const CMat U = su2_unitary(theta, axis);
    NoisyChannel ch{q, theta, axis, {}};
    ch.kraus.push_back(Cplx(std::sqrt(1.0 - p)) * U);
    if (p > 0.0) {
        const double w = std::sqrt(p / 3.0);
        ch.kraus.push_back(Cplx(w) * (pauli_x() * U));
        ch.kraus.push_back(Cplx(w) * (pauli_y() * U));
        ch.kraus.push_back(Cplx(w) * (pauli_z() * U));
    }
    return ch;
}

PolarOverlap noisy_overlap_polar(const BlochVector& s, const NoisyChannel& ch) {
    const double q = ch.q, theta = ch.theta;
    const double n1 = ch.axis.n1, n2 = ch.axis.n2, n3 = ch.axis.n3;
    const double c = std::cos(theta), sn = std::sin(theta);
    const double cross = n3 * s.x - n1 * s.z;
    const double re = 0.5 * (1.0 + q) - n2 * n2 * q * (1.0 - c);
    const double im = q * n2 * (s.y * sn + cross * (1.0 - c));
    const double dre = -n2 * n2 * q * sn;
    const double dim = q * n2 * (s.y * c + cross * sn);
    return polar_overlap_from_cartesian(re, im, dre, dim);
}

double flip_fi_single(double q, double theta, double n2) {
    const double x = 0.5 * (1.0 + q) - n2 * n2 * q * (1.0 - std::cos(theta));
    const double denom = 1.0 - x * x;
    const double sn = std::sin(theta);
    if (denom < 1e-12) {
        // Reachable only as q -> 1: limit n2^2 at theta -> 0 (0/0), 0 otherwise.
        return (std::abs(sn) < 1e-6 && n2 != 0.0) ? n2 * n2 * q * q : 0.0;
    }
    const double n2sq = n2 * n2;
    return n2sq * n2sq * q * q * sn * sn / denom;
}

namespace {

double switched_fi_impl(double q, double theta) {
    const double qt = q * (1.0 - q);
    const double s = qt * std::cos(theta) + 0.25 * (1.0 + q) * (1.0 + q);
    const double denom = 1.0 - s * s;
    if (denom < 1e-12) return 0.0;  // q -> 1: numerator vanishes faster
    const double sn2 = std::sin(theta) * std::sin(theta);
    return qt * qt * sn2 * sn2 / denom;
}

}  // namespace

double switched_fi(double q, double theta) { return switched_fi_impl(q, theta); }

double switched_fi_doubled(double q, double theta) {
    const double qt = q * (1.0 - q);
    const double s = qt * std::cos(2.0 * theta) + 0.25 * (1.0 + q) * (1.0 + q);
    const double denom = 1.0 - s * s;
    if (denom < 1e-12) return 0.0;
    const double sn = std::sin(2.0 * theta);
    return qt * qt * sn * sn / denom;
}

double regular_qfi(double q, const EncodingAxis& axis, const BlochVector& s) {
    const double cx = axis.n2 * s.z - axis.n3 * s.y;
    const double cy = axis.n3 * s.x - axis.n1 * s.z;
    const double cz = axis.n1 * s.y - axis.n2 * s.x;
    return q * q * (cx * cx + cy * cy + cz * cz);
}

std::vector<std::pair<double, double>> advantage_region(double q) {
    if (q < 0.0 || q > 1.0) throw std::domain_error("noise parameter q outside [0,1]");
    const double q1 = (5.0 + 7.0 * q) / (3.0 + q);
    const double q2 = (1.0 + 4.0 * q + 3.0 * q * q) / ((3.0 + q) * (3.0 + q));
    const double lo = 4.0 * std::atan(std::sqrt(std::max(0.0, q1 - 4.0 * std::sqrt(q2))));
    const double hi = 4.0 * std::atan(std::sqrt(q1 + 4.0 * std::sqrt(q2)));
    const double pi = std::numbers::pi;
    return {{pi / 3.0, lo}, {hi, 5.0 * pi / 3.0}};
}

double avg_flip_fi(double q, double n2) {
    const double n2sq = n2 * n2;
    return 1.0 - 0.25 * std::sqrt((3.0 + q) * (3.0 + q - 4.0 * q * n2sq)) -
           0.25 * std::sqrt((1.0 - q) * (1.0 - q + 4.0 * q * n2sq));
}

double avg_switch_fi(double q) {
    return 1.0 -
           (std::sqrt(3.0) / 8.0) * (1.0 - q) * std::sqrt((1.0 - q) * (3.0 + 5.0 * q)) -
           0.125 * std::sqrt((5.0 + 6.0 * q - 3.0 * q * q) *
                             (5.0 - 2.0 * q + 5.0 * q * q));
}

double flip_fi_multi(double q, double theta, const EncodingAxis& axis,
                     const BlochVector& probe, std::size_t n_probes,
                     double p_c, double theta_c) {
    const NoisyChannel ch = kraus_set(q, theta, axis);
    const PolarOverlap o = noisy_overlap_polar(probe, ch);
    return restricted_fi(o, n_probes, p_c, theta_c);
}

RepetitionPlan repetition_plan(double q, double theta, const EncodingAxis& axis,
                               const BlochVector& probe, std::size_t n_total,
                               std::size_t n_cap) {
    if (n_total < 1) throw std::domain_error("qubit budget must be positive");
    std::size_t best_n = 1;
    double best_per_qubit = -1.0, best_fi = 0.0;
    for (std::size_t n = 1; n <= n_cap; ++n) {
        const double fi = flip_fi_multi(q, theta, axis, probe, n, 0.5, 0.0);
        const double per_qubit = fi / static_cast<double>(n);
        if (per_qubit > best_per_qubit) {
            best_per_qubit = per_qubit;
            best_n = n;
            best_fi = fi;
        }
    }
    RepetitionPlan plan{};
    plan.baseline_fi = static_cast<double>(n_total) * q * q;
    if (n_total < best_n) {
        plan.tilde_n = n_total;
        plan.tilde_fi = flip_fi_multi(q, theta, axis, probe, n_total, 0.5, 0.0);
        plan.repetitions = 1;
    } else {
        plan.tilde_n = best_n;
        plan.tilde_fi = best_fi;
        plan.repetitions = n_total / best_n;
    }
    plan.effective_fi = static_cast<double>(plan.repetitions) * plan.tilde_fi;
    return plan;
}

namespace {

template <class Loop>
double theta_avg_impl(const std::function<double(double)>& fn,
                      std::size_t resolution, Loop&& loop) {
    if (resolution == 0) throw std::domain_error("quadrature resolution must be positive");
    const double h = two_pi / static_cast<double>(resolution);
    std::vector<double> samples(resolution);
    loop(resolution, [&](std::size_t i) {
        samples[i] = fn((static_cast<double>(i) + 0.5) * h);
    });
    double sum = 0.0;
    for (std::size_t i = 0; i < resolution; ++i) {
        if (!std::isfinite(samples[i])) {
            std::ostringstream msg;
            msg << "non-finite quadrature sample at theta = "
                << (static_cast<double>(i) + 0.5) * h;
            throw std::runtime_error(msg.str());
        }
        sum += samples[i];
    }
    return sum / static_cast<double>(resolution);
}

}  // namespace

double theta_avg(const std::function<double(double)>& fn, std::size_t resolution) {
    return theta_avg_impl(fn, resolution,
                          [](std::size_t n, auto&& f) { parallel_for(n, f); });
}

double theta_avg_serial(const std::function<double(double)>& fn,
                        std::size_t resolution) {
    return theta_avg_impl(fn, resolution,
                          [](std::size_t n, auto&& f) { serial_for(n, f); });
}

}  // namespace timeflip
