#include "timeflip/phase.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "timeflip/encoding.hpp"
#include "timeflip/qfi.hpp"

namespace timeflip {

PhaseCoefficients phase_AB(const EncodingAxis& axis, const PureQubit& probe,
                           double p_c) {
    const double ps = probe.p, ts = probe.phi;
    const double root = std::sqrt(ps * (1.0 - ps));
    // alpha and beta are purely imaginary; their imaginary parts:
    const double common = axis.n3 * (ps - 0.5) + root * axis.n1 * std::cos(ts);
    const double a_im = common + root * axis.n2 * std::sin(ts);
    const double b_im = common - root * axis.n2 * std::sin(ts);
    const double A = 4.0 * p_c * (1.0 - p_c) * (a_im - b_im) * (a_im - b_im);
    const double B = 4.0 * (p_c * (0.25 - a_im * a_im) +
                            (1.0 - p_c) * (0.25 - b_im * b_im));
    return {A, B};
}

double qfi_phase_max(const EncodingAxis& axis, std::size_t n_probes) {
    const double n = static_cast<double>(n_probes);
    const double n2sq = axis.n2 * axis.n2;
    return n * n * n2sq + n * (1.0 - n2sq);
}

std::pair<double, double> scheme_probabilities(std::size_t n_probes, double theta) {
    const double c = std::cos(static_cast<double>(n_probes) * theta);
    return {0.5 * (1.0 + c), 0.5 * (1.0 - c)};
}

double classical_fi(const std::vector<std::pair<double, double>>& outcome_probs) {
    double total_p = 0.0, total_dp = 0.0, fi = 0.0;
    for (const auto& [p, dp] : outcome_probs) {
        total_p += p;
        total_dp += dp;
        if (p < 1e-15) {
            if (std::abs(dp) > 1e-12)
                throw std::domain_error("singular outcome: p = 0 with dp != 0");
            continue;  // 0/0 outcome contributes nothing
        }
        fi += dp * dp / p;
    }
    if (std::abs(total_p - 1.0) > 1e-9)
        throw std::invalid_argument("outcome probabilities must sum to 1");
    if (std::abs(total_dp) > 1e-9)
        throw std::invalid_argument("outcome derivatives must sum to 0");
    return fi;
}

PolarOverlap polar_overlap_from_cartesian(double re, double im, double dre,
                                          double dim) {
    PolarOverlap o{};
    o.r = std::hypot(re, im);
    o.f = std::atan2(im, re);
    if (o.r < 1e-300) {
        o.dr = 0.0;
        o.df = 0.0;
    } else {
        o.dr = (re * dre + im * dim) / o.r;
        o.df = (re * dim - im * dre) / (o.r * o.r);
    }
    return o;
}

PolarOverlap overlap_polar(const BlochVector& s, const EncodingAxis& axis,
                           double theta) {
    const double n1 = axis.n1, n2 = axis.n2, n3 = axis.n3;
    const double c = std::cos(theta), sn = std::sin(theta);
    const double cross = n3 * s.x - n1 * s.z;
    const double re = 1.0 - n2 * n2 * (1.0 - c);
    const double im = n2 * (s.y * sn + cross * (1.0 - c));
    const double dre = -n2 * n2 * sn;
    const double dim = n2 * (s.y * c + cross * sn);
    return polar_overlap_from_cartesian(re, im, dre, dim);
}

double restricted_fi(const PolarOverlap& o, std::size_t n_probes,
                     double p_c, double theta_c) {
    const double n = static_cast<double>(n_probes);
    const double vis = 4.0 * p_c * (1.0 - p_c);
    const double arg = n * o.f + theta_c;
    const double cs = std::cos(arg), sn = std::sin(arg);
    const double r2n = std::pow(o.r, 2.0 * n);
    const double denom = 1.0 - vis * r2n * cs * cs;
    if (denom < 1e-12) return n * n * o.df * o.df;  // r = 1, dr = 0 limit
    const double signal = o.dr * cs - o.r * o.df * sn;
    const double r2nm2 = std::pow(o.r, 2.0 * n - 2.0);
    return vis * n * n * r2nm2 * signal * signal / denom;
}

FlipSpectrum spectrum_flip_overlap(const EncodingAxis& axis, double theta) {
    if (std::abs(axis.n2) < 1e-14) {
        // U^T = U: the overlap operator is the identity.
        return {true, 0.0, {1.0, 0.0}, {0.0, 1.0}};
    }
    const CMat U = su2_unitary(theta, axis);
    const CMat V = U.adjoint() * U.transpose();
    const double s2 = std::sin(theta / 2.0) * std::sin(theta / 2.0);
    const double k = axis.n2 * axis.n2 * s2;
    const double f = std::atan2(2.0 * std::sqrt(std::max(0.0, k * (1.0 - k))),
                                1.0 - 2.0 * k);
    const Cplx lp = std::exp(Cplx(0.0, f));
    auto eigvec = [&](Cplx lambda) {
        // (V - lambda) v = 0: take the larger of the two nullspace candidates.
        CVec a{V(0, 1), lambda - V(0, 0)};
        CVec b{lambda - V(1, 1), V(1, 0)};
        CVec v = norm2(a) >= norm2(b) ? a : b;
        const double len = std::sqrt(norm2(v));
        if (len < 1e-14) return CVec{1.0, 0.0};  // theta = 0: V = I
        for (Cplx& x : v) x /= len;
        return v;
    };
    return {false, f, eigvec(lp), eigvec(std::conj(lp))};
}

double small_theta_fi(double s_y, double n2, std::size_t n_probes, double theta_c) {
    const double n = static_cast<double>(n_probes);
    const double n2sq = n2 * n2;
    double fi = s_y * s_y * n2sq * n * n;
    if (theta_c == 0.0) fi += (1.0 - s_y * s_y) * n2sq * n;
    return fi;
}

double axis_qfi(double theta, double phi, double xi, const PureQubit& probe,
                double p_c, std::size_t n_probes, AxisParam target) {
    const PureQubit control(p_c, 0.7);  // theta_c drops out of the QFI
    CVec amplitudes{1.0};
    const CVec single = probe.ket();
    for (std::size_t i = 0; i < n_probes; ++i) amplitudes = kron(amplitudes, single);

    auto encoded = [&](double x) {
        const double ph = target == AxisParam::phi ? x : phi;
        const double x_i = target == AxisParam::xi ? x : xi;
        return encode_pure(control, amplitudes, su2_unitary(theta, polar_axis(ph, x_i)));
    };
    const double x0 = target == AxisParam::phi ? phi : xi;
    const double h = 1e-6;
    const CVec plus = encoded(x0 + h), minus = encoded(x0 - h);
    CVec dstate(plus.size());
    for (std::size_t i = 0; i < plus.size(); ++i)
        dstate[i] = (plus[i] - minus[i]) / (2.0 * h);
    return qfi_pure(encoded(x0), dstate);
}

std::vector<double> unwrap_phases(std::vector<double> phases) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double shift = 0.0;
    for (std::size_t i = 1; i < phases.size(); ++i) {
        const double prev = phases[i - 1];
        double cur = phases[i] + shift;
        while (cur - prev > std::numbers::pi) { cur -= two_pi; shift -= two_pi; }
        while (prev - cur > std::numbers::pi) { cur += two_pi; shift += two_pi; }
        phases[i] = cur;
    }
    return phases;
}

}  // namespace timeflip
