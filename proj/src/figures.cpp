#include "timeflip/figures.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "timeflip/noisy.hpp"
#include "timeflip/optimize.hpp"
#include "timeflip/parallel.hpp"
#include "timeflip/phase.hpp"
#include "timeflip/qfi.hpp"
#include "timeflip/su2.hpp"

namespace timeflip::figures {

namespace {
constexpr double pi = std::numbers::pi;
constexpr double nan_value = std::numeric_limits<double>::quiet_NaN();
}  // namespace

std::vector<Table> qfi_maps(std::size_t n_probes, std::size_t grid,
                            std::uint64_t seed) {
    struct Point { double n1, n2, product, all; };
    std::vector<Point> pts;
    for (std::size_t i = 0; i < grid; ++i)
        for (std::size_t j = 0; j < grid; ++j) {
            const double n1 = -1.0 + 2.0 * static_cast<double>(i) / (grid - 1);
            const double n2 = -1.0 + 2.0 * static_cast<double>(j) / (grid - 1);
            if (n1 * n1 + n2 * n2 > 1.0 + 1e-12) continue;
            pts.push_back({n1, n2, nan_value, nan_value});
        }
    parallel_for(pts.size(), [&](std::size_t k) {
        Point& p = pts[k];
        const double n3 = std::sqrt(std::max(0.0, 1.0 - p.n1 * p.n1 - p.n2 * p.n2));
        const EncodingAxis axis(p.n1, p.n2, n3);
        // A reduced restart budget keeps the whole-map runtime practical; the
        // full budget is reserved for single-point queries and the test suite.
        p.product = maximize_product_qfi(axis, n_probes, seed, 8).best_value;
        p.all = maximize_entangled_qfi(axis, n_probes, seed, 6).best_value;
    });
    Table product{"qfi_map_product", {"n1", "n2", "qfi"}, {}};
    Table all{"qfi_map_all_states", {"n1", "n2", "qfi"}, {}};
    Table diff{"qfi_map_difference", {"n1", "n2", "qfi_gap"}, {}};
    for (const Point& p : pts) {
        product.rows.push_back({p.n1, p.n2, p.product});
        all.rows.push_back({p.n1, p.n2, p.all});
        diff.rows.push_back({p.n1, p.n2, p.all - p.product});
    }
    return {product, all, diff};
}

std::vector<Table> noisy_comparison(double theta, const BlochVector& s,
                                    std::size_t grid) {
    const EncodingAxis y = EncodingAxis::y_axis();
    Table t{"noisy_comparison", {"q", "flip_fi", "switched_fi", "regular_qfi"}, {}};
    for (std::size_t i = 0; i < grid; ++i) {
        const double q = static_cast<double>(i) / (grid - 1);
        t.rows.push_back({q, flip_fi_single(q, theta, 1.0), switched_fi(q, theta),
                          regular_qfi(q, y, s)});
    }
    return {t};
}

std::vector<Table> multiqubit_scan(const std::vector<double>& qs, double theta,
                                   std::size_t n_max, bool per_qubit) {
    const EncodingAxis y = EncodingAxis::y_axis();
    const BlochVector s(0.0, 1.0, 0.0);
    Table t{per_qubit ? "multiqubit_fi_per_qubit" : "multiqubit_fi",
            {"q", "n", per_qubit ? "fi_per_qubit" : "fi"},
            {}};
    for (double q : qs)
        for (std::size_t n = 1; n <= n_max; ++n) {
            const double fi = flip_fi_multi(q, theta, y, s, n, 0.5, 0.0);
            t.rows.push_back(
                {q, static_cast<double>(n),
                 per_qubit ? fi / static_cast<double>(n) : fi});
        }
    return {t};
}

std::vector<Table> threshold_maps(std::size_t grid, std::uint64_t) {
    Table heat{"avg_difference_map", {"q", "n2", "avg_flip_minus_switch"}, {}};
    for (std::size_t i = 0; i < grid; ++i)
        for (std::size_t j = 0; j < grid; ++j) {
            const double q = (i + 0.5) / static_cast<double>(grid);
            const double n2 = static_cast<double>(j) / (grid - 1);
            heat.rows.push_back({q, n2, avg_flip_fi(q, n2) - avg_switch_fi(q)});
        }
    Table curve{"threshold_curve", {"q", "n2_min"}, {}};
    for (std::size_t i = 0; i < grid; ++i) {
        const double q = (i + 0.5) / static_cast<double>(grid);
        const ThresholdResult t = find_n2_threshold(q);
        curve.rows.push_back({q, t.has_root ? t.root : nan_value});
    }
    const double n2_zero = extrapolate_n2_zero();
    const FitResult fit = fit_n2_threshold(default_threshold_grid(), n2_zero);
    Table fitted{"threshold_fit",
                 {"g", "h", "n2_zero", "residual", "g_rel_uncertainty",
                  "h_rel_uncertainty"},
                 {{fit.g, fit.h, fit.n2_zero, fit.residual, fit.g_rel_uncertainty,
                   fit.h_rel_uncertainty}}};
    return {heat, curve, fitted};
}

std::vector<Table> xy_surface(std::size_t grid) {
    Table t{"xy_surface", {"q", "theta", "x", "y", "x_plus_y"}, {}};
    for (std::size_t i = 0; i < grid; ++i)
        for (std::size_t j = 0; j < grid; ++j) {
            const double q = static_cast<double>(i) / (grid - 1);
            const double theta = 2.0 * pi * (j + 0.5) / static_cast<double>(grid);
            const double c = std::cos(theta), sn = std::sin(theta);
            const double x0 = (1.0 + q) * (1.0 + q) + 4.0 * (1.0 - q) * q * c;
            const double x = x0 * x0 / 16.0;
            const double inner = -1.0 + q - 2.0 * q * c;
            const double y =
                (1.0 - q) * (1.0 - q) * sn * sn * (1.0 - 0.25 * inner * inner);
            t.rows.push_back({q, theta, x, y, x + y});
        }
    return {t};
}

std::vector<Table> averaged_multiqubit(const std::vector<double>& qs,
                                       std::size_t n_max, std::size_t resolution) {
    const EncodingAxis y = EncodingAxis::y_axis();
    const BlochVector s(0.0, 1.0, 0.0);
    Table t{"averaged_multiqubit_fi", {"q", "n", "avg_fi", "avg_fi_per_qubit"}, {}};
    for (double q : qs)
        for (std::size_t n = 1; n <= n_max; ++n) {
            const double avg = theta_avg(
                [&](double th) { return flip_fi_multi(q, th, y, s, n, 0.5, 0.0); },
                resolution);
            t.rows.push_back({q, static_cast<double>(n), avg,
                              avg / static_cast<double>(n)});
        }
    return {t};
}

std::vector<Table> averaged_maxima(const std::vector<double>& qs,
                                   std::size_t n_cap, std::size_t resolution) {
    const EncodingAxis y = EncodingAxis::y_axis();
    const BlochVector s(0.0, 1.0, 0.0);
    Table t{"averaged_maxima",
            {"q", "tilde_n", "max_avg_fi_per_qubit", "n_at_max", "max_avg_fi"},
            {}};
    for (double q : qs) {
        double max_fi = -1.0, max_per = -1.0;
        std::size_t arg_fi = 0, arg_per = 0;
        for (std::size_t n = 1; n <= n_cap; ++n) {
            const double avg = theta_avg(
                [&](double th) { return flip_fi_multi(q, th, y, s, n, 0.5, 0.0); },
                resolution);
            if (avg > max_fi) { max_fi = avg; arg_fi = n; }
            const double per = avg / static_cast<double>(n);
            if (per > max_per) { max_per = per; arg_per = n; }
        }
        t.rows.push_back({q, static_cast<double>(arg_per), max_per,
                          static_cast<double>(arg_fi), max_fi});
    }
    return {t};
}

std::vector<Table> phase_optimum_scan(std::size_t n_axes,
                                      const std::vector<std::size_t>& n_probes,
                                      std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g(0.0, 1.0);
    Table t{"phase_optimum_scan",
            {"n1", "n2", "n3", "n", "optimizer_qfi", "closed_form_qfi", "abs_error"},
            {}};
    for (std::size_t a = 0; a < n_axes; ++a) {
        double x, y, z, len;
        do {
            x = g(rng); y = g(rng); z = g(rng);
            len = std::sqrt(x * x + y * y + z * z);
        } while (len < 1e-3);
        const EncodingAxis axis = EncodingAxis::normalized(x, y, z);
        for (std::size_t n : n_probes) {
            const double found = maximize_product_qfi(axis, n, seed + a).best_value;
            const double closed = qfi_phase_max(axis, n);
            t.rows.push_back({axis.n1, axis.n2, axis.n3, static_cast<double>(n),
                              found, closed, std::abs(found - closed)});
        }
    }
    return {t};
}

std::vector<Table> axis_scan(std::size_t grid) {
    const PureQubit probe(0.5, pi);
    Table t{"axis_qfi_scan", {"phi", "n", "qfi_phi"}, {}};
    for (std::size_t i = 0; i < grid; ++i) {
        const double phi = pi * (i + 0.5) / static_cast<double>(grid);
        for (std::size_t n : {1u, 2u, 3u})
            t.rows.push_back({phi, static_cast<double>(n),
                              axis_qfi(pi, phi, pi / 2.0, probe, 0.5, n, AxisParam::phi)});
    }
    return {t};
}

std::vector<Table> spectrum_scan(double n2, std::size_t grid) {
    const EncodingAxis axis =
        EncodingAxis(std::sqrt(std::max(0.0, 1.0 - n2 * n2)), n2, 0.0);
    std::vector<double> thetas(grid), phases(grid);
    for (std::size_t i = 0; i < grid; ++i) {
        thetas[i] = 2.0 * pi * static_cast<double>(i) / (grid - 1);
        phases[i] = spectrum_flip_overlap(axis, thetas[i]).f;
    }
    const std::vector<double> unwrapped = unwrap_phases(phases);
    Table t{"spectrum_scan", {"theta", "eigenphase", "d_eigenphase_d_theta"}, {}};
    for (std::size_t i = 0; i < grid; ++i) {
        double slope = nan_value;
        if (i > 0 && i + 1 < grid)
            slope = (unwrapped[i + 1] - unwrapped[i - 1]) /
                    (thetas[i + 1] - thetas[i - 1]);
        t.rows.push_back({thetas[i], unwrapped[i], slope});
    }
    return {t};
}

std::vector<Table> small_theta_scan(std::size_t grid) {
    constexpr double theta = 1e-4;
    constexpr std::size_t n = 100;
    const EncodingAxis y = EncodingAxis::y_axis();
    Table t{"small_theta_scan",
            {"s_y", "theta_c", "fi_closed_form", "fi_exact_small_theta"},
            {}};
    for (std::size_t i = 0; i < grid; ++i) {
        const double s_y = -1.0 + 2.0 * static_cast<double>(i) / (grid - 1);
        const double s_x = std::sqrt(std::max(0.0, 1.0 - s_y * s_y));
        const BlochVector s(s_x, s_y, 0.0);
        for (double theta_c : {0.0, 0.5}) {
            const PolarOverlap o = overlap_polar(s, y, theta);
            t.rows.push_back({s_y, theta_c, small_theta_fi(s_y, 1.0, n, theta_c),
                              restricted_fi(o, n, 0.5, theta_c)});
        }
    }
    return {t};
}

std::vector<Table> repetition_cases(const std::vector<double>& qs,
                                    std::size_t n_total, double theta) {
    const EncodingAxis y = EncodingAxis::y_axis();
    const BlochVector s(0.0, 1.0, 0.0);
    Table t{"repetition_plan",
            {"q", "tilde_n", "tilde_fi", "repetitions", "effective_fi", "baseline_fi"},
            {}};
    for (double q : qs) {
        const RepetitionPlan p = repetition_plan(q, theta, y, s, n_total);
        t.rows.push_back({q, static_cast<double>(p.tilde_n), p.tilde_fi,
                          static_cast<double>(p.repetitions), p.effective_fi,
                          p.baseline_fi});
    }
    return {t};
}

}  // namespace timeflip::figures
