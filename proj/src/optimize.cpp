#include "timeflip/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "timeflip/noisy.hpp"
#include "timeflip/parallel.hpp"
#include "timeflip/qfi.hpp"
#include "timeflip/su2.hpp"

namespace timeflip {

namespace {

struct SingleRunResult {
    double value;
    std::vector<double> point;
    bool converged;
    double diameter;
};

double simplex_diameter(const std::vector<std::vector<double>>& verts) {
    double d = 0.0;
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b) {
            double s = 0.0;
            for (std::size_t i = 0; i < verts[a].size(); ++i) {
                const double t = verts[a][i] - verts[b][i];
                s += t * t;
            }
            d = std::max(d, std::sqrt(s));
        }
    return d;
}

/// One Nelder-Mead descent (minimization) from the given start point.
SingleRunResult nelder_mead_single(
    const std::function<double(const std::vector<double>&)>& f,
    const std::vector<double>& start, const std::vector<double>& scale,
    std::size_t max_evals, double diameter_tol) {
    const std::size_t dim = start.size();
    std::vector<std::vector<double>> x(dim + 1, start);
    for (std::size_t i = 0; i < dim; ++i) x[i + 1][i] += scale[i];

    std::vector<double> fx(dim + 1);
    std::size_t evals = 0;
    for (std::size_t j = 0; j <= dim; ++j) { fx[j] = f(x[j]); ++evals; }

    constexpr double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;
    double diameter = simplex_diameter(x);
    while (evals < max_evals) {
        // Order vertices by value.
        std::vector<std::size_t> idx(dim + 1);
        for (std::size_t j = 0; j <= dim; ++j) idx[j] = j;
        std::sort(idx.begin(), idx.end(),
                  [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
        std::vector<std::vector<double>> xs(dim + 1);
        std::vector<double> fs(dim + 1);
        for (std::size_t j = 0; j <= dim; ++j) { xs[j] = x[idx[j]]; fs[j] = fx[idx[j]]; }
        x.swap(xs); fx.swap(fs);

        diameter = simplex_diameter(x);
        if (diameter < diameter_tol) break;

        std::vector<double> centroid(dim, 0.0);
        for (std::size_t j = 0; j < dim; ++j)
            for (std::size_t i = 0; i < dim; ++i) centroid[i] += x[j][i];
        for (double& c : centroid) c /= static_cast<double>(dim);

        auto along = [&](double t) {
            std::vector<double> p(dim);
            for (std::size_t i = 0; i < dim; ++i)
                p[i] = centroid[i] + t * (centroid[i] - x[dim][i]);
            return p;
        };

        const std::vector<double> xr = along(alpha);
        const double fr = f(xr); ++evals;
        if (fr < fx[0]) {
            const std::vector<double> xe = along(alpha * gamma);
            const double fe = f(xe); ++evals;
            if (fe < fr) { x[dim] = xe; fx[dim] = fe; }
            else         { x[dim] = xr; fx[dim] = fr; }
        } else if (fr < fx[dim - 1]) {
            x[dim] = xr; fx[dim] = fr;
        } else {
            const bool outside = fr < fx[dim];
            const std::vector<double> xc = along(outside ? rho * alpha : -rho);
            const double fc = f(xc); ++evals;
            if (fc < (outside ? fr : fx[dim])) {
                x[dim] = xc; fx[dim] = fc;
            } else {
                for (std::size_t j = 1; j <= dim; ++j) {
                    for (std::size_t i = 0; i < dim; ++i)
                        x[j][i] = x[0][i] + sigma * (x[j][i] - x[0][i]);
                    fx[j] = f(x[j]); ++evals;
                }
            }
        }
    }

    std::size_t best = 0;
    for (std::size_t j = 1; j <= dim; ++j)
        if (fx[j] < fx[best]) best = j;
    return {fx[best], x[best], diameter < diameter_tol, diameter};
}

}  // namespace

OptimizationResult nelder_mead_maximize(
    const std::function<double(const std::vector<double>&)>& objective,
    const std::vector<double>& lower, const std::vector<double>& upper,
    const NelderMeadOptions& options) {
    if (lower.size() != upper.size() || lower.empty())
        throw std::invalid_argument("bound vectors must be nonempty and equal length");
    const std::size_t dim = lower.size();
    auto neg = [&](const std::vector<double>& x) { return -objective(x); };

    std::vector<SingleRunResult> runs(options.restarts);
    parallel_for(static_cast<std::size_t>(options.restarts), [&](std::size_t r) {
        std::mt19937_64 rng(options.seed + 0x9e3779b97f4a7c15ULL * (r + 1));
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        std::vector<double> start(dim), scale(dim);
        for (std::size_t i = 0; i < dim; ++i) {
            start[i] = lower[i] + (upper[i] - lower[i]) * u01(rng);
            scale[i] = 0.1 * (upper[i] - lower[i]);
        }
        runs[r] = nelder_mead_single(neg, start, scale, options.max_evals,
                                     options.diameter_tol);
    });

    std::size_t best = 0;
    for (std::size_t r = 1; r < runs.size(); ++r)
        if (runs[r].value < runs[best].value) best = r;
    bool any_converged = false;
    for (const SingleRunResult& r : runs) any_converged |= r.converged;
    return {-runs[best].value, runs[best].point, options.restarts, any_converged,
            runs[best].diameter};
}

namespace {

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

}  // namespace

OptimizationResult maximize_product_qfi(const EncodingAxis& axis,
                                        std::size_t n_probes,
                                        std::uint64_t seed, int restarts) {
    // QFI of phase estimation does not depend on theta; fix theta = 1.
    const CMat U = su2_unitary(1.0, axis);
    const CMat dU = su2_derivative(1.0, axis);
    auto objective = [&](const std::vector<double>& x) {
        const PureQubit probe(clamp01(x[1]), x[0]);
        const PureQubit control(clamp01(x[2]), x[3]);
        return qfi_symmetric(control, probe, U, dU, n_probes);
    };
    constexpr double two_pi = 2.0 * std::numbers::pi;
    NelderMeadOptions opts;
    opts.seed = seed;
    opts.restarts = restarts;
    return nelder_mead_maximize(objective, {0.0, 0.0, 0.0, 0.0},
                                {two_pi, 1.0, 1.0, two_pi}, opts);
}

OptimizationResult maximize_entangled_qfi(const EncodingAxis& axis,
                                          std::size_t n_probes,
                                          std::uint64_t seed, int restarts) {
    if (n_probes > 4)
        throw std::length_error("entangled-state search limited to 4 probe qubits");
    const CMat U = su2_unitary(1.0, axis);
    const CMat dU = su2_derivative(1.0, axis);
    const std::size_t amp_dim = std::size_t{1} << n_probes;
    const std::size_t dim = 2 * amp_dim + 2;  // re/im pairs + (p_c, theta_c)
    auto objective = [&](const std::vector<double>& x) {
        CVec amps(amp_dim);
        for (std::size_t i = 0; i < amp_dim; ++i)
            amps[i] = Cplx(x[2 * i], x[2 * i + 1]);
        const double len = std::sqrt(norm2(amps));
        if (len < 1e-8) return -1e9;  // degenerate parameterization
        for (Cplx& a : amps) a /= len;
        const PureQubit control(clamp01(x[dim - 2]), x[dim - 1]);
        return qfi_entangled_exact(control, amps, U, dU);
    };
    std::vector<double> lower(dim, -1.0), upper(dim, 1.0);
    lower[dim - 2] = 0.0; upper[dim - 2] = 1.0;
    lower[dim - 1] = 0.0; upper[dim - 1] = 2.0 * std::numbers::pi;
    NelderMeadOptions opts;
    opts.seed = seed;
    opts.restarts = restarts;
    opts.max_evals = 20000;  // higher-dimensional search
    return nelder_mead_maximize(objective, lower, upper, opts);
}

ThresholdResult find_n2_threshold(double q) {
    if (q <= 0.0 || q >= 1.0)
        throw std::domain_error("threshold defined for q strictly inside (0,1)");
    auto diff = [&](double n2) { return avg_flip_fi(q, n2) - avg_switch_fi(q); };
    const double eps = 1e-12;
    double lo = eps, hi = 1.0 - eps;
    double flo = diff(lo), fhi = diff(hi);
    if (flo * fhi > 0.0) return {false, 0.0, flo, fhi};
    for (int iter = 0; iter < 200 && hi - lo > 1e-9; ++iter) {
        const double mid = 0.5 * (lo + hi);
        const double fmid = diff(mid);
        if (flo * fmid <= 0.0) { hi = mid; fhi = fmid; }
        else                   { lo = mid; flo = fmid; }
    }
    return {true, 0.5 * (lo + hi), flo, fhi};
}

double extrapolate_n2_zero() {
    // Quadratic (three-point Lagrange) extrapolation of the root to q = 0.
    const double qs[3] = {0.01, 0.02, 0.04};
    double roots[3];
    for (int i = 0; i < 3; ++i) {
        const ThresholdResult t = find_n2_threshold(qs[i]);
        if (!t.has_root) throw std::runtime_error("threshold root missing near q = 0");
        roots[i] = t.root;
    }
    double value = 0.0;
    for (int i = 0; i < 3; ++i) {
        double l = 1.0;
        for (int j = 0; j < 3; ++j)
            if (j != i) l *= (0.0 - qs[j]) / (qs[i] - qs[j]);
        value += l * roots[i];
    }
    return value;
}

FitResult fit_n2_threshold(const std::vector<double>& q_grid, double n2_zero) {
    if (q_grid.size() < 20)
        throw std::invalid_argument("threshold fit needs at least 20 grid points");
    const std::size_t n = q_grid.size();
    std::vector<double> roots(n);
    parallel_for(n, [&](std::size_t i) {
        const ThresholdResult t = find_n2_threshold(q_grid[i]);
        roots[i] = t.has_root ? t.root : std::nan("");
    });
    for (double r : roots)
        if (!std::isfinite(r))
            throw std::runtime_error("threshold root missing on fit grid");
    return fit_threshold_model(q_grid, roots, n2_zero);
}

FitResult fit_threshold_model(const std::vector<double>& q_grid,
                              const std::vector<double>& roots, double n2_zero) {
    if (q_grid.size() != roots.size() || q_grid.size() < 3)
        throw std::invalid_argument("fit needs matching grids with >= 3 points");
    const std::size_t n = q_grid.size();

    auto model = [&](double q, double g, double h) {
        return n2_zero * std::pow(1.0 - std::pow(q, g), 1.0 / h);
    };
    auto sse = [&](const std::vector<double>& x) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double e = model(q_grid[i], x[0], x[1]) - roots[i];
            s += e * e;
        }
        return -s;  // maximized
    };
    NelderMeadOptions opts;
    opts.restarts = 16;
    const OptimizationResult r =
        nelder_mead_maximize(sse, {0.2, 0.5}, {4.0, 6.0}, opts);
    const double g = r.best_point[0], h = r.best_point[1];
    const double residual = -r.best_value;

    // Gauss-Newton covariance: sigma^2 (J^T J)^{-1} with numeric Jacobian.
    const double step = 1e-6;
    double jgg = 0.0, jgh = 0.0, jhh = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dg = (model(q_grid[i], g + step, h) -
                           model(q_grid[i], g - step, h)) / (2.0 * step);
        const double dh = (model(q_grid[i], g, h + step) -
                           model(q_grid[i], g, h - step)) / (2.0 * step);
        jgg += dg * dg; jgh += dg * dh; jhh += dh * dh;
    }
    const double det = jgg * jhh - jgh * jgh;
    const double sigma2 = residual / static_cast<double>(n - 2);
    double g_rel = 0.0, h_rel = 0.0;
    if (det > 1e-300) {
        g_rel = std::sqrt(sigma2 * jhh / det) / std::abs(g);
        h_rel = std::sqrt(sigma2 * jgg / det) / std::abs(h);
    }
    return {g, h, n2_zero, residual, g_rel, h_rel};
}

std::vector<double> default_threshold_grid() {
    std::vector<double> grid(50);
    for (std::size_t i = 0; i < grid.size(); ++i)
        grid[i] = 0.5 + (0.999 - 0.5) * static_cast<double>(i) / 49.0;
    return grid;
}

}  // namespace timeflip
