#include "timeflip/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

#include "timeflip/encoding.hpp"
#include "timeflip/noisy.hpp"
#include "timeflip/optimize.hpp"
#include "timeflip/phase.hpp"
#include "timeflip/qfi.hpp"
#include "timeflip/su2.hpp"

namespace timeflip {

namespace {

constexpr double pi = std::numbers::pi;

struct Recorder {
    CriterionResult result;

    explicit Recorder(int id, std::string name) {
        result.id = id;
        result.name = std::move(name);
        result.passed = true;
    }

    void check(bool ok, const std::string& what) {
        std::ostringstream line;
        line << (ok ? "  [ok]   " : "  [FAIL] ") << what;
        result.details.push_back(line.str());
        result.passed = result.passed && ok;
    }

    void note(const std::string& what) {
        result.details.push_back("  [note] " + what);
    }
};

std::string num(double x) {
    std::ostringstream os;
    os.precision(10);
    os << x;
    return os.str();
}

EncodingAxis random_axis(std::mt19937_64& rng) {
    std::normal_distribution<double> g(0.0, 1.0);
    double x, y, z, len;
    do {
        x = g(rng); y = g(rng); z = g(rng);
        len = std::sqrt(x * x + y * y + z * z);
    } while (len < 1e-3);
    return EncodingAxis::normalized(x, y, z);
}

CVec random_state(std::mt19937_64& rng, std::size_t dim) {
    std::normal_distribution<double> g(0.0, 1.0);
    CVec v(dim);
    for (Cplx& a : v) a = Cplx(g(rng), g(rng));
    const double len = std::sqrt(norm2(v));
    for (Cplx& a : v) a /= len;
    return v;
}

// --- criterion bodies -----------------------------------------------------

void criterion1(Recorder& rec) {
    // Optimal phase QFI and the control sigma_x measurement both give N^2.
    const EncodingAxis y = EncodingAxis::y_axis();
    const double theta = 0.37;
    for (std::size_t n = 1; n <= 10; ++n) {
        const double nn = static_cast<double>(n) * static_cast<double>(n);
        const double qmax = qfi_phase_max(y, n);
        const auto [pp, pm] = scheme_probabilities(n, theta);
        const double dp = -0.5 * static_cast<double>(n) *
                          std::sin(static_cast<double>(n) * theta);
        const double fi = classical_fi({{pp, dp}, {pm, -dp}});
        rec.check(std::abs(qmax - nn) <= 1e-9,
                  "N=" + std::to_string(n) + " optimal QFI = " + num(qmax));
        rec.check(std::abs(fi - nn) <= 1e-9,
                  "N=" + std::to_string(n) + " measurement FI = " + num(fi));
    }
}

void criterion2(Recorder& rec, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int a = 0; a < 20; ++a) {
        const EncodingAxis axis = random_axis(rng);
        for (std::size_t n : {1u, 3u, 5u}) {
            const double target = qfi_phase_max(axis, n);
            const OptimizationResult r = maximize_product_qfi(axis, n, seed + a);
            const double err = std::abs(r.best_value - target);
            rec.check(err <= 1e-6, "axis " + std::to_string(a) + " N=" +
                                       std::to_string(n) + " |opt-closed| = " + num(err));
        }
    }
}

void criterion3(Recorder& rec, std::uint64_t seed) {
    const OptimizationResult all_y = maximize_entangled_qfi(EncodingAxis::y_axis(), 3, seed);
    rec.check(std::abs(all_y.best_value - 9.0) <= 1e-3,
              "all-state optimum at n2=1: " + num(all_y.best_value));
    const EncodingAxis z = EncodingAxis::z_axis();
    const OptimizationResult prod_z = maximize_product_qfi(z, 3, seed);
    rec.check(std::abs(prod_z.best_value - 3.0) <= 1e-3,
              "product optimum at n2=0: " + num(prod_z.best_value));
    const OptimizationResult all_z = maximize_entangled_qfi(z, 3, seed);
    rec.check(std::abs(all_z.best_value - 9.0) <= 1e-3,
              "all-state optimum at n2=0: " + num(all_z.best_value));
    rec.note("gap at n2=0: " + num(all_z.best_value - prod_z.best_value) +
             " (expected 6)");
}

void criterion4(Recorder& rec) {
    const PureQubit probe(0.5, pi);
    for (std::size_t n : {1u, 2u, 3u}) {
        const double q = axis_qfi(pi, 1.0, pi / 2.0, probe, 0.5, n, AxisParam::phi);
        const double target = 4.0 * static_cast<double>(n) * static_cast<double>(n);
        rec.check(std::abs(q - target) <= 1e-8,
                  "N=" + std::to_string(n) + " axis QFI = " + num(q));
    }
}

double born_plus_probability(double q, double theta) {
    // p(+|theta) for N = 1, p_c = 1/2, theta_c = 0, from the dense encoded
    // density and an explicit |+><+| (x) I projector -- independent of the
    // closed-form overlap expression.
    const NoisyChannel ch = kraus_set(q, theta, EncodingAxis::y_axis());
    const EncodedDensity enc =
        flip_channel(ch.kraus, PureQubit(0.5, 0.0), {BlochVector(0.0, 1.0, 0.0)});
    const CMat rho = enc.dense();
    Cplx p = 0.0;
    for (std::size_t i = 0; i < 2; ++i)
        p += 0.5 * (rho(i, i) + rho(2 + i, 2 + i) + rho(i, 2 + i) + rho(2 + i, i));
    return p.real();
}

void criterion5(Recorder& rec) {
    double worst = 1e300;
    for (int i = 0; i < 200; ++i)
        for (int j = 0; j < 200; ++j) {
            const double q = (i + 0.5) / 200.0;
            const double theta = 2.0 * pi * (j + 0.5) / 200.0;
            worst = std::min(worst, flip_fi_single(q, theta, 1.0) - switched_fi(q, theta));
        }
    rec.check(worst >= -1e-10, "min(flip - switch) on 200x200 grid = " + num(worst));

    const double q = 0.95, theta = pi / 4.0, h = 1e-5;
    const double p0 = born_plus_probability(q, theta);
    const double dp = (born_plus_probability(q, theta + h) -
                       born_plus_probability(q, theta - h)) / (2.0 * h);
    const double fi_oracle = dp * dp / (p0 * (1.0 - p0));
    const double fi = flip_fi_single(q, theta, 1.0);
    rec.check(std::abs(fi - fi_oracle) <= 1e-6,
              "closed form " + num(fi) + " vs measurement oracle " + num(fi_oracle));
}

struct ScanMax {
    std::size_t argmax_fi = 0, argmax_per_qubit = 0;
    double max_fi = -1.0, max_per_qubit = -1.0;
};

ScanMax scan_multi(double q, bool averaged) {
    const EncodingAxis y = EncodingAxis::y_axis();
    const BlochVector s(0.0, 1.0, 0.0);
    ScanMax out;
    for (std::size_t n = 1; n <= 512; ++n) {
        const double fi =
            averaged ? theta_avg([&](double th) {
                  return flip_fi_multi(q, th, y, s, n, 0.5, 0.0);
              })
                     : flip_fi_multi(q, pi / 4.0, y, s, n, 0.5, 0.0);
        if (fi > out.max_fi) { out.max_fi = fi; out.argmax_fi = n; }
        const double per = fi / static_cast<double>(n);
        if (per > out.max_per_qubit) { out.max_per_qubit = per; out.argmax_per_qubit = n; }
    }
    return out;
}

void check_scan(Recorder& rec, const ScanMax& s, double want_fi, std::size_t want_n,
                double want_tilde_fi, std::size_t want_tilde_n, const std::string& tag) {
    const double tilde_fi = s.max_per_qubit * static_cast<double>(s.argmax_per_qubit);
    rec.check(std::abs(s.max_fi - want_fi) / want_fi <= 0.005,
              tag + " max FI = " + num(s.max_fi) + " (expected " + num(want_fi) + ")");
    rec.check(s.argmax_fi == want_n,
              tag + " argmax N = " + std::to_string(s.argmax_fi) + " (expected " +
                  std::to_string(want_n) + ")");
    rec.check(std::abs(tilde_fi - want_tilde_fi) / want_tilde_fi <= 0.005,
              tag + " per-qubit-optimal FI = " + num(tilde_fi) + " (expected " +
                  num(want_tilde_fi) + ")");
    rec.check(s.argmax_per_qubit == want_tilde_n,
              tag + " per-qubit argmax N = " + std::to_string(s.argmax_per_qubit) +
                  " (expected " + std::to_string(want_tilde_n) + ")");
}

void criterion6(Recorder& rec) {
    check_scan(rec, scan_multi(0.99, false), 3074.72, 170, 1894.5, 69, "q=0.99");
    check_scan(rec, scan_multi(0.95, false), 116.77, 34, 49.68, 9, "q=0.95");
}

void criterion7(Recorder& rec) {
    const EncodingAxis y = EncodingAxis::y_axis();
    const BlochVector s(0.0, 1.0, 0.0);
    struct Case { double q, effective, baseline; std::size_t reps; };
    for (const Case& c : {Case{0.95, 5514.48, 902.5, 111}, Case{0.99, 26523.0, 980.1, 14}}) {
        const RepetitionPlan plan = repetition_plan(c.q, pi / 4.0, y, s, 1000);
        rec.check(std::abs(plan.effective_fi - c.effective) / c.effective <= 0.005,
                  "q=" + num(c.q) + " effective FI = " + num(plan.effective_fi) +
                      " (expected " + num(c.effective) + ")");
        rec.check(plan.repetitions == c.reps,
                  "q=" + num(c.q) + " repetitions = " + std::to_string(plan.repetitions) +
                      " (expected " + std::to_string(c.reps) + ")");
        rec.check(std::abs(plan.baseline_fi - c.baseline) / c.baseline <= 0.005,
                  "q=" + num(c.q) + " baseline = " + num(plan.baseline_fi));
    }
}

void criterion8(Recorder& rec) {
    struct Row { double q, tilde_per, max_avg; std::size_t tilde_n, n_max; };
    for (const Row& r : {Row{0.95, 2.17, 36.4, 10, 26}, Row{0.99, 11.16, 956.4, 50, 133}}) {
        const ScanMax s = scan_multi(r.q, true);
        rec.check(std::abs(s.max_per_qubit - r.tilde_per) / r.tilde_per <= 0.01,
                  "q=" + num(r.q) + " max avg FI/N = " + num(s.max_per_qubit) +
                      " (expected " + num(r.tilde_per) + ")");
        rec.check(std::llabs(static_cast<long long>(s.argmax_per_qubit) -
                             static_cast<long long>(r.tilde_n)) <= 1,
                  "q=" + num(r.q) + " avg per-qubit argmax = " +
                      std::to_string(s.argmax_per_qubit) + " (expected " +
                      std::to_string(r.tilde_n) + " +-1)");
        rec.check(std::abs(s.max_fi - r.max_avg) / r.max_avg <= 0.01,
                  "q=" + num(r.q) + " max avg FI = " + num(s.max_fi) + " (expected " +
                      num(r.max_avg) + ")");
        rec.check(std::llabs(static_cast<long long>(s.argmax_fi) -
                             static_cast<long long>(r.n_max)) <= 1,
                  "q=" + num(r.q) + " avg argmax = " + std::to_string(s.argmax_fi) +
                      " (expected " + std::to_string(r.n_max) + " +-1)");
    }
}

void criterion9(Recorder& rec) {
    const FitResult fit = fit_n2_threshold(default_threshold_grid(), 0.945742);
    rec.check(std::abs(fit.g - 1.14147) / 1.14147 <= 0.02,
              "fitted g = " + num(fit.g) + " (expected 1.14147 +-2%)");
    rec.check(std::abs(fit.h - 2.38455) / 2.38455 <= 0.02,
              "fitted h = " + num(fit.h) + " (expected 2.38455 +-2%)");
    rec.note("residual = " + num(fit.residual) + ", rel. uncertainty g " +
             num(fit.g_rel_uncertainty) + ", h " + num(fit.h_rel_uncertainty));
    rec.note("extrapolated q->0 threshold = " + num(extrapolate_n2_zero()));
}

void criterion10(Recorder& rec, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u01(0.0, 1.0);

    // Symmetric dominance over asymmetric product probes.
    {
        double worst = 1e300;
        for (int t = 0; t < 500; ++t) {
            const EncodingAxis axis = random_axis(rng);
            const double theta = 2.0 * pi * u01(rng);
            const CMat U = su2_unitary(theta, axis);
            const CMat dU = su2_derivative(theta, axis);
            const PureQubit control(u01(rng), 2.0 * pi * u01(rng));
            std::vector<PureQubit> probes;
            for (int k = 0; k < 3; ++k)
                probes.emplace_back(u01(rng), 2.0 * pi * u01(rng));
            const double prod = qfi_product(control, product_overlaps(probes, U, dU));
            double best_sym = -1e300;
            for (const PureQubit& p : probes)
                best_sym = std::max(best_sym, qfi_symmetric(control, p, U, dU, 3));
            worst = std::min(worst, best_sym - prod);
        }
        rec.check(worst >= -1e-10,
                  "min(best symmetric - product) over 500 probes = " + num(worst));
    }

    // A + B <= 1.
    {
        double worst = -1e300;
        for (int t = 0; t < 100000; ++t) {
            const EncodingAxis axis = random_axis(rng);
            const PhaseCoefficients ab =
                phase_AB(axis, PureQubit(u01(rng), 2.0 * pi * u01(rng)), u01(rng));
            worst = std::max(worst, ab.A + ab.B);
        }
        rec.check(worst <= 1.0 + 1e-10, "max(A+B) over 1e5 samples = " + num(worst));
    }

    // QFI <= 4 <dPhi|dPhi> for random entangled states.
    {
        double worst = 1e300;
        for (int t = 0; t < 1000; ++t) {
            const EncodingAxis axis = random_axis(rng);
            const double theta = 2.0 * pi * u01(rng);
            const CMat U = su2_unitary(theta, axis);
            const CMat dU = su2_derivative(theta, axis);
            const PureQubit control(u01(rng), 2.0 * pi * u01(rng));
            const CVec amps = random_state(rng, 8);
            worst = std::min(worst, qfi_upper_bound(control, amps, U, dU) -
                                        qfi_entangled_exact(control, amps, U, dU));
        }
        rec.check(worst >= -1e-12, "min(bound - QFI) over 1000 states = " + num(worst));
    }

    // Closed-form theta averages against quadrature.
    {
        double worst_flip = 0.0, worst_switch = 0.0, pointwise_switch_gap = 0.0;
        for (double q : {0.1, 0.3, 0.5, 0.7, 0.9, 0.99})
            for (double n2 : {0.3, 0.7, 0.9, 1.0}) {
                const double quad =
                    theta_avg([&](double th) { return flip_fi_single(q, th, n2); });
                worst_flip = std::max(worst_flip, std::abs(quad - avg_flip_fi(q, n2)));
            }
        for (double q : {0.1, 0.3, 0.5, 0.7, 0.9, 0.99}) {
            const double quad =
                theta_avg([&](double th) { return switched_fi_doubled(q, th); });
            worst_switch = std::max(worst_switch, std::abs(quad - avg_switch_fi(q)));
            const double quad_pointwise =
                theta_avg([&](double th) { return switched_fi(q, th); });
            pointwise_switch_gap = std::max(
                pointwise_switch_gap, std::abs(quad_pointwise - avg_switch_fi(q)));
        }
        rec.check(worst_flip < 1e-8, "flip average closed form vs quadrature, max |diff| = " +
                                         num(worst_flip));
        rec.check(worst_switch < 1e-8,
                  "switch average closed form vs angle-doubled quadrature, max |diff| = " +
                      num(worst_switch));
        rec.note("switch closed form vs pointwise-integrand quadrature differs by up to " +
                 num(pointwise_switch_gap) +
                 " (the closed form corresponds to the angle-doubled integrand)");
    }

    // Factored encoded density against the exhaustive Kraus-string sum.
    {
        double worst = 0.0;
        for (int t = 0; t < 20; ++t) {
            const std::size_t n = 1 + (t % 2);
            const EncodingAxis axis = random_axis(rng);
            const NoisyChannel ch = kraus_set(u01(rng), 2.0 * pi * u01(rng), axis);
            const PureQubit control(u01(rng), 2.0 * pi * u01(rng));
            std::vector<BlochVector> probes;
            for (std::size_t k = 0; k < n; ++k) {
                const double len = u01(rng);
                const EncodingAxis dir = random_axis(rng);
                probes.emplace_back(len * dir.n1, len * dir.n2, len * dir.n3);
            }
            const CMat factored = flip_channel(ch.kraus, control, probes).dense();
            const CMat brute = flip_channel_brute_force(ch.kraus, control, probes);
            worst = std::max(worst, max_abs(factored - brute));
        }
        rec.check(worst < 1e-10,
                  "factored vs brute-force encoded density, max entry diff = " + num(worst));
    }

    // Analytic derivatives against central finite differences.
    {
        const double h = 1e-6;
        double worst = 0.0;
        for (int t = 0; t < 1000; ++t) {
            const EncodingAxis axis = random_axis(rng);
            const double theta = 2.0 * pi * u01(rng);
            const CMat fd = Cplx(1.0 / (2.0 * h)) * (su2_unitary(theta + h, axis) -
                                                     su2_unitary(theta - h, axis));
            worst = std::max(worst, max_abs(su2_derivative(theta, axis) - fd));
        }
        rec.check(worst < 1e-8, "su2 derivative vs finite difference, max diff = " + num(worst));

        double worst_enc = 0.0, worst_pol = 0.0;
        for (int t = 0; t < 200; ++t) {
            const EncodingAxis axis = random_axis(rng);
            const double theta = 2.0 * pi * u01(rng);
            const PureQubit control(u01(rng), 2.0 * pi * u01(rng));
            const CVec amps = random_state(rng, 4);
            const CVec dphi = encode_pure_derivative(control, amps, su2_unitary(theta, axis),
                                                     su2_derivative(theta, axis));
            const CVec hi = encode_pure(control, amps, su2_unitary(theta + h, axis));
            const CVec lo = encode_pure(control, amps, su2_unitary(theta - h, axis));
            for (std::size_t i = 0; i < dphi.size(); ++i)
                worst_enc = std::max(worst_enc,
                                     std::abs(dphi[i] - (hi[i] - lo[i]) / (2.0 * h)));

            const double q = u01(rng);
            const double len = u01(rng);
            const EncodingAxis dir = random_axis(rng);
            const BlochVector s(len * dir.n1, len * dir.n2, len * dir.n3);
            const PolarOverlap o = noisy_overlap_polar(s, kraus_set(q, theta, axis));
            const PolarOverlap op = noisy_overlap_polar(s, kraus_set(q, theta + h, axis));
            const PolarOverlap om = noisy_overlap_polar(s, kraus_set(q, theta - h, axis));
            worst_pol = std::max(worst_pol, std::abs(o.dr - (op.r - om.r) / (2.0 * h)));
        }
        rec.check(worst_enc < 1e-8,
                  "encoded-state derivative vs finite difference, max diff = " + num(worst_enc));
        rec.check(worst_pol < 1e-8,
                  "overlap modulus derivative vs finite difference, max diff = " + num(worst_pol));
    }
}

}  // namespace

CriterionResult run_criterion(int id, std::uint64_t seed) {
    static const char* names[kCriterionCount] = {
        "Heisenberg optimum (optimal QFI and control measurement give N^2)",
        "Closed-form product optimum found by the optimizer at random axes",
        "N=3 state-space optima (all-state 9; product 3 / all-state 9 at n2=0)",
        "Axis estimation QFI 4N^2 at the optimal point",
        "Noisy single qubit: flip >= switch grid; closed form vs measurement oracle",
        "Multiqubit noisy maxima at theta = pi/4",
        "Repetition plans for a 1000-qubit budget",
        "Theta-averaged multiqubit maxima",
        "n2-threshold curve fit exponents",
        "Property suites (dominance, bounds, quadrature, brute force, derivatives)",
    };
    if (id < 1 || id > kCriterionCount)
        throw std::out_of_range("criterion id must be 1..10");
    Recorder rec(id, names[id - 1]);
    const auto t0 = std::chrono::steady_clock::now();
    switch (id) {
        case 1: criterion1(rec); break;
        case 2: criterion2(rec, seed); break;
        case 3: criterion3(rec, seed); break;
        case 4: criterion4(rec); break;
        case 5: criterion5(rec); break;
        case 6: criterion6(rec); break;
        case 7: criterion7(rec); break;
        case 8: criterion8(rec); break;
        case 9: criterion9(rec); break;
        case 10: criterion10(rec, seed); break;
    }
    rec.result.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rec.result;
}

std::vector<CriterionResult> run_all_criteria(std::uint64_t seed) {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, seed));
    return out;
}

}  // namespace timeflip
