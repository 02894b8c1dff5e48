// Benchmark comparing the OpenMP-parallel kernels against the serial
// reference implementation on the two dominant workloads: theta-averaged
// multiqubit scans (quadrature) and the averaged-difference heatmap sweep.
#include <chrono>
#include <cstdio>
#include <functional>
#include <numbers>
#include <vector>

#include "timeflip/noisy.hpp"
#include "timeflip/optimize.hpp"
#include "timeflip/parallel.hpp"

namespace {

using namespace timeflip;

double time_seconds(const std::function<double()>& work, double* checksum) {
    const auto t0 = std::chrono::steady_clock::now();
    *checksum = work();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double averaged_scan(bool parallel) {
    const EncodingAxis y = EncodingAxis::y_axis();
    const BlochVector s(0.0, 1.0, 0.0);
    double acc = 0.0;
    for (std::size_t n = 1; n <= 64; ++n) {
        auto integrand = [&](double th) {
            return flip_fi_multi(0.97, th, y, s, n, 0.5, 0.0);
        };
        acc += parallel ? theta_avg(integrand, 4096) : theta_avg_serial(integrand, 4096);
    }
    return acc;
}

double heatmap_sweep(bool parallel) {
    constexpr std::size_t grid = 400;
    auto cell = [](std::size_t k) {
        const double q = (static_cast<double>(k / grid) + 0.5) / grid;
        const double n2 = static_cast<double>(k % grid) / (grid - 1);
        return avg_flip_fi(q, n2) - avg_switch_fi(q) +
               flip_fi_single(q, 2.0 * std::numbers::pi * n2 + 0.1, n2);
    };
    return parallel ? parallel_sum(grid * grid, cell) : serial_sum(grid * grid, cell);
}

}  // namespace

int main() {
    struct Case {
        const char* name;
        double (*work)(bool);
    };
    const std::vector<Case> cases = {{"theta-averaged multiqubit scan", averaged_scan},
                                     {"averaged-difference heatmap sweep", heatmap_sweep}};
    for (const Case& c : cases) {
        double serial_sum_value = 0.0, parallel_sum_value = 0.0;
        const double ts = time_seconds([&] { return c.work(false); }, &serial_sum_value);
        const double tp = time_seconds([&] { return c.work(true); }, &parallel_sum_value);
        std::printf("%s\n  serial   %8.3fs (checksum %.12g)\n"
                    "  parallel %8.3fs (checksum %.12g)\n  speedup  %8.2fx%s\n",
                    c.name, ts, serial_sum_value, tp, parallel_sum_value, ts / tp,
                    serial_sum_value == parallel_sum_value ? "  [bit-identical]"
                                                           : "  [MISMATCH]");
    }
    return 0;
}
