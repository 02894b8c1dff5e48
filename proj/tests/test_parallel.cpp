#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <cmath>
#include <vector>

#include "timeflip/noisy.hpp"
#include "timeflip/optimize.hpp"
#include "timeflip/parallel.hpp"

using namespace timeflip;

namespace {

/// Restores the global thread override when a test scope ends.
struct ThreadGuard {
    int saved = parallel_threads();
    ~ThreadGuard() { set_parallel_threads(saved); }
};

}  // namespace

TEST_CASE("parallel_for visits every index exactly once") {
    ThreadGuard guard;
    for (int threads : {1, 2, 3, 8}) {
        set_parallel_threads(threads);
        const std::size_t n = 10007;
        std::vector<std::atomic<int>> hits(n);
        parallel_for(n, [&](std::size_t i) { hits[i].fetch_add(1); });
        for (std::size_t i = 0; i < n; ++i) CHECK(hits[i].load() == 1);
    }
}

TEST_CASE("parallel reduction is bit-identical to the serial one") {
    ThreadGuard guard;
    auto term = [](std::size_t i) {
        const double x = static_cast<double>(i) * 1e-3;
        return std::sin(x) / (1.0 + x) + std::cos(3.0 * x) * 1e-7;
    };
    const double reference = serial_sum(100003, term);
    for (int threads : {1, 2, 4, 16}) {
        set_parallel_threads(threads);
        CHECK(parallel_sum(100003, term) == reference);  // exact equality
    }
}

TEST_CASE("theta averaging is bit-identical across thread counts") {
    ThreadGuard guard;
    auto fn = [](double theta) { return flip_fi_single(0.87, theta, 0.73); };
    const double reference = theta_avg_serial(fn);
    for (int threads : {1, 2, 5, 12}) {
        set_parallel_threads(threads);
        CHECK(theta_avg(fn) == reference);  // exact equality
    }
}

TEST_CASE("multi-start search is deterministic across thread counts") {
    ThreadGuard guard;
    auto f = [](const std::vector<double>& x) {
        return std::sin(3.0 * x[0]) * std::cos(2.0 * x[1]) -
               0.1 * (x[0] * x[0] + x[1] * x[1]);
    };
    set_parallel_threads(1);
    const OptimizationResult ref = nelder_mead_maximize(f, {-4.0, -4.0}, {4.0, 4.0});
    for (int threads : {2, 4, 9}) {
        set_parallel_threads(threads);
        const OptimizationResult r = nelder_mead_maximize(f, {-4.0, -4.0}, {4.0, 4.0});
        CHECK(r.best_value == ref.best_value);  // exact equality
        REQUIRE(r.best_point.size() == ref.best_point.size());
        for (std::size_t i = 0; i < r.best_point.size(); ++i)
            CHECK(r.best_point[i] == ref.best_point[i]);
    }
}

TEST_CASE("thread override round trip") {
    ThreadGuard guard;
    set_parallel_threads(7);
    CHECK(parallel_threads() == 7);
    set_parallel_threads(0);
    CHECK(parallel_threads() == 0);
    set_parallel_threads(-3);  // negative collapses to the library default
    CHECK(parallel_threads() == 0);
}
