// OpenMP-backed data-parallel loops with a serial reference path.
//
// Reductions evaluate every index into a per-index buffer and then sum it
// serially, so the parallel path is bit-identical to the serial one at any
// thread count -- a requirement for byte-reproducible output files.
#pragma once

#include <cstddef>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace timeflip {

/// Thread-count override used by all parallel loops; 0 means "library default".
int parallel_threads();
void set_parallel_threads(int n);

namespace detail {
inline int& thread_override() {
    static int n = 0;
    return n;
}
}  // namespace detail

inline int parallel_threads() { return detail::thread_override(); }
inline void set_parallel_threads(int n) { detail::thread_override() = n < 0 ? 0 : n; }

template <class F>
void serial_for(std::size_t n, F&& f) {
    for (std::size_t i = 0; i < n; ++i) f(i);
}

template <class F>
void parallel_for(std::size_t n, F&& f) {
#ifdef _OPENMP
    const int requested = parallel_threads();
#pragma omp parallel num_threads(requested > 0 ? requested : omp_get_max_threads())
    {
#pragma omp for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            f(static_cast<std::size_t>(i));
    }
#else
    serial_for(n, f);
#endif
}

/// Serial reference reduction: sum_{i<n} f(i), left to right.
template <class F>
double serial_sum(std::size_t n, F&& f) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += f(i);
    return s;
}

/// Parallel reduction with deterministic (serial-order) accumulation.
template <class F>
double parallel_sum(std::size_t n, F&& f) {
    std::vector<double> buf(n);
    parallel_for(n, [&](std::size_t i) { buf[i] = f(i); });
    double s = 0.0;
    for (double x : buf) s += x;
    return s;
}

}  // namespace timeflip
