#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kcut {

/// Execution policy for the data-parallel kernels (contraction repetitions,
/// brute-force scans, grid suites, triple search). Every kernel has a plain
/// serial loop as the reference implementation; the parallel path must produce
/// the identical result, which the test suite checks.
enum class Exec { serial, parallel };

inline int& max_threads_ref() {
    static int t = 0;  // 0 = library default (all cores)
    return t;
}

inline void set_max_threads(int t) { max_threads_ref() = t; }

inline int max_threads() {
#ifdef _OPENMP
    int t = max_threads_ref();
    return t > 0 ? t : omp_get_max_threads();
#else
    return 1;
#endif
}

/// Chunked parallel-for. fn(i) must be independent across i; result merging is
/// the caller's job (kernels merge with associative, order-independent unions).
template <typename F>
void parallel_for(std::size_t count, Exec exec, F&& fn) {
    if (exec == Exec::serial || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 64) num_threads(max_threads())
    for (long long i = 0; i < static_cast<long long>(count); ++i) fn(static_cast<std::size_t>(i));
#else
    for (std::size_t i = 0; i < count; ++i) fn(i);
#endif
}

}  // namespace kcut
