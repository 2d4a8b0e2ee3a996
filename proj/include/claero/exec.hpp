#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace claero {

/// Execution mode for data-parallel kernels. `serial` is the reference
/// implementation used by tests; `openmp` must produce bit-identical results
/// for any thread count.
enum class Exec { serial, openmp };

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

template <class F>
inline void par_for(Exec exec, std::ptrdiff_t n, F&& body) {
    if (exec == Exec::openmp) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
    } else {
        for (std::ptrdiff_t i = 0; i < n; ++i) body(i);
    }
}

/// Deterministic blocked sum: partials are computed per fixed-size block and
/// combined in block order, so the result does not depend on the thread count.
template <class F>
inline double blocked_sum(Exec exec, std::ptrdiff_t n, F&& term,
                          std::ptrdiff_t block = 4096) {
    const std::ptrdiff_t nblocks = (n + block - 1) / block;
    std::vector<double> partial(static_cast<std::size_t>(nblocks), 0.0);
    par_for(exec, nblocks, [&](std::ptrdiff_t b) {
        const std::ptrdiff_t lo = b * block;
        const std::ptrdiff_t hi = lo + block < n ? lo + block : n;
        double s = 0.0;
        for (std::ptrdiff_t i = lo; i < hi; ++i) s += term(i);
        partial[static_cast<std::size_t>(b)] = s;
    });
    double s = 0.0;
    for (double p : partial) s += p;
    return s;
}

/// Max-reductions are order-independent, so a plain parallel pass is enough;
/// partials are still combined in block order for uniformity.
template <class F>
inline double blocked_max(Exec exec, std::ptrdiff_t n, F&& term,
                          std::ptrdiff_t block = 4096) {
    const std::ptrdiff_t nblocks = (n + block - 1) / block;
    std::vector<double> partial(static_cast<std::size_t>(nblocks), 0.0);
    par_for(exec, nblocks, [&](std::ptrdiff_t b) {
        const std::ptrdiff_t lo = b * block;
        const std::ptrdiff_t hi = lo + block < n ? lo + block : n;
        double m = 0.0;
        for (std::ptrdiff_t i = lo; i < hi; ++i) {
            const double v = term(i);
            if (v > m) m = v;
        }
        partial[static_cast<std::size_t>(b)] = m;
    });
    double m = 0.0;
    for (double p : partial) m = p > m ? p : m;
    return m;
}

}  // namespace claero
