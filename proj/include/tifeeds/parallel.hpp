#pragma once

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace tifeeds::parallel {

inline int hardware_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

// requested <= 0 means "use everything the runtime offers".
inline int resolve(int requested) {
    if (requested <= 0) return hardware_threads();
    return requested;
}

// Static-schedule parallel for over [0, n). Bodies must be independent per
// index; callers that merge results do so in index order afterwards, which
// keeps every kernel in this library bit-deterministic for any thread count.
template <typename F>
void for_index(std::int64_t n, int threads, F&& body) {
    threads = resolve(threads);
#ifdef _OPENMP
    if (threads > 1) {
#pragma omp parallel for schedule(static) num_threads(threads)
        for (std::int64_t i = 0; i < n; ++i) body(i);
        return;
    }
#endif
    for (std::int64_t i = 0; i < n; ++i) body(i);
}

} // namespace tifeeds::parallel
