#pragma once

#include <cstddef>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace porder {

/// Data-parallel loop over [0, n). Each iteration must be independent and
/// write only to its own slot so results are identical to the serial path.
template <class F>
void parallel_for(long n, F&& body) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
    for (long i = 0; i < n; ++i) body(i);
#else
    for (long i = 0; i < n; ++i) body(i);
#endif
}

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace porder
