#pragma once

#ifdef _OPENMP
#include <omp.h>
#endif

namespace kramers {

/// Execution mode for the data-parallel kernels. Serial is the reference path
/// kept for testing; both paths run identical arithmetic per work item, so
/// results agree bitwise.
enum class Exec { Serial, OpenMP };

inline int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace kramers
