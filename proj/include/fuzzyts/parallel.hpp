#pragma once

#ifdef FUZZYTS_OPENMP
#include <omp.h>
#define FUZZYTS_OMP_PRAGMA(content) _Pragma(content)
#else
#define FUZZYTS_OMP_PRAGMA(content)
#endif

namespace fuzzyts {

inline int max_threads() {
#ifdef FUZZYTS_OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_num_threads([[maybe_unused]] int n) {
#ifdef FUZZYTS_OPENMP
  omp_set_num_threads(n);
#endif
}

}  // namespace fuzzyts
