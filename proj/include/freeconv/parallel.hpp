#pragma once

#include <cstdint>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace freeconv {

inline int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

inline void set_threads(int n) {
#ifdef _OPENMP
  omp_set_num_threads(n);
#else
  (void)n;
#endif
}

// Deterministic parallel loop: every index is processed exactly once and the
// body must only write to index-owned state.
template <class F>
void parallel_for(std::int64_t begin, std::int64_t end, F&& f) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
  for (std::int64_t i = begin; i < end; ++i) f(i);
#else
  for (std::int64_t i = begin; i < end; ++i) f(i);
#endif
}

template <class F>
void serial_for(std::int64_t begin, std::int64_t end, F&& f) {
  for (std::int64_t i = begin; i < end; ++i) f(i);
}

}  // namespace freeconv
