#include "sgl/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sgl {

int worker_count() {
#ifdef _OPENMP
  static const int resolved = [] {
    int n = omp_get_max_threads();
    if (const char* env = std::getenv("SEMIGROUP_LAB_THREADS")) {
      const int cap = std::atoi(env);
      if (cap > 0 && cap < n) n = cap;
    }
    return n > 0 ? n : 1;
  }();
  return resolved;
#else
  return 1;
#endif
}

namespace detail {

void parallel_for_impl(std::size_t n, void (*fn)(std::size_t, void*), void* ctx) {
#ifdef _OPENMP
  const int workers = worker_count();
  if (workers > 1 && n > 1) {
#pragma omp parallel for schedule(static) num_threads(workers)
    for (long long i = 0; i < static_cast<long long>(n); ++i)
      fn(static_cast<std::size_t>(i), ctx);
    return;
  }
#endif
  for (std::size_t i = 0; i < n; ++i) fn(i, ctx);
}

}  // namespace detail
}  // namespace sgl
