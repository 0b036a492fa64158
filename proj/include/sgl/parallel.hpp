#pragma once
#include <cstddef>

namespace sgl {

// Resolved worker count: SEMIGROUP_LAB_THREADS caps it, 0 or unset means
// the OpenMP default. Always >= 1; returns 1 when built without OpenMP.
int worker_count();

namespace detail {
void parallel_for_impl(std::size_t n, void (*fn)(std::size_t, void*), void* ctx);
}

// Runs body(i) for i in [0, n). Iterations must write to disjoint state;
// any reduction over the results happens afterwards in index order.
template <typename F>
void parallel_for(std::size_t n, F&& body) {
  auto trampoline = [](std::size_t i, void* ctx) { (*static_cast<F*>(ctx))(i); };
  detail::parallel_for_impl(n, trampoline, &body);
}

}  // namespace sgl
