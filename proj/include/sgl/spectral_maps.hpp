#pragma once
#include "sgl/operator_handle.hpp"
#include "sgl/reports.hpp"

namespace sgl {

// e^{t sigma(A)} against sigma(e^{tA}); equality holds for matrices.
MultisetMatch spectral_mapping_check(const OperatorHandle& a, double t);

// {lambda^n e^{lambda t}} as a subset of sigma(T^{(n)}(t)) with
// T^{(n)}(t) = A^n e^{tA}; 1 <= n <= 4.
MultisetMatch derivative_spectral_mapping_check(const OperatorHandle& a,
                                                double t, std::size_t n);

// {1/(lambda - zeta)} against sigma(R(lambda;A)). The paper's extra {0}
// element for unbounded generators has no finite-dimensional counterpart;
// a note records the exclusion.
MultisetMatch resolvent_spectrum_check(const OperatorHandle& a, cplx lambda);

}  // namespace sgl
