#pragma once
#include "sgl/operator_handle.hpp"

namespace sgl {

struct SpectrumReport {
  std::vector<cplx> eigenvalues;  // sorted by (Re, Im), with multiplicity
  double spectral_radius = 0.0;
  double spectral_abscissa = 0.0;
};

// Dense eigensolve (matrix_free operators are densified first); dim <= 2048.
SpectrumReport spectrum(const OperatorHandle& a);

struct NormResult {
  double value = 0.0;
  bool estimated = false;  // true when from power iteration on A*A
  int iterations = 0;
  operator double() const { return value; }
};

// Spectral norm: exact SVD for dense operators, power iteration with
// relative tolerance 1e-8 for matrix_free operators that carry an adjoint.
NormResult operator_norm(const OperatorHandle& a);

// A certified pair (M, omega) with the sample grid that produced it:
// ||T(t)|| <= M e^{omega t} on the grid.
struct GrowthEnvelope {
  double M = 1.0;
  double omega = 0.0;
  std::vector<std::pair<double, double>> sample_grid;  // (t, ||T(t)||)
};

// omega anchored at the spectral abscissa plus a 1e-6 margin (clamped at 0),
// M from the grid maximum of ||e^{tA}|| e^{-omega t}, clamped to >= 1.
GrowthEnvelope estimate_growth_envelope(const OperatorHandle& a, double t_max,
                                        std::size_t grid_size);

}  // namespace sgl
