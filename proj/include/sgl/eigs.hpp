#pragma once
#include <vector>

#include "sgl/matrix.hpp"

namespace sgl {

// Dense spectral kernels (Schur/SVD based). Everything here treats the
// input as an opaque square complex matrix; closed-form oracles for the
// generated operators live with the tests.

// All eigenvalues with multiplicity, sorted by (Re, Im).
std::vector<cplx> eigenvalues(const Matrix& m);

std::vector<double> singular_values(const Matrix& m);  // descending
double spectral_norm(const Matrix& m);                 // sigma_max

struct EigenDecomposition {
  std::vector<cplx> values;
  Matrix vectors;          // columns
  double vector_condition; // sigma_max/sigma_min of the eigenvector matrix
};

EigenDecomposition eigen_decomposition(const Matrix& m);

// Numerical rank at a relative singular-value cut.
std::size_t numerical_rank(const Matrix& m, double rel_tol);

}  // namespace sgl
