#pragma once
#include "sgl/matrix.hpp"

namespace sgl {

// LU with partial pivoting, kept immutable after construction so a single
// factorization can serve many solves (and be shared across threads).
class LuFactorization {
 public:
  explicit LuFactorization(Matrix m);

  std::size_t dim() const { return lu_.rows(); }
  bool singular() const { return singular_; }

  // Estimate of cond_1(M) = ||M||_1 * ||M^-1||_1 (Hager-Higham one-norm
  // estimator). Infinity when singular to working precision.
  double condition_estimate() const { return cond_; }

  void solve(std::span<const cplx> b, std::span<cplx> x) const;
  // Solves M^H x = b with the same factors.
  void solve_adjoint(std::span<const cplx> b, std::span<cplx> x) const;

  Matrix solve_matrix(const Matrix& b) const;  // column solves, OpenMP
  Matrix inverse() const;

 private:
  Matrix lu_;
  std::vector<std::size_t> piv_;
  bool singular_ = false;
  double norm1_ = 0.0;
  double cond_ = 0.0;

  double estimate_inverse_norm1() const;
};

}  // namespace sgl
