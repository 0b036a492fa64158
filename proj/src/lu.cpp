#include "sgl/lu.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "sgl/parallel.hpp"

namespace sgl {

namespace {

double matrix_norm1(const Matrix& m) {
  double best = 0.0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.rows(); ++i) s += std::abs(m(i, j));
    best = std::max(best, s);
  }
  return best;
}

}  // namespace

LuFactorization::LuFactorization(Matrix m) : lu_(std::move(m)) {
  if (lu_.rows() != lu_.cols())
    throw std::invalid_argument("LuFactorization: matrix must be square");
  const std::size_t n = lu_.rows();
  norm1_ = matrix_norm1(lu_);
  piv_.resize(n);

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(lu_(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(lu_(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    piv_[k] = p;
    if (best == 0.0) {
      singular_ = true;
      continue;
    }
    if (p != k)
      for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(p, j));
    const cplx pivot = lu_(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const cplx l = lu_(i, k) / pivot;
      lu_(i, k) = l;
      if (l == cplx{}) continue;
      for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= l * lu_(k, j);
    }
  }

  if (singular_) {
    cond_ = std::numeric_limits<double>::infinity();
  } else {
    cond_ = norm1_ * estimate_inverse_norm1();
  }
}

void LuFactorization::solve(std::span<const cplx> b, std::span<cplx> x) const {
  if (singular_) throw std::runtime_error("LuFactorization::solve: singular matrix");
  const std::size_t n = dim();
  if (b.size() != n || x.size() != n)
    throw std::invalid_argument("LuFactorization::solve: size mismatch");
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i];
  for (std::size_t k = 0; k < n; ++k)
    if (piv_[k] != k) std::swap(x[k], x[piv_[k]]);
  // forward: L y = Pb, unit lower triangular
  for (std::size_t i = 1; i < n; ++i) {
    cplx acc = x[i];
    for (std::size_t j = 0; j < i; ++j) acc -= lu_(i, j) * x[j];
    x[i] = acc;
  }
  // backward: U x = y
  for (std::size_t ii = n; ii-- > 0;) {
    cplx acc = x[ii];
    for (std::size_t j = ii + 1; j < n; ++j) acc -= lu_(ii, j) * x[j];
    x[ii] = acc / lu_(ii, ii);
  }
}

void LuFactorization::solve_adjoint(std::span<const cplx> b,
                                    std::span<cplx> x) const {
  if (singular_)
    throw std::runtime_error("LuFactorization::solve_adjoint: singular matrix");
  const std::size_t n = dim();
  if (b.size() != n || x.size() != n)
    throw std::invalid_argument("LuFactorization::solve_adjoint: size mismatch");
  // M = P^T L U,  M^H = U^H L^H P  =>  solve U^H y = b, L^H z = y, x = P^T z.
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i];
  for (std::size_t i = 0; i < n; ++i) {
    cplx acc = x[i];
    for (std::size_t j = 0; j < i; ++j) acc -= std::conj(lu_(j, i)) * x[j];
    x[i] = acc / std::conj(lu_(i, i));
  }
  for (std::size_t ii = n; ii-- > 0;) {
    cplx acc = x[ii];
    for (std::size_t j = ii + 1; j < n; ++j) acc -= std::conj(lu_(j, ii)) * x[j];
    x[ii] = acc;
  }
  for (std::size_t kk = n; kk-- > 0;)
    if (piv_[kk] != kk) std::swap(x[kk], x[piv_[kk]]);
}

Matrix LuFactorization::solve_matrix(const Matrix& b) const {
  const std::size_t n = dim();
  if (b.rows() != n) throw std::invalid_argument("solve_matrix: size mismatch");
  Matrix x(n, b.cols());
  parallel_for(b.cols(), [&](std::size_t j) {
    std::vector<cplx> col(n), sol(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = b(i, j);
    solve(col, sol);
    for (std::size_t i = 0; i < n; ++i) x(i, j) = sol[i];
  });
  return x;
}

Matrix LuFactorization::inverse() const {
  return solve_matrix(Matrix::identity(dim()));
}

double LuFactorization::estimate_inverse_norm1() const {
  const std::size_t n = dim();
  std::vector<cplx> x(n, cplx{1.0 / static_cast<double>(n), 0.0});
  std::vector<cplx> y(n), z(n);
  double est = 0.0;
  for (int iter = 0; iter < 5; ++iter) {
    solve(x, y);
    double norm_y = 0.0;
    for (const auto& v : y) norm_y += std::abs(v);
    est = std::max(est, norm_y);
    for (std::size_t i = 0; i < n; ++i) {
      const double a = std::abs(y[i]);
      z[i] = a > 0.0 ? y[i] / a : cplx{1.0, 0.0};
    }
    solve_adjoint(z, y);
    std::size_t jmax = 0;
    double best = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (std::abs(y[i]) > best) {
        best = std::abs(y[i]);
        jmax = i;
      }
    }
    double xy = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      xy += (std::conj(y[i]) * x[i]).real();
    if (best <= xy + 1e-14) break;
    std::fill(x.begin(), x.end(), cplx{});
    x[jmax] = 1.0;
  }
  return est;
}

}  // namespace sgl
