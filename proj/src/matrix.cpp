#include "sgl/matrix.hpp"

#include <cmath>
#include <stdexcept>

#include "sgl/parallel.hpp"

namespace sgl {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += other.a_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= other.a_[k];
  return *this;
}

Matrix& Matrix::operator*=(cplx s) {
  for (auto& v : a_) v *= s;
  return *this;
}

Matrix Matrix::adjoint() const {
  Matrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = std::conj((*this)(i, j));
  return m;
}

Matrix Matrix::transpose() const {
  Matrix m(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(j, i) = (*this)(i, j);
  return m;
}

namespace {

inline void multiply_row(const Matrix& a, const Matrix& b, Matrix& c,
                         std::size_t i) {
  const std::size_t n = b.rows();
  const std::size_t m = b.cols();
  for (std::size_t k = 0; k < n; ++k) {
    const cplx aik = a(i, k);
    if (aik == cplx{}) continue;
    const cplx* brow = b.data() + k * m;
    cplx* crow = c.data() + i * m;
    for (std::size_t j = 0; j < m; ++j) crow[j] += aik * brow[j];
  }
}

}  // namespace

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  Matrix c(a.rows(), b.cols());
  parallel_for(a.rows(), [&](std::size_t i) { multiply_row(a, b, c, i); });
  return c;
}

Matrix multiply_serial(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) multiply_row(a, b, c, i);
  return c;
}

void matvec(const Matrix& a, std::span<const cplx> x, std::span<cplx> y) {
  if (a.cols() != x.size() || a.rows() != y.size())
    throw std::invalid_argument("matvec: shape mismatch");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    cplx acc{};
    const cplx* row = a.data() + i * a.cols();
    for (std::size_t j = 0; j < a.cols(); ++j) acc += row[j] * x[j];
    y[i] = acc;
  }
}

double frobenius_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

double max_abs(const Matrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m = std::max(m, std::abs(a(i, j)));
  return m;
}

double norm_inf(const Matrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += std::abs(a(i, j));
    m = std::max(m, s);
  }
  return m;
}

double max_imag_abs(const Matrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m = std::max(m, std::abs(a(i, j).imag()));
  return m;
}

double norm2(std::span<const cplx> x) {
  double s = 0.0;
  for (const auto& v : x) s += std::norm(v);
  return std::sqrt(s);
}

void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
}

}  // namespace sgl
