#pragma once
#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace sgl {

using cplx = std::complex<double>;

// Dense row-major complex matrix. The multiply kernels live in matrix.cpp;
// the OpenMP variant splits by output row, the serial variant is the
// reference the tests and the benchmark compare against.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t n) { return Matrix(n, n); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  cplx& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  std::span<cplx> row(std::size_t i) { return {a_.data() + i * cols_, cols_}; }
  std::span<const cplx> row(std::size_t i) const {
    return {a_.data() + i * cols_, cols_};
  }
  cplx* data() { return a_.data(); }
  const cplx* data() const { return a_.data(); }

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(cplx s);

  Matrix adjoint() const;
  Matrix transpose() const;

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, cplx s) { return a *= s; }
  friend Matrix operator*(cplx s, Matrix a) { return a *= s; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> a_;
};

// C = A * B, OpenMP over output rows.
Matrix multiply(const Matrix& a, const Matrix& b);
// Reference kernel, identical arithmetic order per output element.
Matrix multiply_serial(const Matrix& a, const Matrix& b);

void matvec(const Matrix& a, std::span<const cplx> x, std::span<cplx> y);

double frobenius_norm(const Matrix& a);
double max_abs(const Matrix& a);
double norm_inf(const Matrix& a);  // max row sum
double max_imag_abs(const Matrix& a);

double norm2(std::span<const cplx> x);
void axpy(cplx alpha, std::span<const cplx> x, std::span<cplx> y);

}  // namespace sgl
