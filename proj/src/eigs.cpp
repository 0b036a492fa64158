#include "sgl/eigs.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <limits>
#include <stdexcept>

namespace sgl {

namespace {

using EigenCMat =
    Eigen::Matrix<std::complex<double>, Eigen::Dynamic, Eigen::Dynamic,
                  Eigen::RowMajor>;

Eigen::Map<const EigenCMat> as_eigen(const Matrix& m) {
  return {m.data(), static_cast<Eigen::Index>(m.rows()),
          static_cast<Eigen::Index>(m.cols())};
}

Matrix from_eigen(const EigenCMat& e) {
  Matrix m(e.rows(), e.cols());
  for (Eigen::Index i = 0; i < e.rows(); ++i)
    for (Eigen::Index j = 0; j < e.cols(); ++j) m(i, j) = e(i, j);
  return m;
}

void sort_by_re_im(std::vector<cplx>& v) {
  std::sort(v.begin(), v.end(), [](const cplx& a, const cplx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
}

}  // namespace

std::vector<cplx> eigenvalues(const Matrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("eigenvalues: matrix must be square");
  Eigen::ComplexEigenSolver<EigenCMat> solver(as_eigen(m), false);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigenvalues: eigensolver failure");
  std::vector<cplx> v(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    v[i] = solver.eigenvalues()(static_cast<Eigen::Index>(i));
  sort_by_re_im(v);
  return v;
}

std::vector<double> singular_values(const Matrix& m) {
  Eigen::JacobiSVD<EigenCMat> svd(as_eigen(m));
  std::vector<double> s(svd.singularValues().size());
  for (std::size_t i = 0; i < s.size(); ++i)
    s[i] = svd.singularValues()(static_cast<Eigen::Index>(i));
  return s;
}

double spectral_norm(const Matrix& m) {
  if (m.rows() == 0) return 0.0;
  const auto s = singular_values(m);
  return s.empty() ? 0.0 : s.front();
}

EigenDecomposition eigen_decomposition(const Matrix& m) {
  if (m.rows() != m.cols())
    throw std::invalid_argument("eigen_decomposition: matrix must be square");
  Eigen::ComplexEigenSolver<EigenCMat> solver(as_eigen(m), true);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("eigen_decomposition: eigensolver failure");
  EigenDecomposition out;
  out.values.resize(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    out.values[i] = solver.eigenvalues()(static_cast<Eigen::Index>(i));
  EigenCMat v = solver.eigenvectors();
  out.vectors = from_eigen(v);
  Eigen::JacobiSVD<EigenCMat> svd(v);
  const auto& sv = svd.singularValues();
  const double smin = sv(sv.size() - 1);
  out.vector_condition =
      smin > 0.0 ? sv(0) / smin : std::numeric_limits<double>::infinity();
  return out;
}

std::size_t numerical_rank(const Matrix& m, double rel_tol) {
  const auto s = singular_values(m);
  if (s.empty() || s.front() == 0.0) return 0;
  const double cut = rel_tol * s.front();
  std::size_t rank = 0;
  for (double v : s)
    if (v > cut) ++rank;
  return rank;
}

}  // namespace sgl
