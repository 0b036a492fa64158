#pragma once
#include <functional>
#include <optional>
#include <string>

#include "sgl/matrix.hpp"

namespace sgl {

enum class OperatorKind { dense, matrix_free };

// A finite-dimensional linear operator with complex scalars. Immutable
// after construction; safe to share across threads.
struct OperatorHandle {
  std::size_t dim = 0;
  OperatorKind kind = OperatorKind::dense;
  std::string label;

  std::function<void(std::span<const cplx>, std::span<cplx>)> apply_fn;
  // (lambda, b, y) with (lambda*I - A) y = b; present for matrix_free
  // operators that carry their own structured solver.
  std::function<void(cplx, std::span<const cplx>, std::span<cplx>)>
      solve_shifted;
  std::function<void(std::span<const cplx>, std::span<cplx>)> apply_adjoint_fn;
  std::optional<Matrix> dense_data;

  void apply(std::span<const cplx> x, std::span<cplx> y) const {
    apply_fn(x, y);
  }
  bool has_shifted_solver() const { return static_cast<bool>(solve_shifted); }

  // Dense image of the operator; applies to the canonical basis for
  // matrix_free handles (warns on stderr above dim 512).
  Matrix densified() const;
};

OperatorHandle operator_from_matrix(Matrix m, std::string label);

OperatorHandle op_zero(std::size_t n);
OperatorHandle op_identity(std::size_t n);
OperatorHandle op_diag(const std::vector<cplx>& values);
OperatorHandle op_jordan(cplx lambda, std::size_t n);
OperatorHandle op_nilpotent_shift(std::size_t n);
OperatorHandle op_rotation2();
OperatorHandle op_laplacian1d(std::size_t n, double h);  // matrix_free, Thomas solver
OperatorHandle op_advection1d(std::size_t n, double h);
OperatorHandle op_random_dissipative(std::size_t n, unsigned seed);
OperatorHandle op_random_bounded(std::size_t n, unsigned seed, double norm_cap);

// Generator specs like "laplacian1d:n=64,h=0.015625", "diag:-1,-2",
// "jordan:lambda=-1,n=3"; or a matrix file (path ending .json/.csv, or
// "file:<path>").
OperatorHandle make_operator(const std::string& source);

Matrix read_matrix_file(const std::string& path);
void write_matrix_json(const Matrix& m, const std::string& path);
void write_matrix_csv(const Matrix& m, const std::string& path);

// Deterministic unit probe vectors (complex standard normal, normalized).
std::vector<std::vector<cplx>> probe_vectors(std::size_t dim,
                                             std::size_t count, unsigned seed);

// The six operators every cross-validation suite runs over. Norms are kept
// modest so circle contours with r >= 1.05*||A|| stay quadrature-friendly.
std::vector<OperatorHandle> builtin_test_set();
// Built-in generators of contraction semigroups.
std::vector<OperatorHandle> builtin_dissipative_set();

}  // namespace sgl
