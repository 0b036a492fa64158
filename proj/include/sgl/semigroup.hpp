#pragma once
#include <functional>
#include <memory>

#include "sgl/operator_handle.hpp"
#include "sgl/reports.hpp"

namespace sgl {

// Ground truth for e^{tA}: eigendecomposition when the eigenvector basis is
// well conditioned (< 1e8), scaling-and-squaring on the Taylor core
// otherwise. Decomposes once, evaluates at many t.
class SemigroupOracle {
 public:
  explicit SemigroupOracle(const OperatorHandle& a);
  explicit SemigroupOracle(Matrix a);

  Matrix at(double t) const;
  void apply(double t, std::span<const cplx> x, std::span<cplx> y) const;
  const Matrix& generator() const { return a_; }
  bool uses_eigendecomposition() const { return use_eig_; }

 private:
  Matrix a_;
  bool use_eig_ = false;
  Matrix vectors_;
  Matrix vectors_inv_;
  std::vector<cplx> values_;
};

Matrix expm_oracle(const OperatorHandle& a, double t);
Matrix expm_oracle(const Matrix& a, double t);

// Taylor partial sums; guards ||tA|| <= 20 against cancellation.
Matrix expm_taylor(const OperatorHandle& a, double t, double tol);

// Generalized Yosida approximation A_lambda = lambda^2 R(lambda;A) - lambda I.
Matrix yosida_generator(const OperatorHandle& a, cplx lambda);

// Rows (lambda, max_t ||e^{tA_lambda} - e^{tA}||); expected order 1 in lambda.
ConvergenceTable yosida_semigroup_error(const OperatorHandle& a,
                                        const std::vector<double>& t_grid,
                                        const std::vector<double>& lambda_sequence);

// A bounded step family h -> F(h), applied columnwise. All product formulas
// route through the same power kernel so definitionally equal families
// produce bit-identical output.
using StepAction = std::function<void(std::span<const cplx>, std::span<cplx>)>;
using StepFamily = std::function<StepAction(double h)>;

// F(t/n)^n as a dense matrix: n successive applications of the step to each
// basis vector, columns in parallel.
Matrix power_apply(const StepAction& step, std::size_t dim, std::size_t n);

// Backward-Euler step b -> (I - hA)^{-1} b behind one LU factorization.
StepFamily backward_euler_family(const OperatorHandle& a);

// [(n/t) R(n/t;A)]^n by n successive shifted solves per basis vector.
Matrix exp_formula(const OperatorHandle& a, double t, std::size_t n);

// (I + (t/n)A)^n by repeated multiplication; overflow guard ||tA|| <= 50.
Matrix euler_product(const OperatorHandle& a, double t, std::size_t n);

// [e^{(t/n)A1} e^{(t/n)A2}]^n with sub-exponentials from the oracle.
Matrix lie_trotter(const OperatorHandle& a1, const OperatorHandle& a2,
                   double t, std::size_t n);
StepFamily trotter_family(const OperatorHandle& a1, const OperatorHandle& a2);

struct ChernoffResult {
  Matrix product;
  double defect_coarse = 0.0;  // ||(F(h)-I)/h - A|| at h = 1e-3
  double defect_fine = 0.0;    // at h = 1e-4
};

// F(t/n)^n after verifying F(0) = I and that the consistency defect
// decreases from h = 1e-3 to h = 1e-4.
ChernoffResult chernoff_product(const StepFamily& f, const OperatorHandle& a,
                                double t, std::size_t n);

// M N^{n-1} e^{(N-1)n} sqrt(n^2 (N-1)^2 + nN) * defect.
double chernoff_lemma_bound(double m, double n_bound, std::size_t n,
                            double defect);

// Empirical companion: ||e^{n(T-I)}x - T^n x|| <= bound for T = e^{h A}
// over deterministic probes, A a contraction generator.
CheckReport chernoff_lemma_check(const OperatorHandle& a, double h,
                                 std::size_t n, std::size_t probes);

// T(t)x = sum_{i<n} t^i/i! A^i x + 1/(n-1)! Int_0^t (t-u)^{n-1} T(u) A^n x du
CheckReport taylor_remainder_check(const OperatorHandle& a, double t,
                                   std::size_t n, std::size_t quad_points);

// error(n) = max over t_grid of ||method(t,n) - oracle(t)||.
ConvergenceTable converge_table(const std::string& method,
                                const OperatorHandle& a,
                                const std::vector<double>& t_grid,
                                const std::vector<std::size_t>& n_sequence);
ConvergenceTable converge_table_trotter(const OperatorHandle& a1,
                                        const OperatorHandle& a2,
                                        const std::vector<double>& t_grid,
                                        const std::vector<std::size_t>& n_sequence);
ConvergenceTable converge_table_chernoff(const StepFamily& f,
                                         const OperatorHandle& a,
                                         const std::vector<double>& t_grid,
                                         const std::vector<std::size_t>& n_sequence);

}  // namespace sgl
