#include "sgl/semigroup.hpp"

#include <cmath>
#include <stdexcept>

#include "sgl/eigs.hpp"
#include "sgl/lu.hpp"
#include "sgl/parallel.hpp"
#include "sgl/quadrature.hpp"
#include "sgl/resolvent.hpp"

namespace sgl {

namespace {

// Taylor core with scaling-and-squaring: ||tA / 2^s|| <= 0.5, tail < 1e-16.
Matrix expm_scaling_squaring(const Matrix& a, double t) {
  const std::size_t n = a.rows();
  Matrix b = a * cplx{t, 0.0};
  const double norm = frobenius_norm(b);
  std::size_t squarings = 0;
  if (norm > 0.5) {
    squarings = static_cast<std::size_t>(std::ceil(std::log2(norm / 0.5)));
    b *= cplx{std::ldexp(1.0, -static_cast<int>(squarings)), 0.0};
  }
  Matrix sum = Matrix::identity(n);
  Matrix term = Matrix::identity(n);
  for (std::size_t k = 1; k <= 200; ++k) {
    term = multiply(term, b) * cplx{1.0 / static_cast<double>(k), 0.0};
    sum += term;
    if (frobenius_norm(term) < 1e-16 * std::max(1.0, frobenius_norm(sum)))
      break;
  }
  for (std::size_t s = 0; s < squarings; ++s) sum = multiply(sum, sum);
  return sum;
}

}  // namespace

SemigroupOracle::SemigroupOracle(const OperatorHandle& a)
    : SemigroupOracle(a.densified()) {}

SemigroupOracle::SemigroupOracle(Matrix a) : a_(std::move(a)) {
  if (a_.rows() != a_.cols())
    throw std::invalid_argument("SemigroupOracle: matrix must be square");
  if (a_.rows() > 2048)
    throw std::invalid_argument("SemigroupOracle: dim > 2048 not supported");
  EigenDecomposition eig = eigen_decomposition(a_);
  if (eig.vector_condition < 1e8) {
    use_eig_ = true;
    values_ = std::move(eig.values);
    vectors_ = std::move(eig.vectors);
    vectors_inv_ = LuFactorization(vectors_).inverse();
  }
}

Matrix SemigroupOracle::at(double t) const {
  if (t == 0.0) return Matrix::identity(a_.rows());  // T(0) = I exactly
  if (!use_eig_) return expm_scaling_squaring(a_, t);
  const std::size_t n = a_.rows();
  Matrix scaled(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const cplx e = std::exp(values_[i] * t);
    for (std::size_t j = 0; j < n; ++j) scaled(i, j) = e * vectors_inv_(i, j);
  }
  return multiply(vectors_, scaled);
}

void SemigroupOracle::apply(double t, std::span<const cplx> x,
                            std::span<cplx> y) const {
  const Matrix e = at(t);
  matvec(e, x, y);
}

Matrix expm_oracle(const OperatorHandle& a, double t) {
  return SemigroupOracle(a).at(t);
}

Matrix expm_oracle(const Matrix& a, double t) {
  return SemigroupOracle(a).at(t);
}

Matrix expm_taylor(const OperatorHandle& a, double t, double tol) {
  Matrix b = a.densified() * cplx{t, 0.0};
  const double norm = spectral_norm(b);
  if (norm > 20.0)
    throw std::invalid_argument("expm_taylor: ||tA|| > 20, use the oracle");
  const std::size_t n = b.rows();
  Matrix sum = Matrix::identity(n);
  Matrix term = Matrix::identity(n);
  for (std::size_t k = 1; k <= 500; ++k) {
    term = multiply(term, b) * cplx{1.0 / static_cast<double>(k), 0.0};
    sum += term;
    if (frobenius_norm(term) < tol) break;
  }
  return sum;
}

Matrix yosida_generator(const OperatorHandle& a, cplx lambda) {
  Matrix out = resolvent_matrix(a, lambda) * (lambda * lambda);
  for (std::size_t i = 0; i < out.rows(); ++i) out(i, i) -= lambda;
  return out;
}

ConvergenceTable yosida_semigroup_error(
    const OperatorHandle& a, const std::vector<double>& t_grid,
    const std::vector<double>& lambda_sequence) {
  ConvergenceTable table;
  table.target = "yosida: e^{t A_lambda} -> e^{tA}";
  const SemigroupOracle oracle(a);
  table.rows.resize(lambda_sequence.size());
  parallel_for(lambda_sequence.size(), [&](std::size_t k) {
    const double lambda = lambda_sequence[k];
    const SemigroupOracle approx(yosida_generator(a, cplx{lambda, 0.0}));
    double err = 0.0;
    for (double t : t_grid)
      err = std::max(err, spectral_norm(approx.at(t) - oracle.at(t)));
    table.rows[k] = {lambda, err};
  });
  double worst = 0.0;
  for (const auto& row : table.rows) worst = std::max(worst, row.error);
  table.exact = worst <= 1e-15;
  return table;
}

Matrix power_apply(const StepAction& step, std::size_t dim, std::size_t n) {
  Matrix out(dim, dim);
  parallel_for(dim, [&](std::size_t j) {
    std::vector<cplx> x(dim), y(dim);
    x[j] = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
      step(x, y);
      std::swap(x, y);
    }
    for (std::size_t i = 0; i < dim; ++i) out(i, j) = x[i];
  });
  return out;
}

StepFamily backward_euler_family(const OperatorHandle& a) {
  return [a](double h) -> StepAction {
    if (h == 0.0) {
      return [](std::span<const cplx> x, std::span<cplx> y) {
        std::copy(x.begin(), x.end(), y.begin());
      };
    }
    if (a.kind == OperatorKind::matrix_free && a.has_shifted_solver()) {
      auto solver = a.solve_shifted;
      const cplx shift{1.0 / h, 0.0};
      return [solver, shift, h](std::span<const cplx> x, std::span<cplx> y) {
        solver(shift, x, y);
        for (auto& v : y) v *= (1.0 / h);
      };
    }
    Matrix m = a.densified() * cplx{-h, 0.0};
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) += 1.0;
    auto lu = std::make_shared<LuFactorization>(std::move(m));
    if (lu->singular())
      throw std::invalid_argument("exp_formula: singular shift n/t");
    return [lu](std::span<const cplx> x, std::span<cplx> y) {
      lu->solve(x, y);
    };
  };
}

Matrix exp_formula(const OperatorHandle& a, double t, std::size_t n) {
  if (n == 0) throw std::invalid_argument("exp_formula: n must be positive");
  if (t == 0.0) return Matrix::identity(a.dim);
  const StepFamily family = backward_euler_family(a);
  return power_apply(family(t / static_cast<double>(n)), a.dim, n);
}

Matrix euler_product(const OperatorHandle& a, double t, std::size_t n) {
  if (n == 0) throw std::invalid_argument("euler_product: n must be positive");
  Matrix dense = a.densified();
  if (spectral_norm(dense) * std::abs(t) > 50.0)
    throw std::invalid_argument("euler_product: ||tA|| > 50 overflow guard");
  Matrix step = dense * cplx{t / static_cast<double>(n), 0.0};
  for (std::size_t i = 0; i < step.rows(); ++i) step(i, i) += 1.0;
  Matrix out = Matrix::identity(a.dim);
  for (std::size_t k = 0; k < n; ++k) out = multiply(out, step);
  return out;
}

StepFamily trotter_family(const OperatorHandle& a1, const OperatorHandle& a2) {
  if (a1.dim != a2.dim)
    throw std::invalid_argument("lie_trotter: dimension mismatch");
  auto o1 = std::make_shared<SemigroupOracle>(a1);
  auto o2 = std::make_shared<SemigroupOracle>(a2);
  return [o1, o2](double h) -> StepAction {
    auto e1 = std::make_shared<Matrix>(o1->at(h));
    auto e2 = std::make_shared<Matrix>(o2->at(h));
    return [e1, e2](std::span<const cplx> x, std::span<cplx> y) {
      std::vector<cplx> tmp(x.size());
      matvec(*e2, x, tmp);
      matvec(*e1, tmp, y);
    };
  };
}

Matrix lie_trotter(const OperatorHandle& a1, const OperatorHandle& a2,
                   double t, std::size_t n) {
  if (n == 0) throw std::invalid_argument("lie_trotter: n must be positive");
  const StepFamily family = trotter_family(a1, a2);
  return power_apply(family(t / static_cast<double>(n)), a1.dim, n);
}

namespace {

Matrix densify_action(const StepAction& step, std::size_t dim) {
  return power_apply(step, dim, 1);
}

}  // namespace

ChernoffResult chernoff_product(const StepFamily& f, const OperatorHandle& a,
                                double t, std::size_t n) {
  if (n == 0) throw std::invalid_argument("chernoff_product: n must be positive");
  const std::size_t dim = a.dim;

  const Matrix f0 = densify_action(f(0.0), dim);
  if (max_abs(f0 - Matrix::identity(dim)) > 1e-12)
    throw std::invalid_argument("chernoff_product: F(0) != I");

  const Matrix dense = a.densified();
  auto defect_at = [&](double h) {
    Matrix d = densify_action(f(h), dim) - Matrix::identity(dim);
    d *= cplx{1.0 / h, 0.0};
    return spectral_norm(d - dense);
  };
  ChernoffResult out;
  out.defect_coarse = defect_at(1e-3);
  out.defect_fine = defect_at(1e-4);
  if (out.defect_fine > out.defect_coarse + 1e-12)
    throw std::invalid_argument(
        "chernoff_product: consistency defect grows as h shrinks");

  out.product = power_apply(f(t / static_cast<double>(n)), dim, n);
  return out;
}

double chernoff_lemma_bound(double m, double n_bound, std::size_t n,
                            double defect) {
  if (m < 1.0 || n_bound < 1.0 || defect < 0.0)
    throw std::invalid_argument("chernoff_lemma_bound: need M,N >= 1, defect >= 0");
  const double nn = static_cast<double>(n);
  return m * std::pow(n_bound, nn - 1.0) * std::exp((n_bound - 1.0) * nn) *
         std::sqrt(nn * nn * (n_bound - 1.0) * (n_bound - 1.0) + nn * n_bound) *
         defect;
}

CheckReport chernoff_lemma_check(const OperatorHandle& a, double h,
                                 std::size_t n, std::size_t probes) {
  CheckReport report;
  report.name = "chernoff-lemma";
  const Matrix t_op = expm_oracle(a, h);
  if (spectral_norm(t_op) > 1.0 + 1e-9)
    throw std::invalid_argument("chernoff_lemma_check: T = e^{hA} not contractive");

  // e^{n(T - I)} and T^n, both dense
  Matrix gen = t_op - Matrix::identity(a.dim);
  const Matrix lhs = expm_oracle(gen, static_cast<double>(n));
  Matrix t_pow = Matrix::identity(a.dim);
  for (std::size_t k = 0; k < n; ++k) t_pow = multiply(t_pow, t_op);

  const auto xs = probe_vectors(a.dim, probes, 0x43484E);
  double worst_margin = -1.0;  // max over probes of (diff - bound); pass <= 0
  std::vector<cplx> u(a.dim), v(a.dim), w(a.dim);
  for (const auto& x : xs) {
    matvec(lhs, x, u);
    matvec(t_pow, x, v);
    matvec(t_op, x, w);
    for (std::size_t i = 0; i < a.dim; ++i) {
      u[i] -= v[i];
      w[i] -= x[i];
    }
    const double diff = norm2(u);
    const double bound = chernoff_lemma_bound(1.0, 1.0, n, norm2(w));
    worst_margin = std::max(worst_margin, diff - bound);
  }
  report.require("empirical_minus_bound", worst_margin, 1e-12);
  return report;
}

CheckReport taylor_remainder_check(const OperatorHandle& a, double t,
                                   std::size_t n, std::size_t quad_points) {
  if (n == 0) throw std::invalid_argument("taylor_remainder_check: n >= 1");
  CheckReport report;
  report.name = "taylor-remainder";
  const Matrix dense = a.densified();
  const SemigroupOracle oracle(a);
  const Matrix target = oracle.at(t);

  auto remainder_residual = [&](std::size_t q) {
    // polynomial part
    std::vector<Matrix> powers(n + 1, Matrix::identity(a.dim));
    for (std::size_t k = 1; k <= n; ++k)
      powers[k] = multiply(powers[k - 1], dense);
    Matrix poly(a.dim, a.dim);
    double factorial = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0) factorial *= static_cast<double>(i);
      poly += powers[i] * cplx{std::pow(t, static_cast<double>(i)) / factorial, 0.0};
    }
    // integral part, nodes evaluated in parallel, summed in node order
    const auto rule = gauss_legendre_on(0.0, t, q);
    std::vector<Matrix> node_terms(rule.nodes.size());
    parallel_for(rule.nodes.size(), [&](std::size_t k) {
      const double u = rule.nodes[k];
      node_terms[k] =
          oracle.at(u) *
          cplx{rule.weights[k] * std::pow(t - u, static_cast<double>(n) - 1.0),
               0.0};
    });
    Matrix integral(a.dim, a.dim);
    for (const auto& term : node_terms) integral += term;
    double fact_n1 = 1.0;
    for (std::size_t k = 2; k < n; ++k) fact_n1 *= static_cast<double>(k);
    Matrix rhs = poly + multiply(integral, powers[n]) * cplx{1.0 / fact_n1, 0.0};
    // max probe residual relative to ||x|| = 1
    const auto xs = probe_vectors(a.dim, 8, 0x54415952);
    std::vector<cplx> lv(a.dim), rv(a.dim);
    double worst = 0.0;
    for (const auto& x : xs) {
      matvec(target, x, lv);
      matvec(rhs, x, rv);
      for (std::size_t i = 0; i < a.dim; ++i) lv[i] -= rv[i];
      worst = std::max(worst, norm2(lv));
    }
    return worst;
  };

  const double res = remainder_residual(quad_points);
  report.require("remainder_residual", res, 1e-8);
  if (!(res <= 1e-8)) {
    const double res2 = remainder_residual(2 * quad_points);
    if (res2 > 0.5 * res)
      report.note("residual not decreasing under quadrature doubling");
    report.info("residual_at_doubled_nodes", res2);
  }
  return report;
}

namespace {

ConvergenceTable assemble_table(
    const std::string& target, const std::vector<std::size_t>& n_sequence,
    const std::function<double(std::size_t)>& error_at) {
  if (n_sequence.size() < 3)
    throw std::invalid_argument("converge_table: need >= 3 entries");
  for (std::size_t i = 1; i < n_sequence.size(); ++i)
    if (n_sequence[i] <= n_sequence[i - 1])
      throw std::invalid_argument("converge_table: n_sequence must increase");
  ConvergenceTable table;
  table.target = target;
  table.rows.resize(n_sequence.size());
  parallel_for(n_sequence.size(), [&](std::size_t k) {
    table.rows[k] = {static_cast<double>(n_sequence[k]), error_at(n_sequence[k])};
  });
  table.exact = true;
  for (const auto& row : table.rows)
    if (row.error > 1e-13) table.exact = false;
  return table;
}

}  // namespace

ConvergenceTable converge_table(const std::string& method,
                                const OperatorHandle& a,
                                const std::vector<double>& t_grid,
                                const std::vector<std::size_t>& n_sequence) {
  if (method == "yosida") {
    std::vector<double> lambdas(n_sequence.begin(), n_sequence.end());
    return yosida_semigroup_error(a, t_grid, lambdas);
  }
  const SemigroupOracle oracle(a);
  auto max_err = [&](const std::function<Matrix(double, std::size_t)>& fn,
                     std::size_t n) {
    double err = 0.0;
    for (double t : t_grid)
      err = std::max(err, spectral_norm(fn(t, n) - oracle.at(t)));
    return err;
  };
  if (method == "euler")
    return assemble_table("euler", n_sequence, [&](std::size_t n) {
      return max_err([&](double t, std::size_t m) { return euler_product(a, t, m); }, n);
    });
  if (method == "exp-formula")
    return assemble_table("exp-formula", n_sequence, [&](std::size_t n) {
      return max_err([&](double t, std::size_t m) { return exp_formula(a, t, m); }, n);
    });
  throw std::invalid_argument("converge_table: unknown method " + method);
}

ConvergenceTable converge_table_trotter(
    const OperatorHandle& a1, const OperatorHandle& a2,
    const std::vector<double>& t_grid,
    const std::vector<std::size_t>& n_sequence) {
  Matrix sum = a1.densified() + a2.densified();
  const SemigroupOracle oracle(sum);
  return assemble_table("trotter", n_sequence, [&](std::size_t n) {
    double err = 0.0;
    for (double t : t_grid)
      err = std::max(err, spectral_norm(lie_trotter(a1, a2, t, n) - oracle.at(t)));
    return err;
  });
}

ConvergenceTable converge_table_chernoff(
    const StepFamily& f, const OperatorHandle& a,
    const std::vector<double>& t_grid,
    const std::vector<std::size_t>& n_sequence) {
  const SemigroupOracle oracle(a);
  return assemble_table("chernoff", n_sequence, [&](std::size_t n) {
    double err = 0.0;
    for (double t : t_grid) {
      const Matrix p = chernoff_product(f, a, t, n).product;
      err = std::max(err, spectral_norm(p - oracle.at(t)));
    }
    return err;
  });
}

}  // namespace sgl
