#include "sgl/resolvent.hpp"

#include <cmath>
#include <stdexcept>

#include "sgl/eigs.hpp"
#include "sgl/parallel.hpp"

namespace sgl {

namespace {

Matrix shifted_matrix(const OperatorHandle& a, cplx lambda) {
  Matrix m = a.densified();
  m *= cplx{-1.0, 0.0};
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) += lambda;
  return m;
}

double action_norm_estimate(
    const std::function<void(std::span<const cplx>, std::span<cplx>)>& action,
    std::size_t dim) {
  const auto probes = probe_vectors(dim, 4, 0x524E4F52);
  std::vector<cplx> y(dim);
  double best = 0.0;
  for (const auto& p : probes) {
    action(p, y);
    best = std::max(best, norm2(y));
  }
  return best;
}

}  // namespace

std::shared_ptr<const LuFactorization> shifted_factorization(
    const OperatorHandle& a, cplx lambda) {
  return std::make_shared<LuFactorization>(shifted_matrix(a, lambda));
}

ResolventSample resolvent(const OperatorHandle& a, cplx lambda) {
  ResolventSample sample;
  sample.lambda = lambda;

  if (a.kind == OperatorKind::matrix_free && a.has_shifted_solver()) {
    auto solver = a.solve_shifted;
    sample.action = [solver, lambda](std::span<const cplx> b,
                                     std::span<cplx> y) {
      solver(lambda, b, y);
    };
    // membership probed through the solve residual
    const auto probes = probe_vectors(a.dim, 3, 0x52455350);
    std::vector<cplx> y(a.dim), back(a.dim);
    double worst = 0.0;
    bool solver_ok = true;
    try {
      for (const auto& b : probes) {
        solver(lambda, b, y);
        a.apply(y, back);
        for (std::size_t i = 0; i < a.dim; ++i)
          back[i] = lambda * y[i] - back[i] - b[i];
        worst = std::max(worst, norm2(back));
      }
    } catch (const std::exception&) {
      solver_ok = false;
    }
    sample.in_resolvent_set = solver_ok && worst <= 1e-8;
    sample.condition_estimate = solver_ok ? 0.0 : std::numeric_limits<double>::infinity();
    if (sample.in_resolvent_set)
      sample.norm_estimate = action_norm_estimate(sample.action, a.dim);
    return sample;
  }

  auto lu = shifted_factorization(a, lambda);
  sample.condition_estimate = lu->condition_estimate();
  sample.in_resolvent_set =
      !lu->singular() && lu->condition_estimate() <= kResolventConditionLimit;
  if (sample.in_resolvent_set) {
    sample.action = [lu](std::span<const cplx> b, std::span<cplx> y) {
      lu->solve(b, y);
    };
    sample.norm_estimate = action_norm_estimate(sample.action, a.dim);
  }
  return sample;
}

Matrix resolvent_matrix(const OperatorHandle& a, cplx lambda) {
  if (a.kind == OperatorKind::matrix_free && a.has_shifted_solver()) {
    Matrix r(a.dim, a.dim);
    parallel_for(a.dim, [&](std::size_t j) {
      std::vector<cplx> e(a.dim), col(a.dim);
      e[j] = 1.0;
      a.solve_shifted(lambda, e, col);
      for (std::size_t i = 0; i < a.dim; ++i) r(i, j) = col[i];
    });
    return r;
  }
  auto lu = shifted_factorization(a, lambda);
  if (lu->singular() || lu->condition_estimate() > kResolventConditionLimit)
    throw std::invalid_argument("resolvent_matrix: shift outside rho(A)");
  return lu->inverse();
}

CheckReport check_resolvent_identity(const OperatorHandle& a, cplx lambda,
                                     cplx mu) {
  CheckReport report;
  report.name = "resolvent-identity";
  const Matrix rl = resolvent_matrix(a, lambda);
  const Matrix rm = resolvent_matrix(a, mu);
  const double scale =
      std::max(1.0, spectral_norm(rl) * spectral_norm(rm));

  Matrix identity_residual = rl - rm - (mu - lambda) * multiply(rl, rm);
  Matrix commutator = multiply(rl, rm) - multiply(rm, rl);
  report.require("identity", spectral_norm(identity_residual), 1e-9 * scale);
  report.require("commutation", spectral_norm(commutator), 1e-9 * scale);
  return report;
}

NeumannResolvent neumann_resolvent(const OperatorHandle& a, cplx lambda,
                                   double tol) {
  const double norm_a = operator_norm(a).value;
  if (!(std::abs(lambda) >= 1.01 * norm_a) || lambda == cplx{})
    throw std::invalid_argument(
        "neumann_resolvent: requires |lambda| >= 1.01 ||A||");

  const Matrix dense = a.densified();
  const std::size_t n = a.dim;
  Matrix term = Matrix::identity(n) * (1.0 / lambda);
  Matrix sum = term;
  double term_bound = norm_a > 0.0 ? norm_a / std::abs(lambda) : 0.0;
  double bound = 1.0 / std::abs(lambda);
  std::size_t k = 0;
  while (bound > tol) {
    if (++k > 10000)
      throw std::runtime_error("neumann_resolvent: series needs > 10000 terms");
    term = multiply(dense, term) * (1.0 / lambda);
    sum += term;
    if (norm_a == 0.0) break;
    bound *= term_bound;
  }

  NeumannResolvent out;
  out.terms = k + 1;
  out.sample.lambda = lambda;
  out.sample.in_resolvent_set = true;
  out.sample.norm_estimate = spectral_norm(sum);
  Matrix shared = sum;
  out.sample.action = [shared](std::span<const cplx> b, std::span<cplx> y) {
    matvec(shared, b, y);
  };
  out.matrix = std::move(sum);
  return out;
}

PseudoResolventFamily pseudo_resolvent_from(const OperatorHandle& a,
                                            const std::vector<cplx>& lambdas) {
  PseudoResolventFamily family;
  family.lambdas = lambdas;
  family.samples.resize(lambdas.size());
  parallel_for(lambdas.size(), [&](std::size_t i) {
    family.samples[i] = resolvent_matrix(a, lambdas[i]);
  });
  return family;
}

CheckReport check_pseudo_resolvent(const PseudoResolventFamily& family) {
  if (family.samples.size() < 2)
    throw std::invalid_argument("check_pseudo_resolvent: needs >= 2 samples");
  CheckReport report;
  report.name = "pseudo-resolvent";

  const std::size_t count = family.samples.size();
  const std::size_t dim = family.samples.front().rows();

  double worst_identity = 0.0, worst_commutation = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      const Matrix& ri = family.samples[i];
      const Matrix& rj = family.samples[j];
      const double scale =
          std::max(1e-30, spectral_norm(ri) * spectral_norm(rj));
      const cplx li = family.lambdas[i], lj = family.lambdas[j];
      Matrix res = ri - rj - (lj - li) * multiply(ri, rj);
      Matrix comm = multiply(ri, rj) - multiply(rj, ri);
      worst_identity = std::max(worst_identity, spectral_norm(res) / scale);
      worst_commutation = std::max(worst_commutation, spectral_norm(comm) / scale);
    }
  }
  report.require("identity", worst_identity, 1e-9);
  report.require("commutation", worst_commutation, 1e-9);

  std::vector<std::size_t> ranks(count);
  for (std::size_t i = 0; i < count; ++i)
    ranks[i] = numerical_rank(family.samples[i], 1e-10);
  bool rank_constant = true;
  for (std::size_t i = 1; i < count; ++i)
    if (ranks[i] != ranks.front()) rank_constant = false;
  report.require("rank_constant", rank_constant ? 0.0 : 1.0, 0.5);
  report.info("rank", static_cast<double>(ranks.front()));

  const bool injective = rank_constant && ranks.front() == dim;
  if (injective) {
    // A := lambda I - R_lambda^{-1}, reconstructed from two distinct shifts
    auto reconstruct = [&](std::size_t idx) {
      LuFactorization lu(family.samples[idx]);
      Matrix a = lu.inverse() * cplx{-1.0, 0.0};
      for (std::size_t i = 0; i < dim; ++i) a(i, i) += family.lambdas[idx];
      return a;
    };
    const Matrix a0 = reconstruct(0);
    const Matrix a1 = reconstruct(1);
    const double scale = std::max(1.0, spectral_norm(a0));
    report.require("reconstruction_agreement", spectral_norm(a0 - a1),
                   1e-8 * scale);
  } else {
    report.note("family not injective; generator reconstruction skipped");
  }
  return report;
}

CheckReport check_hille_yosida_bounds(const OperatorHandle& a,
                                      const GrowthEnvelope& env,
                                      const std::vector<cplx>& lambda_grid,
                                      std::size_t n_max) {
  if (n_max > 12)
    throw std::invalid_argument(
        "check_hille_yosida_bounds: powers beyond n = 12 are numerically "
        "meaningless at double precision");
  for (const auto& lambda : lambda_grid)
    if (!(lambda.real() > env.omega))
      throw std::invalid_argument(
          "check_hille_yosida_bounds: grid point with Re lambda <= omega");

  CheckReport report;
  report.name = "hille-yosida-bounds";
  std::vector<double> worst_by_shift(lambda_grid.size(), 0.0);
  parallel_for(lambda_grid.size(), [&](std::size_t k) {
    const cplx lambda = lambda_grid[k];
    const Matrix r = resolvent_matrix(a, lambda);
    Matrix power = r;
    double worst = 0.0;
    for (std::size_t n = 1; n <= n_max; ++n) {
      if (n > 1) power = multiply(power, r);
      const double bound =
          env.M / std::pow(lambda.real() - env.omega, static_cast<double>(n));
      worst = std::max(worst, spectral_norm(power) / bound);
    }
    worst_by_shift[k] = worst;
  });
  double worst = 0.0;
  for (double w : worst_by_shift) worst = std::max(worst, w);
  report.require("worst_ratio", worst, 1.0 + 1e-8);
  return report;
}

}  // namespace sgl
