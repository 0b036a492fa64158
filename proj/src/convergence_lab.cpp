#include "sgl/convergence_lab.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "sgl/eigs.hpp"
#include "sgl/parallel.hpp"
#include "sgl/quadrature.hpp"
#include "sgl/resolvent.hpp"
#include "sgl/semigroup.hpp"

namespace sgl {

namespace {

constexpr double kPi = std::numbers::pi;

std::string index_label(const std::string& prefix, double value) {
  std::ostringstream out;
  out << prefix << value;
  return out.str();
}

}  // namespace

GeneratorSequence perturbation_family(const OperatorHandle& a,
                                      const OperatorHandle& b, int p,
                                      const std::vector<std::size_t>& n_values) {
  if (a.dim != b.dim)
    throw std::invalid_argument("perturbation_family: dimension mismatch");
  GeneratorSequence seq;
  seq.limit = a;
  const Matrix base = a.densified();
  const Matrix bump = b.densified();
  for (std::size_t n : n_values) {
    const double eps =
        1.0 / std::pow(static_cast<double>(n), static_cast<double>(p));
    seq.items.push_back(
        operator_from_matrix(base + bump * cplx{eps, 0.0},
                             index_label("perturb_n=", static_cast<double>(n))));
    seq.labels.push_back(seq.items.back().label);
    seq.indices.push_back(static_cast<double>(n));
  }
  return seq;
}

GeneratorSequence yosida_family(const OperatorHandle& a, int k_min, int k_max) {
  GeneratorSequence seq;
  seq.limit = a;
  for (int k = k_min; k <= k_max; ++k) {
    const double lambda = std::ldexp(1.0, k);
    seq.items.push_back(operator_from_matrix(
        yosida_generator(a, cplx{lambda, 0.0}), index_label("yosida_l=", lambda)));
    seq.labels.push_back(seq.items.back().label);
    seq.indices.push_back(lambda);
  }
  return seq;
}

GeneratorSequence stagnant_family(const OperatorHandle& a, std::size_t count) {
  GeneratorSequence seq;
  seq.limit = a;
  Matrix nil(a.dim, a.dim);
  if (a.dim >= 2) nil(0, a.dim - 1) = 1.0;
  const Matrix base = a.densified();
  for (std::size_t k = 1; k <= count; ++k) {
    seq.items.push_back(operator_from_matrix(
        base + nil, index_label("stagnant_n=", static_cast<double>(k))));
    seq.labels.push_back(seq.items.back().label);
    seq.indices.push_back(static_cast<double>(std::size_t{1} << k));
  }
  return seq;
}

ConvergenceTable resolvent_convergence_table(const GeneratorSequence& seq,
                                             cplx lambda, std::size_t probes) {
  ConvergenceTable table;
  table.target = "strong resolvent convergence";
  const Matrix r_limit = resolvent_matrix(seq.limit, lambda);
  const auto xs = probe_vectors(seq.limit.dim, probes, 0x54524B31);
  table.rows.resize(seq.items.size());
  parallel_for(seq.items.size(), [&](std::size_t k) {
    const Matrix r_k = resolvent_matrix(seq.items[k], lambda);
    const Matrix diff = r_k - r_limit;
    double worst = 0.0;
    std::vector<cplx> y(seq.limit.dim);
    for (const auto& x : xs) {
      matvec(diff, x, y);
      worst = std::max(worst, norm2(y));
    }
    table.rows[k] = {seq.indices[k], worst};
  });
  table.exact = true;
  for (const auto& row : table.rows)
    if (row.error > 1e-15) table.exact = false;
  return table;
}

ConvergenceTable semigroup_convergence_table(const GeneratorSequence& seq,
                                             double t0,
                                             std::size_t t_grid_size,
                                             std::size_t probes) {
  if (!(t0 > 0.0))
    throw std::invalid_argument("semigroup_convergence_table: t0 > 0");
  ConvergenceTable table;
  table.target = "uniform-on-compacts semigroup convergence";
  const SemigroupOracle limit(seq.limit);
  std::vector<double> ts(t_grid_size);
  for (std::size_t i = 0; i < t_grid_size; ++i)
    ts[i] = t0 * static_cast<double>(i) / static_cast<double>(t_grid_size - 1);
  const auto xs = probe_vectors(seq.limit.dim, probes, 0x54524B32);

  table.rows.resize(seq.items.size());
  parallel_for(seq.items.size(), [&](std::size_t k) {
    const SemigroupOracle member(seq.items[k]);
    double worst = 0.0;
    std::vector<cplx> y(seq.limit.dim);
    for (double t : ts) {
      const Matrix diff = member.at(t) - limit.at(t);
      for (const auto& x : xs) {
        matvec(diff, x, y);
        worst = std::max(worst, norm2(y));
      }
    }
    table.rows[k] = {seq.indices[k], worst};
  });
  table.exact = true;
  for (const auto& row : table.rows)
    if (row.error > 1e-15) table.exact = false;
  return table;
}

TkEquivalenceResult check_tk_equivalence(const GeneratorSequence& seq,
                                         cplx lambda, double t0) {
  TkEquivalenceResult result;
  result.resolvent_table = resolvent_convergence_table(seq, lambda, 10);
  result.semigroup_table = semigroup_convergence_table(seq, t0, 33, 10);
  result.report.name = "trotter-kato-equivalence";

  if (result.resolvent_table.exact && result.semigroup_table.exact) {
    result.report.note("both tables exactly zero (constant family)");
    return result;
  }

  const auto& res = result.resolvent_table.rows;
  const auto& sg = result.semigroup_table.rows;

  // stagnation: neither error sequence decays
  auto stagnant = [](const std::vector<TableRow>& rows) {
    if (rows.size() < 2) return false;
    return rows.back().error > 0.5 * rows.front().error &&
           rows.back().error > 1e-8;
  };
  if (stagnant(res) && stagnant(sg)) {
    result.no_convergence = true;
    result.report.note("no-convergence: both tables stagnate, equivalence "
                       "holds vacuously");
    return result;
  }

  double worst_factor = 1.0;
  for (std::size_t i = 0; i < res.size(); ++i) {
    const double e1 = std::max(res[i].error, 1e-16);
    const double e2 = std::max(sg[i].error, 1e-16);
    worst_factor = std::max(worst_factor, std::max(e1 / e2, e2 / e1));
  }
  result.report.require("error_ratio", worst_factor, 100.0);

  const double o1 = result.resolvent_table.empirical_order();
  const double o2 = result.semigroup_table.empirical_order();
  result.report.info("resolvent_order", o1);
  result.report.info("semigroup_order", o2);
  result.report.require("order_gap", std::abs(o1 - o2), 0.3);
  return result;
}

CheckReport bridge_identity_check(const OperatorHandle& a,
                                  const OperatorHandle& b, cplx lambda,
                                  double t, std::size_t quad_points) {
  if (a.dim != b.dim)
    throw std::invalid_argument("bridge_identity_check: dimension mismatch");
  CheckReport report;
  report.name = "bridge-identity";

  const Matrix r_a = resolvent_matrix(a, lambda);
  const Matrix r_b = resolvent_matrix(b, lambda);
  const SemigroupOracle t_oracle(a);  // T generated by A
  const SemigroupOracle s_oracle(b);  // S generated by B
  const Matrix r_diff = r_a - r_b;

  // left side: R(l;B) [T(t) - S(t)] R(l;A)
  const Matrix lhs =
      multiply(r_b, multiply(t_oracle.at(t) - s_oracle.at(t), r_a));

  // right side: Int_0^t S(t-s) [R(l;A) - R(l;B)] T(s) ds
  const auto rule = gauss_legendre_on(0.0, t, quad_points);
  std::vector<Matrix> node_terms(rule.nodes.size());
  parallel_for(rule.nodes.size(), [&](std::size_t k) {
    const double s = rule.nodes[k];
    node_terms[k] =
        multiply(s_oracle.at(t - s), multiply(r_diff, t_oracle.at(s))) *
        cplx{rule.weights[k], 0.0};
  });
  Matrix rhs(a.dim, a.dim);
  for (const auto& term : node_terms) rhs += term;

  const auto xs = probe_vectors(a.dim, 10, 0x42524947);
  std::vector<cplx> u(a.dim), v(a.dim);
  double worst = 0.0;
  for (const auto& x : xs) {
    matvec(lhs, x, u);
    matvec(rhs, x, v);
    for (std::size_t i = 0; i < a.dim; ++i) u[i] -= v[i];
    worst = std::max(worst, norm2(u));
  }
  report.require("bridge_residual", worst, 1e-8);
  return report;
}

RefinementTables laplacian_refinement_tables(std::size_t levels, cplx lambda,
                                             double t0) {
  if (levels < 3)
    throw std::invalid_argument("laplacian_refinement_tables: levels >= 3");
  RefinementTables out;
  out.resolvent_table.target = "laplacian refinement, resolvent";
  out.semigroup_table.target = "laplacian refinement, semigroup";

  // probe function: two Dirichlet modes, smooth on [0,1]
  const double c1 = 1.0, c3 = 0.5;
  auto probe = [&](double x) {
    return c1 * std::sin(kPi * x) + c3 * std::sin(3.0 * kPi * x);
  };
  // continuum references: eigenvalues -pi^2 and -(3 pi)^2
  const double mu1 = kPi * kPi, mu3 = 9.0 * kPi * kPi;

  for (std::size_t level = 0; level < levels; ++level) {
    const std::size_t n = (std::size_t{1} << (level + 3)) - 1;  // 7, 15, ...
    const double h = 1.0 / static_cast<double>(n + 1);
    const OperatorHandle op = op_laplacian1d(n, h);

    std::vector<cplx> f(n), exact_res(n), exact_sg(n), got(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double x = h * static_cast<double>(i + 1);
      f[i] = probe(x);
      exact_res[i] = c1 * std::sin(kPi * x) / (lambda + mu1) +
                     c3 * std::sin(3.0 * kPi * x) / (lambda + mu3);
      exact_sg[i] = c1 * std::exp(-mu1 * t0) * std::sin(kPi * x) +
                    c3 * std::exp(-mu3 * t0) * std::sin(3.0 * kPi * x);
    }

    op.solve_shifted(lambda, f, got);
    double err_res = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      err_res += std::norm(got[i] - exact_res[i]);
    err_res = std::sqrt(h * err_res);

    const SemigroupOracle oracle(op);
    oracle.apply(t0, f, got);
    double err_sg = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      err_sg += std::norm(got[i] - exact_sg[i]);
    err_sg = std::sqrt(h * err_sg);

    out.resolvent_table.rows.push_back({static_cast<double>(n + 1), err_res});
    out.semigroup_table.rows.push_back({static_cast<double>(n + 1), err_sg});
  }
  return out;
}

}  // namespace sgl
