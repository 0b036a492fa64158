#include "sgl/generator_checks.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "sgl/eigs.hpp"
#include "sgl/lu.hpp"
#include "sgl/operator_core.hpp"
#include "sgl/parallel.hpp"
#include "sgl/resolvent.hpp"
#include "sgl/semigroup.hpp"

namespace sgl {

namespace {

constexpr double kPi = std::numbers::pi;

std::vector<std::vector<cplx>> dissipativity_probes(std::size_t dim,
                                                    std::size_t count) {
  auto probes = probe_vectors(dim, count, 0x44495353);
  // canonical basis catches diagonal pathologies
  for (std::size_t j = 0; j < dim; ++j) {
    std::vector<cplx> e(dim, cplx{});
    e[j] = 1.0;
    probes.push_back(std::move(e));
  }
  return probes;
}

bool shift_nonsingular(const OperatorHandle& a, double alpha) {
  Matrix m = a.densified() * cplx{-1.0, 0.0};
  for (std::size_t i = 0; i < m.rows(); ++i) m(i, i) += alpha;
  LuFactorization lu(std::move(m));
  return !lu.singular() && lu.condition_estimate() <= kResolventConditionLimit;
}

}  // namespace

DissipativityReport check_dissipative(const OperatorHandle& a,
                                      std::size_t probes,
                                      const std::vector<double>& alpha_grid) {
  if (probes < 100)
    throw std::invalid_argument("check_dissipative: probes >= 100");
  for (double alpha : alpha_grid)
    if (!(alpha > 0.0))
      throw std::invalid_argument("check_dissipative: alpha grid must be positive");

  const auto xs = dissipativity_probes(a.dim, probes);
  DissipativityReport report;
  report.inner_product_margin = -std::numeric_limits<double>::infinity();
  report.norm_criterion_margin = std::numeric_limits<double>::infinity();

  std::vector<cplx> ax(a.dim);
  for (const auto& x : xs) {
    a.apply(x, ax);
    cplx inner{};
    for (std::size_t i = 0; i < a.dim; ++i) inner += std::conj(x[i]) * ax[i];
    report.inner_product_margin =
        std::max(report.inner_product_margin, inner.real());
    const double xn = norm2(x);
    for (double alpha : alpha_grid) {
      double shifted = 0.0;
      for (std::size_t i = 0; i < a.dim; ++i)
        shifted += std::norm(alpha * x[i] - ax[i]);
      report.norm_criterion_margin = std::min(
          report.norm_criterion_margin, std::sqrt(shifted) - alpha * xn);
    }
  }

  report.is_dissipative = report.inner_product_margin <= 1e-10;
  const bool norm_verdict = report.norm_criterion_margin >= -1e-8;
  report.criteria_agree = report.is_dissipative == norm_verdict;
  report.range_condition =
      shift_nonsingular(a, 1.0) &&
      shift_nonsingular(a, operator_norm(a).value + 1.0);
  return report;
}

CheckReport DissipativityReport::to_check_report() const {
  CheckReport report;
  report.name = "dissipative";
  report.pass = is_dissipative && range_condition && criteria_agree;
  report.info("inner_product_margin", inner_product_margin);
  report.info("norm_criterion_margin", norm_criterion_margin);
  report.info("is_dissipative", is_dissipative ? 1.0 : 0.0);
  report.info("range_condition", range_condition ? 1.0 : 0.0);
  report.require("criteria_disagreement", criteria_agree ? 0.0 : 1.0, 0.5);
  return report;
}

CheckReport check_lumer_phillips(const OperatorHandle& a,
                                 const std::vector<double>& t_grid) {
  CheckReport report;
  report.name = "lumer-phillips";

  const DissipativityReport diss = check_dissipative(a, 100, {0.5, 1.0, 2.0});
  const SemigroupOracle oracle(a);
  double max_norm = 0.0;
  std::vector<double> norms(t_grid.size());
  parallel_for(t_grid.size(), [&](std::size_t k) {
    norms[k] = spectral_norm(oracle.at(t_grid[k]));
  });
  for (double v : norms) max_norm = std::max(max_norm, v);

  report.info("inner_product_margin", diss.inner_product_margin);
  report.info("max_semigroup_norm", max_norm);

  if (diss.is_dissipative && diss.range_condition) {
    // m-dissipative => contraction semigroup
    report.require("contraction_excess", std::max(0.0, max_norm - 1.0), 1e-9);
    report.note("m-dissipative: contraction conclusion checked");
  }
  if (max_norm > 1.0 + 1e-6) {
    // expansion observed => generator must fail dissipativity
    report.require("expansion_implies_nondissipative",
                   diss.is_dissipative ? 1.0 : 0.0, 0.5);
    report.note("expansion observed: non-dissipativity confirmed");
  }
  if (!(diss.is_dissipative && diss.range_condition) && !(max_norm > 1.0 + 1e-6))
    report.note("neither direction triggered on the tested grid");
  return report;
}

CheckReport check_contraction_hy(const OperatorHandle& a,
                                 const std::vector<double>& lambda_grid,
                                 std::size_t n_max) {
  GrowthEnvelope contraction;
  contraction.M = 1.0;
  contraction.omega = 0.0;
  std::vector<cplx> shifts;
  shifts.reserve(lambda_grid.size());
  for (double l : lambda_grid) {
    if (!(l > 0.0))
      throw std::invalid_argument("check_contraction_hy: grid must be positive");
    shifts.emplace_back(l, 0.0);
  }
  CheckReport report = check_hille_yosida_bounds(a, contraction, shifts, n_max);
  report.name = "contraction-hille-yosida";
  return report;
}

namespace {

double max_abs_ratio_on_ray(const OperatorHandle& a, double angle,
                            const std::vector<double>& radii, bool* hit_spectrum) {
  double worst = 0.0;
  for (double r : radii) {
    const cplx lambda = r * std::exp(cplx{0.0, angle});
    auto lu = shifted_factorization(a, lambda);
    if (lu->singular() || lu->condition_estimate() > kResolventConditionLimit) {
      if (hit_spectrum) *hit_spectrum = true;
      continue;
    }
    worst = std::max(worst, std::abs(lambda) * spectral_norm(lu->inverse()));
  }
  return worst;
}

}  // namespace

SectorReport check_sectorial(const OperatorHandle& a,
                             const std::vector<double>& eta_grid,
                             const std::vector<double>& gamma_grid,
                             const std::vector<double>& t_grid) {
  for (double eta : eta_grid)
    if (eta == 0.0)
      throw std::invalid_argument("check_sectorial: eta grid must avoid 0");
  for (double gamma : gamma_grid)
    if (!(gamma > 0.0))
      throw std::invalid_argument("check_sectorial: gamma grid must be positive");

  {
    LuFactorization lu(a.densified());
    if (lu.singular() || lu.condition_estimate() > kResolventConditionLimit)
      throw std::invalid_argument("check_sectorial: A must be invertible");
  }

  SectorReport report;
  const SpectrumReport spec = spectrum(a);

  // resonant imaginary parts sharpen the divergence probe
  std::vector<double> etas = eta_grid;
  for (const auto& ev : spec.eigenvalues)
    if (std::abs(ev.imag()) > 1e-12) etas.push_back(std::abs(ev.imag()));

  // vertical-line constant and its growth as gamma -> 0
  std::vector<double> c_by_gamma(gamma_grid.size(), 0.0);
  parallel_for(gamma_grid.size(), [&](std::size_t gi) {
    double worst = 0.0;
    for (double eta : etas) {
      for (double sign : {1.0, -1.0}) {
        const cplx lambda{gamma_grid[gi], sign * eta};
        auto lu = shifted_factorization(a, lambda);
        if (lu->singular() ||
            lu->condition_estimate() > kResolventConditionLimit)
          continue;
        worst = std::max(worst, std::abs(eta) * spectral_norm(lu->inverse()));
      }
    }
    c_by_gamma[gi] = worst;
  });
  report.C_line = 0.0;
  for (double v : c_by_gamma) report.C_line = std::max(report.C_line, v);

  // growth ratio per decade, gammas sorted descending by value
  std::vector<std::pair<double, double>> gamma_c;
  for (std::size_t i = 0; i < gamma_grid.size(); ++i)
    gamma_c.emplace_back(gamma_grid[i], c_by_gamma[i]);
  std::sort(gamma_c.begin(), gamma_c.end(),
            [](const auto& x, const auto& y) { return x.first > y.first; });
  report.c_line_growth = 1.0;
  for (std::size_t i = 1; i < gamma_c.size(); ++i) {
    if (gamma_c[i - 1].second <= 0.0) continue;
    const double decades =
        std::log10(gamma_c[i - 1].first / gamma_c[i].first);
    if (decades <= 0.0) continue;
    const double ratio = gamma_c[i].second / gamma_c[i - 1].second;
    report.c_line_growth =
        std::max(report.c_line_growth, std::pow(ratio, 1.0 / decades));
  }

  // half-angle bisection at 0.01 rad resolution
  const double scale = std::max(spec.spectral_radius, 1e-3);
  std::vector<double> radii;
  for (int k = -12; k <= 16; ++k)
    radii.push_back(scale * std::pow(10.0, 0.25 * k));
  auto ray_clear = [&](double delta) {
    for (double sign : {1.0, -1.0}) {
      bool hit = false;
      max_abs_ratio_on_ray(a, sign * (kPi / 2.0 + delta), radii, &hit);
      if (hit) return false;
    }
    return true;
  };
  double lo = 0.0, hi = kPi / 2.0 - 0.01;
  if (!ray_clear(lo)) {
    report.delta = 0.0;
  } else {
    while (hi - lo > 0.01) {
      const double mid = 0.5 * (lo + hi);
      if (ray_clear(mid))
        lo = mid;
      else
        hi = mid;
    }
    report.delta = lo;
  }

  // K over the certified fan and over the closed half-plane fan
  auto fan_constant = [&](double delta) {
    double worst = 0.0;
    const int rays = 13;
    for (int k = -rays; k <= rays; ++k) {
      const double angle =
          (kPi / 2.0 + delta) * static_cast<double>(k) / rays;
      worst = std::max(worst,
                       max_abs_ratio_on_ray(a, angle, radii, nullptr));
    }
    return worst;
  };
  report.K_halfplane = fan_constant(0.0);
  report.K = fan_constant(report.delta);

  // derivative constant over >= 4 decades of t, maxima per decade
  const SemigroupOracle oracle(a);
  const Matrix dense = a.densified();
  std::vector<double> l_values(t_grid.size());
  parallel_for(t_grid.size(), [&](std::size_t k) {
    const double t = t_grid[k];
    l_values[k] = t * spectral_norm(multiply(dense, oracle.at(t)));
  });
  report.L = 0.0;
  for (double v : l_values) report.L = std::max(report.L, v);

  double t_min = t_grid.front(), t_max = t_grid.front();
  for (double t : t_grid) {
    t_min = std::min(t_min, t);
    t_max = std::max(t_max, t);
  }
  const int first_decade = static_cast<int>(std::floor(std::log10(t_min)));
  const int last_decade = static_cast<int>(std::ceil(std::log10(t_max)));
  for (int d = first_decade; d < last_decade; ++d) {
    double dmax = 0.0;
    bool seen = false;
    for (std::size_t k = 0; k < t_grid.size(); ++k) {
      if (t_grid[k] >= std::pow(10.0, d) && t_grid[k] < std::pow(10.0, d + 1)) {
        dmax = std::max(dmax, l_values[k]);
        seen = true;
      }
    }
    if (seen) report.l_by_decade.push_back(dmax);
  }

  report.sectorial = report.c_line_growth < 5.0 && report.delta > 0.0 &&
                     std::isfinite(report.K) && std::isfinite(report.C_line);
  return report;
}

CheckReport SectorReport::to_check_report() const {
  CheckReport report;
  report.name = "sectorial";
  report.pass = sectorial;
  report.info("delta", delta);
  report.info("K", K);
  report.info("K_halfplane", K_halfplane);
  report.info("C_line", C_line);
  report.info("L", L);
  report.info("c_line_growth_per_decade", c_line_growth);
  for (std::size_t i = 0; i < l_by_decade.size(); ++i)
    report.info("L_decade_" + std::to_string(i), l_by_decade[i]);
  if (!sectorial) report.note("flagged not-sectorial");
  return report;
}

CheckReport check_differentiable_identities(const OperatorHandle& a, double t,
                                            std::size_t n_max) {
  if (!(t > 0.0))
    throw std::invalid_argument("check_differentiable_identities: t > 0");
  if (n_max > 6)
    throw std::invalid_argument("check_differentiable_identities: n_max <= 6");
  CheckReport report;
  report.name = "differentiable-identities";

  const Matrix dense = a.densified();
  const SemigroupOracle oracle(a);
  Matrix a_pow = Matrix::identity(a.dim);
  for (std::size_t n = 1; n <= n_max; ++n) {
    a_pow = multiply(a_pow, dense);
    const Matrix lhs = multiply(a_pow, oracle.at(t));
    const Matrix factor = multiply(dense, oracle.at(t / static_cast<double>(n)));
    Matrix rhs = Matrix::identity(a.dim);
    for (std::size_t k = 0; k < n; ++k) rhs = multiply(rhs, factor);
    const double scale = std::max(1e-30, spectral_norm(lhs));
    report.require("power_identity_n" + std::to_string(n),
                   spectral_norm(lhs - rhs) / scale, 1e-9);
  }

  // finite-difference derivatives
  {
    const double h = 1e-5 * std::max(1.0, t);
    const Matrix fd =
        (oracle.at(t + h) - oracle.at(t - h)) * cplx{1.0 / (2.0 * h), 0.0};
    const Matrix exact = multiply(dense, oracle.at(t));
    const double scale = std::max(1.0, spectral_norm(exact));
    report.require("derivative_n1", spectral_norm(fd - exact) / scale, 1e-6);
  }
  if (n_max >= 2) {
    const double h = 1e-4 * std::max(1.0, t);
    Matrix fd = oracle.at(t + h) - oracle.at(t) * cplx{2.0, 0.0} +
                oracle.at(t - h);
    fd *= cplx{1.0 / (h * h), 0.0};
    const Matrix exact = multiply(multiply(dense, dense), oracle.at(t));
    const double scale = std::max(1.0, spectral_norm(exact));
    report.require("derivative_n2", spectral_norm(fd - exact) / scale, 1e-5);
  }
  return report;
}

CheckReport check_commuting_bounded(const OperatorHandle& a, const Matrix& f,
                                    const std::vector<double>& t_grid) {
  if (f.rows() != a.dim || f.cols() != a.dim)
    throw std::invalid_argument("check_commuting_bounded: dimension mismatch");
  CheckReport report;
  report.name = "commuting-bounded";

  const Matrix dense = a.densified();
  const SemigroupOracle oracle(a);
  const double gen_comm =
      spectral_norm(multiply(f, dense) - multiply(dense, f));
  const double scale =
      std::max(1.0, spectral_norm(f) * spectral_norm(dense));
  report.info("generator_commutator", gen_comm);

  double sg_comm = 0.0;
  for (double t : t_grid) {
    const Matrix e = oracle.at(t);
    sg_comm = std::max(sg_comm,
                       spectral_norm(multiply(f, e) - multiply(e, f)) /
                           std::max(1.0, spectral_norm(f) * spectral_norm(e)));
  }
  report.info("semigroup_commutator", sg_comm);

  if (gen_comm <= 1e-12 * scale) {
    report.require("commuting_direction", sg_comm, 1e-9);
  } else {
    // FA != AF must show up in the semigroup for some t
    report.require("noncommuting_direction_witness",
                   sg_comm >= 1e-3 ? 0.0 : 1.0, 0.5);
  }

  // deliberately non-commuting control
  bool control_found = false;
  std::vector<Matrix> candidates;
  if (a.dim >= 2) {
    Matrix e12(a.dim, a.dim), e21(a.dim, a.dim), d(a.dim, a.dim);
    e12(0, 1) = 1.0;
    e21(1, 0) = 1.0;
    for (std::size_t i = 0; i < a.dim; ++i)
      d(i, i) = static_cast<double>(i + 1);
    candidates = {f + e12, f + e21, f + d};
  }
  for (const auto& control : candidates) {
    if (spectral_norm(multiply(control, dense) - multiply(dense, control)) <
        1e-6 * scale)
      continue;
    control_found = true;
    double worst = 0.0;
    for (double t : t_grid) {
      const Matrix e = oracle.at(t);
      worst = std::max(
          worst, spectral_norm(multiply(control, e) - multiply(e, control)));
    }
    report.require("control_commutator_witness", worst >= 1e-3 ? 0.0 : 1.0,
                   0.5);
    break;
  }
  if (!control_found)
    report.note("no non-commuting control exists (operator is scalar)");
  return report;
}

}  // namespace sgl
