#include "sgl/operator_core.hpp"

#include <cmath>
#include <stdexcept>

#include "sgl/eigs.hpp"
#include "sgl/parallel.hpp"
#include "sgl/semigroup.hpp"

namespace sgl {

SpectrumReport spectrum(const OperatorHandle& a) {
  if (a.dim > 2048)
    throw std::invalid_argument("spectrum: dim > 2048 not supported");
  SpectrumReport report;
  report.eigenvalues = eigenvalues(a.densified());
  for (const auto& ev : report.eigenvalues) {
    report.spectral_radius = std::max(report.spectral_radius, std::abs(ev));
    report.spectral_abscissa = std::max(report.spectral_abscissa, ev.real());
  }
  if (report.eigenvalues.empty())
    throw std::runtime_error("spectrum: eigensolver returned nothing");
  // max over an empty init of -inf would be wrong for abscissa
  report.spectral_abscissa = report.eigenvalues.front().real();
  for (const auto& ev : report.eigenvalues)
    report.spectral_abscissa = std::max(report.spectral_abscissa, ev.real());
  return report;
}

NormResult operator_norm(const OperatorHandle& a) {
  if (a.kind == OperatorKind::dense || !a.apply_adjoint_fn) {
    NormResult r;
    r.value = spectral_norm(a.densified());
    return r;
  }
  // power iteration on A*A, deterministic start
  const std::size_t n = a.dim;
  auto probes = probe_vectors(n, 1, 0x4E4F524D);
  std::vector<cplx> v = probes.front(), w(n), u(n);
  double sigma = 0.0;
  for (int iter = 1; iter <= 10000; ++iter) {
    a.apply(v, w);
    a.apply_adjoint_fn(w, u);
    const double unorm = norm2(u);
    if (unorm == 0.0) return {0.0, true, iter};
    const double next = std::sqrt(norm2(w));
    for (std::size_t i = 0; i < n; ++i) v[i] = u[i] / unorm;
    if (iter > 1 && std::abs(next - sigma) <= 1e-8 * next)
      return {next, true, iter};
    sigma = next;
  }
  throw std::runtime_error(
      "operator_norm: power iteration did not converge in 10000 iterations");
}

GrowthEnvelope estimate_growth_envelope(const OperatorHandle& a, double t_max,
                                        std::size_t grid_size) {
  if (!(t_max > 0.0))
    throw std::invalid_argument("estimate_growth_envelope: t_max must be > 0");
  if (grid_size < 8)
    throw std::invalid_argument("estimate_growth_envelope: grid_size >= 8");

  const SpectrumReport spec = spectrum(a);
  GrowthEnvelope env;
  env.omega = std::max(0.0, spec.spectral_abscissa + 1e-6);

  SemigroupOracle oracle(a);
  env.sample_grid.resize(grid_size);
  parallel_for(grid_size, [&](std::size_t k) {
    const double t =
        t_max * static_cast<double>(k) / static_cast<double>(grid_size - 1);
    env.sample_grid[k] = {t, spectral_norm(oracle.at(t))};
  });

  double m = 1.0;
  for (const auto& [t, norm] : env.sample_grid)
    m = std::max(m, norm * std::exp(-env.omega * t));
  env.M = m;
  return env;
}

}  // namespace sgl
