#include "sgl/spectral_maps.hpp"

#include <cmath>
#include <stdexcept>

#include "sgl/eigs.hpp"
#include "sgl/operator_core.hpp"
#include "sgl/resolvent.hpp"
#include "sgl/semigroup.hpp"

namespace sgl {

MultisetMatch spectral_mapping_check(const OperatorHandle& a, double t) {
  const SpectrumReport spec = spectrum(a);
  std::vector<cplx> mapped(spec.eigenvalues.size());
  for (std::size_t i = 0; i < mapped.size(); ++i)
    mapped[i] = std::exp(spec.eigenvalues[i] * t);
  const std::vector<cplx> actual = eigenvalues(expm_oracle(a, t));
  return match_multisets(std::move(mapped), actual, 1e-7);
}

MultisetMatch derivative_spectral_mapping_check(const OperatorHandle& a,
                                                double t, std::size_t n) {
  if (!(t > 0.0))
    throw std::invalid_argument("derivative_spectral_mapping_check: t > 0");
  if (n < 1 || n > 4)
    throw std::invalid_argument("derivative_spectral_mapping_check: 1 <= n <= 4");
  const SpectrumReport spec = spectrum(a);
  std::vector<cplx> mapped(spec.eigenvalues.size());
  for (std::size_t i = 0; i < mapped.size(); ++i)
    mapped[i] = std::pow(spec.eigenvalues[i], static_cast<double>(n)) *
                std::exp(spec.eigenvalues[i] * t);

  // T^{(n)}(t) realized as A^n e^{tA}
  const Matrix dense = a.densified();
  Matrix derivative = expm_oracle(a, t);
  for (std::size_t k = 0; k < n; ++k) derivative = multiply(dense, derivative);
  const std::vector<cplx> actual = eigenvalues(derivative);
  MultisetMatch match = match_multisets(std::move(mapped), actual, 1e-7);
  if (match.unmatched > 0)
    match.note = "right side carries extra elements (degenerate numerics)";
  return match;
}

MultisetMatch resolvent_spectrum_check(const OperatorHandle& a, cplx lambda) {
  const SpectrumReport spec = spectrum(a);
  for (const auto& zeta : spec.eigenvalues)
    if (std::abs(lambda - zeta) < 1e-12)
      throw std::invalid_argument("resolvent_spectrum_check: lambda in sigma(A)");
  std::vector<cplx> mapped(spec.eigenvalues.size());
  for (std::size_t i = 0; i < mapped.size(); ++i)
    mapped[i] = 1.0 / (lambda - spec.eigenvalues[i]);
  const std::vector<cplx> actual = eigenvalues(resolvent_matrix(a, lambda));
  MultisetMatch match = match_multisets(std::move(mapped), actual, 1e-8);
  match.note =
      "the {0} element of the unbounded-generator statement is excluded: "
      "0 is never in sigma(R) in finite dimension";
  return match;
}

}  // namespace sgl
