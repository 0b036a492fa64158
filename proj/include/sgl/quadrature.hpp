#pragma once
#include <cstddef>
#include <vector>

namespace sgl {

struct GaussLegendreRule {
  std::vector<double> nodes;    // on [-1, 1]
  std::vector<double> weights;
};

// Nodes and weights of the q-point Gauss-Legendre rule, cached per q.
const GaussLegendreRule& gauss_legendre(std::size_t q);

// Rule mapped to [a, b].
struct MappedRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
MappedRule gauss_legendre_on(double a, double b, std::size_t q);

// Composite rule: [a, b] split into `panels` equal panels, q points each.
MappedRule composite_gauss_legendre(double a, double b, std::size_t panels,
                                    std::size_t q);

}  // namespace sgl
