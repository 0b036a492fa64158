#include "sgl/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace sgl {

namespace {

GaussLegendreRule build_rule(std::size_t q) {
  GaussLegendreRule rule;
  rule.nodes.resize(q);
  rule.weights.resize(q);
  // Newton on P_q with Chebyshev-like initial guesses; symmetric pairs.
  for (std::size_t i = 0; i < (q + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(q) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= q; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = q * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = -x;
    rule.weights[i] = w;
    rule.nodes[q - 1 - i] = x;
    rule.weights[q - 1 - i] = w;
  }
  if (q % 2 == 1) rule.nodes[q / 2] = 0.0;
  return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(std::size_t q) {
  if (q == 0) throw std::invalid_argument("gauss_legendre: q must be positive");
  static std::map<std::size_t, GaussLegendreRule> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, build_rule(q)).first;
  return it->second;
}

MappedRule gauss_legendre_on(double a, double b, std::size_t q) {
  const auto& rule = gauss_legendre(q);
  MappedRule out;
  out.nodes.resize(q);
  out.weights.resize(q);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  for (std::size_t i = 0; i < q; ++i) {
    out.nodes[i] = mid + half * rule.nodes[i];
    out.weights[i] = half * rule.weights[i];
  }
  return out;
}

MappedRule composite_gauss_legendre(double a, double b, std::size_t panels,
                                    std::size_t q) {
  if (panels == 0) throw std::invalid_argument("composite rule: panels == 0");
  MappedRule out;
  out.nodes.reserve(panels * q);
  out.weights.reserve(panels * q);
  const double width = (b - a) / static_cast<double>(panels);
  for (std::size_t p = 0; p < panels; ++p) {
    const double lo = a + width * static_cast<double>(p);
    const auto panel = gauss_legendre_on(lo, lo + width, q);
    out.nodes.insert(out.nodes.end(), panel.nodes.begin(), panel.nodes.end());
    out.weights.insert(out.weights.end(), panel.weights.begin(),
                       panel.weights.end());
  }
  return out;
}

}  // namespace sgl
