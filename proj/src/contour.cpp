#include "sgl/contour.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "sgl/eigs.hpp"
#include "sgl/lu.hpp"
#include "sgl/operator_core.hpp"
#include "sgl/parallel.hpp"
#include "sgl/quadrature.hpp"
#include "sgl/resolvent.hpp"
#include "sgl/semigroup.hpp"

namespace sgl {

namespace {

constexpr double kPi = std::numbers::pi;

Matrix matrix_power(const Matrix& a, std::size_t p) {
  Matrix out = Matrix::identity(a.rows());
  for (std::size_t k = 0; k < p; ++k) out = multiply(out, a);
  return out;
}

// panels small enough that each sees <= a quarter period of e^{i eta t}
// and resolves the resolvent's variation near the spectrum
std::size_t panel_count(double y, double t, double gap) {
  double width = gap > 0.0 ? 0.5 * gap : 1.0;
  if (t > 0.0) width = std::min(width, kPi / (4.0 * t));
  width = std::min(width, 2.0 * y);
  const double p = std::ceil(2.0 * y / width);
  return static_cast<std::size_t>(std::min(p, 40000.0));
}

struct LineIntegrand {
  const OperatorHandle* op;
  Matrix subtracted;  // A^m
  std::size_t m;
};

// quadrature part of the Bromwich integral with the first m Laurent terms
// of R split off: (1/2 pi) Int e^{zt} A^m R(z) / z^m d eta
Matrix bromwich_quadrature(const OperatorHandle& a, const Matrix& a_pow_m,
                           std::size_t m, double line_a, double t,
                           const MappedRule& rule) {
  std::vector<Matrix> node_terms(rule.nodes.size());
  parallel_for(rule.nodes.size(), [&](std::size_t k) {
    const cplx z{line_a, rule.nodes[k]};
    Matrix r = resolvent_matrix(a, z);
    const cplx coeff = rule.weights[k] * std::exp(z * t) /
                       (std::pow(z, static_cast<double>(m)) * (2.0 * kPi));
    node_terms[k] = multiply(a_pow_m, r) * coeff;
  });
  Matrix sum(a.dim, a.dim);
  for (const auto& term : node_terms) sum += term;
  return sum;
}

std::size_t laurent_order(double line_a) {
  const double aa = std::abs(line_a);
  if (aa >= 0.3) return 3;
  if (aa >= 0.05) return 1;
  return 0;
}

}  // namespace

ContourSpec ContourSpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  const std::string name = text.substr(0, colon);
  std::map<std::string, double> kv;
  if (colon != std::string::npos) {
    std::istringstream in(text.substr(colon + 1));
    std::string piece;
    while (std::getline(in, piece, ',')) {
      const auto eq = piece.find('=');
      if (eq == std::string::npos)
        throw std::invalid_argument("contour spec: expected key=value: " + text);
      kv[piece.substr(0, eq)] = std::stod(piece.substr(eq + 1));
    }
  }
  ContourSpec spec;
  if (name == "circle") {
    spec.shape = Shape::circle;
    if (kv.count("r")) spec.radius = kv["r"];
    if (kv.count("n")) spec.nodes = static_cast<std::size_t>(kv["n"]);
  } else if (name == "line") {
    spec.shape = Shape::vertical_line;
    if (kv.count("a")) spec.a = kv["a"];
    if (kv.count("Y")) spec.y_cut = kv["Y"];
    if (kv.count("n")) spec.nodes = static_cast<std::size_t>(kv["n"]);
  } else if (name == "sector") {
    spec.shape = Shape::sector_boundary;
  } else {
    throw std::invalid_argument("unknown contour spec: " + text);
  }
  return spec;
}

std::string ContourSpec::to_string() const {
  std::ostringstream out;
  switch (shape) {
    case Shape::circle:
      out << "circle:r=" << radius << ",n=" << nodes;
      break;
    case Shape::vertical_line:
      out << "line:a=" << a << ",Y=" << y_cut << ",n=" << nodes;
      break;
    case Shape::sector_boundary:
      out << "sector";
      break;
  }
  return out.str();
}

Matrix dunford_exp(const OperatorHandle& a, double t,
                   const ContourSpec& contour) {
  if (contour.shape != ContourSpec::Shape::circle)
    throw std::invalid_argument("dunford_exp: contour must be a circle");
  if (contour.nodes < 8 || contour.nodes % 2 != 0)
    throw std::invalid_argument("dunford_exp: nodes must be even and >= 8");
  const double norm_a = operator_norm(a).value;
  if (!(contour.radius >= 1.05 * norm_a) || contour.radius <= 0.0)
    throw std::invalid_argument(
        "dunford_exp: circle must be A-spectral (r >= 1.05 ||A||)");

  const std::size_t count = contour.nodes;
  std::vector<Matrix> node_terms(count);
  parallel_for(count, [&](std::size_t j) {
    const double theta =
        2.0 * kPi * static_cast<double>(j) / static_cast<double>(count);
    const cplx lambda = contour.radius * std::exp(cplx{0.0, theta});
    // (1/N) e^{lambda t} lambda R(lambda;A): trapezoid with dlambda = i lambda dtheta
    node_terms[j] = resolvent_matrix(a, lambda) *
                    (std::exp(lambda * t) * lambda /
                     static_cast<double>(count));
  });
  Matrix sum(a.dim, a.dim);
  for (const auto& term : node_terms) sum += term;
  return sum;
}

Matrix bromwich_exp(const OperatorHandle& a, double t, double line_a, double y,
                    std::size_t nodes) {
  if (!(t > 0.0)) throw std::invalid_argument("bromwich_exp: t must be > 0");
  const SpectrumReport spec = spectrum(a);
  if (!(line_a > spec.spectral_abscissa))
    throw std::invalid_argument(
        "bromwich_exp: abscissa a must lie right of the spectrum");

  const std::size_t m = laurent_order(line_a);
  const Matrix dense = a.densified();
  const Matrix a_pow_m = matrix_power(dense, m);

  const double gap = line_a - spec.spectral_abscissa;
  std::size_t panels = panel_count(y, t, gap);
  std::size_t per_panel = nodes / std::max<std::size_t>(panels, 1);
  per_panel = std::min<std::size_t>(std::max<std::size_t>(per_panel, 4), 32);
  const auto rule = composite_gauss_legendre(-y, y, panels, per_panel);

  Matrix result = bromwich_quadrature(a, a_pow_m, m, line_a, t, rule);
  if (line_a > 0.0) {
    // closed-form transforms of the split-off terms: t^k/k! A^k
    double factorial = 1.0;
    Matrix a_pow = Matrix::identity(a.dim);
    for (std::size_t k = 0; k < m; ++k) {
      if (k > 0) {
        factorial *= static_cast<double>(k);
        a_pow = multiply(a_pow, dense);
      }
      result += a_pow * cplx{std::pow(t, static_cast<double>(k)) / factorial, 0.0};
    }
  }
  return result;
}

BromwichAutoResult bromwich_exp_auto(const OperatorHandle& a, double t,
                                     double tol) {
  if (!(t > 0.0)) throw std::invalid_argument("bromwich_exp_auto: t must be > 0");
  const SpectrumReport spec = spectrum(a);
  BromwichAutoResult out;
  out.a = std::max(spec.spectral_abscissa + 1.0, 0.5);

  const Matrix dense = a.densified();
  const double norm_a3 = spectral_norm(matrix_power(dense, 3));
  // oscillatory tail model for the O(1/z^3) remainder integrand
  const double growth = std::exp(std::max(out.a, 0.0) * t);
  double y = std::pow(
      std::max(growth * std::max(norm_a3, 1.0) * 10.0 / (kPi * t * tol), 1.0),
      0.25);
  y = std::max({y, 2.0 * spec.spectral_radius + 10.0, 20.0});

  const double gap = out.a - spec.spectral_abscissa;
  for (int attempt = 0; attempt < 3; ++attempt) {
    const std::size_t panels1 = panel_count(y, t, gap);
    const std::size_t panels2 = panel_count(2.0 * y, t, gap);
    const std::size_t nodes1 = panels1 * 8;
    const std::size_t nodes2 = panels2 * 8;
    Matrix r1 = bromwich_exp(a, t, out.a, y, nodes1);
    Matrix r2 = bromwich_exp(a, t, out.a, 2.0 * y, nodes2);
    out.tail_estimate = spectral_norm(r2 - r1);
    out.y = 2.0 * y;
    out.nodes = nodes2;
    out.value = std::move(r2);
    if (out.tail_estimate <= 10.0 * tol) break;
    y *= 2.0;
  }
  return out;
}

std::vector<cplx> bromwich_time_integral(const OperatorHandle& a,
                                         std::span<const cplx> x, double t,
                                         double line_a, double y,
                                         std::size_t nodes) {
  if (!(t > 0.0))
    throw std::invalid_argument("bromwich_time_integral: t must be > 0");
  if (!(line_a > 0.0))
    throw std::invalid_argument(
        "bromwich_time_integral: the line must pass right of the z = 0 pole");
  const SpectrumReport spec = spectrum(a);
  if (!(line_a > spec.spectral_abscissa))
    throw std::invalid_argument(
        "bromwich_time_integral: abscissa must lie right of the spectrum");
  if (x.size() != a.dim)
    throw std::invalid_argument("bromwich_time_integral: size mismatch");

  const std::size_t m = laurent_order(line_a);
  const Matrix dense = a.densified();

  const double gap = line_a - spec.spectral_abscissa;
  std::size_t panels = panel_count(y, t, gap);
  std::size_t per_panel = nodes / std::max<std::size_t>(panels, 1);
  per_panel = std::min<std::size_t>(std::max<std::size_t>(per_panel, 4), 32);
  const auto rule = composite_gauss_legendre(-y, y, panels, per_panel);

  std::vector<std::vector<cplx>> node_terms(rule.nodes.size());
  parallel_for(rule.nodes.size(), [&](std::size_t k) {
    const cplx z{line_a, rule.nodes[k]};
    auto lu = shifted_factorization(a, z);
    std::vector<cplx> v(a.dim), w(a.dim);
    lu->solve(x, v);
    for (std::size_t p = 0; p < m; ++p) {
      matvec(dense, v, w);
      std::swap(v, w);
    }
    const cplx coeff = rule.weights[k] * std::exp(z * t) /
                       (std::pow(z, static_cast<double>(m) + 1.0) * (2.0 * kPi));
    for (auto& entry : v) entry *= coeff;
    node_terms[k] = std::move(v);
  });

  std::vector<cplx> result(a.dim, cplx{});
  for (const auto& term : node_terms)
    for (std::size_t i = 0; i < a.dim; ++i) result[i] += term[i];

  // closed forms of the split-off terms: t^{k+1}/(k+1)! A^k x
  std::vector<cplx> a_pow_x(x.begin(), x.end()), tmp(a.dim);
  double factorial = 1.0;
  for (std::size_t k = 0; k < m; ++k) {
    factorial *= static_cast<double>(k + 1);
    const double c = std::pow(t, static_cast<double>(k) + 1.0) / factorial;
    for (std::size_t i = 0; i < a.dim; ++i) result[i] += c * a_pow_x[i];
    matvec(dense, a_pow_x, tmp);
    std::swap(a_pow_x, tmp);
  }
  return result;
}

BLambdaOperator b_lambda(const OperatorHandle& a, cplx lambda, double t,
                         std::size_t quad_points) {
  if (!(t > 0.0)) throw std::invalid_argument("b_lambda: t must be > 0");
  BLambdaOperator out;
  out.lambda = lambda;
  out.t = t;
  out.report.name = "b-lambda-identity";

  const SemigroupOracle oracle(a);
  const auto rule = gauss_legendre_on(0.0, t, quad_points);
  std::vector<Matrix> node_terms(rule.nodes.size());
  parallel_for(rule.nodes.size(), [&](std::size_t k) {
    const double s = rule.nodes[k];
    node_terms[k] = oracle.at(s) * (rule.weights[k] * std::exp(lambda * (t - s)));
  });
  Matrix b(a.dim, a.dim);
  for (const auto& term : node_terms) b += term;
  out.action = b;

  // (lambda I - A) B = e^{lambda t} I - T(t)
  const Matrix dense = a.densified();
  const Matrix t_t = oracle.at(t);
  Matrix lhs = b * lambda - multiply(dense, b);
  Matrix rhs = Matrix::identity(a.dim) * std::exp(lambda * t) - t_t;
  const double scale = std::max(1.0, spectral_norm(rhs));
  out.report.require("defining_identity", spectral_norm(lhs - rhs) / scale,
                     1e-8);
  const double comm_scale =
      std::max(1.0, spectral_norm(b) * spectral_norm(t_t));
  out.report.require(
      "commutation",
      spectral_norm(multiply(b, t_t) - multiply(t_t, b)) / comm_scale, 1e-8);
  return out;
}

}  // namespace sgl
