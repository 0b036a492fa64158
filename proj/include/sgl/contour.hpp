#pragma once
#include "sgl/operator_handle.hpp"
#include "sgl/reports.hpp"

namespace sgl {

// A parameterized integration path with its node budget.
struct ContourSpec {
  enum class Shape { circle, vertical_line, sector_boundary };
  Shape shape = Shape::circle;
  double radius = 1.0;   // circle
  double a = 0.5;        // vertical line abscissa
  double y_cut = 100.0;  // vertical line truncation
  std::size_t nodes = 64;

  // "circle:r=3,n=64" or "line:a=0.5,Y=200,n=2000"
  static ContourSpec parse(const std::string& text);
  std::string to_string() const;
};

// Trapezoid sum of (1/2 pi i) Int e^{lambda t} R(lambda;A) dlambda over the
// circle |lambda| = r; requires r >= 1.05 ||A|| and an even node count.
Matrix dunford_exp(const OperatorHandle& a, double t, const ContourSpec& contour);

// Gauss-Legendre panels on [a - iY, a + iY]. The first Laurent terms of the
// resolvent are split off and integrated in closed form, the quadrature sees
// only the O(1/z^3) remainder.
Matrix bromwich_exp(const OperatorHandle& a, double t, double line_a, double y,
                    std::size_t nodes);

struct BromwichAutoResult {
  Matrix value;
  double a = 0.0;
  double y = 0.0;
  std::size_t nodes = 0;
  double tail_estimate = 0.0;  // ||result(Y) - result(2Y)||
};

// Self-validated truncation: Y from the tail model, then confirmed by
// agreement between the Y and 2Y runs.
BromwichAutoResult bromwich_exp_auto(const OperatorHandle& a, double t,
                                     double tol);

// (1/2 pi i) Int e^{zt} R(z;A) x dz / z over the truncated line; a > 0.
std::vector<cplx> bromwich_time_integral(const OperatorHandle& a,
                                         std::span<const cplx> x, double t,
                                         double line_a, double y,
                                         std::size_t nodes);

// B_lambda(t) x = Int_0^t e^{lambda (t-s)} T(s) x ds by Gauss-Legendre with
// the oracle under the integral. The defining identity
// (lambda I - A) B = e^{lambda t} I - T(t) and the commutation with T(t)
// are verified in the embedded report.
struct BLambdaOperator {
  cplx lambda;
  double t = 0.0;
  Matrix action;
  CheckReport report;
};

BLambdaOperator b_lambda(const OperatorHandle& a, cplx lambda, double t,
                         std::size_t quad_points);

}  // namespace sgl
