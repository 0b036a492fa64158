#include <doctest.h>

#include "sgl/eigs.hpp"
#include "sgl/lu.hpp"
#include "sgl/matrix.hpp"
#include "sgl/operator_handle.hpp"
#include "sgl/quadrature.hpp"

using namespace sgl;

TEST_CASE("parallel multiply matches the serial reference bitwise") {
  const Matrix a = op_random_bounded(64, 1, 3.0).densified();
  const Matrix b = op_random_bounded(64, 2, 2.0).densified();
  const Matrix p = multiply(a, b);
  const Matrix s = multiply_serial(a, b);
  for (std::size_t i = 0; i < 64; ++i)
    for (std::size_t j = 0; j < 64; ++j) CHECK(p(i, j) == s(i, j));
}

TEST_CASE("lu solve and adjoint solve invert the shifted matrix") {
  const Matrix a = op_random_bounded(12, 3, 2.0).densified();
  Matrix m = Matrix::identity(12) * cplx{2.5, 0.7} - a;
  LuFactorization lu(m);
  REQUIRE(!lu.singular());

  const auto probes = probe_vectors(12, 3, 99);
  std::vector<cplx> x(12), back(12);
  for (const auto& b : probes) {
    lu.solve(b, x);
    matvec(m, x, back);
    for (std::size_t i = 0; i < 12; ++i) back[i] -= b[i];
    CHECK(norm2(back) < 1e-11 * norm2(b));

    lu.solve_adjoint(b, x);
    const Matrix mh = m.adjoint();
    matvec(mh, x, back);
    for (std::size_t i = 0; i < 12; ++i) back[i] -= b[i];
    CHECK(norm2(back) < 1e-11 * norm2(b));
  }
}

TEST_CASE("lu condition estimate tracks the true condition number") {
  Matrix d(3, 3);
  d(0, 0) = 1.0;
  d(1, 1) = 1e-3;
  d(2, 2) = 1e-6;
  LuFactorization lu(d);
  CHECK(lu.condition_estimate() >= 1e5);
  CHECK(lu.condition_estimate() <= 1e7);

  LuFactorization singular(Matrix::zero(3));
  CHECK(singular.singular());
}

TEST_CASE("gauss-legendre integrates polynomials exactly") {
  // degree 2q-1 exactness
  const auto rule = gauss_legendre_on(0.0, 2.0, 6);
  double integral = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    const double x = rule.nodes[k];
    integral += rule.weights[k] * (x * x * x * x * x * x * x * x * x * x * x);
  }
  CHECK(integral == doctest::Approx(4096.0 / 12.0 * 1.0).epsilon(1e-13));
  // composite rule covers the interval
  const auto comp = composite_gauss_legendre(0.0, 1.0, 7, 4);
  double total = 0.0;
  for (double w : comp.weights) total += w;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("spectral norm and eigenvalues agree with hand values") {
  Matrix m(2, 2);
  m(0, 0) = 3.0;
  m(1, 1) = -4.0;
  CHECK(spectral_norm(m) == doctest::Approx(4.0));
  const auto eig = eigenvalues(m);
  CHECK(eig[0].real() == doctest::Approx(-4.0));
  CHECK(eig[1].real() == doctest::Approx(3.0));
}
