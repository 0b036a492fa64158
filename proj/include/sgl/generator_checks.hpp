#pragma once
#include "sgl/operator_handle.hpp"
#include "sgl/reports.hpp"

namespace sgl {

// Dissipativity under the Euclidean inner product, where the duality set
// J(x) is {x}: the inner-product criterion Re<Ax,x> <= 0 and the norm
// criterion ||(alpha I - A)x|| >= alpha ||x|| are evaluated side by side.
struct DissipativityReport {
  double inner_product_margin = 0.0;  // max over probes of Re<Ax,x>
  double norm_criterion_margin = 0.0; // min of ||(aI-A)x|| - a||x||
  bool is_dissipative = false;
  bool range_condition = false;       // (alpha0 I - A) surjective
  bool criteria_agree = true;

  CheckReport to_check_report() const;
};

DissipativityReport check_dissipative(const OperatorHandle& a,
                                      std::size_t probes,
                                      const std::vector<double>& alpha_grid);

// Both directions of Lumer-Phillips at desk scale: m-dissipative implies
// contraction on the grid; observed expansion implies non-dissipative.
CheckReport check_lumer_phillips(const OperatorHandle& a,
                                 const std::vector<double>& t_grid);

// The M = 1, omega = 0 instance of the Hille-Yosida power bounds.
CheckReport check_contraction_hy(const OperatorHandle& a,
                                 const std::vector<double>& lambda_grid,
                                 std::size_t n_max);

struct SectorReport {
  double delta = 0.0;        // certified half-angle margin, resolution 0.01 rad
  double K = 0.0;            // max |lambda| ||R|| over the certified fan
  double K_halfplane = 0.0;  // same constant on the closed right half-plane
  double C_line = 0.0;       // max |eta| ||R(gamma + i eta)||
  double L = 0.0;            // max t ||A e^{tA}||
  bool sectorial = false;
  double c_line_growth = 0.0;     // worst C growth ratio per gamma decade
  std::vector<double> l_by_decade;  // per-decade maxima of t ||A e^{tA}||

  CheckReport to_check_report() const;
};

// Requires 0 in rho(A). eta/gamma grids probe the vertical-line bound;
// the half-angle comes from a bisection that stops when a ray meets the
// spectrum (condition estimate above 1e12).
SectorReport check_sectorial(const OperatorHandle& a,
                             const std::vector<double>& eta_grid,
                             const std::vector<double>& gamma_grid,
                             const std::vector<double>& t_grid);

// A^n e^{tA} = (A e^{(t/n)A})^n for n <= n_max, plus the finite-difference
// derivative identities at n = 1, 2.
CheckReport check_differentiable_identities(const OperatorHandle& a, double t,
                                            std::size_t n_max);

// FA = AF implies F T(t) = T(t) F on the grid, with a deliberately
// non-commuting control exercised alongside.
CheckReport check_commuting_bounded(const OperatorHandle& a, const Matrix& f,
                                    const std::vector<double>& t_grid);

}  // namespace sgl
