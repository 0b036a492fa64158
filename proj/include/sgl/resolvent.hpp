#pragma once
#include <memory>

#include "sgl/lu.hpp"
#include "sgl/operator_core.hpp"
#include "sgl/operator_handle.hpp"
#include "sgl/reports.hpp"

namespace sgl {

// One shift of R(lambda;A). Membership in rho(A) is decided by a condition
// estimate (threshold 1e12), never by exact singularity; a singular shift is
// reported through in_resolvent_set = false, not an exception.
struct ResolventSample {
  cplx lambda;
  bool in_resolvent_set = false;
  double norm_estimate = 0.0;
  double condition_estimate = 0.0;
  std::function<void(std::span<const cplx>, std::span<cplx>)> action;
};

inline constexpr double kResolventConditionLimit = 1e12;

ResolventSample resolvent(const OperatorHandle& a, cplx lambda);

// Dense image of R(lambda;A): one LU factorization, column solves in
// parallel. Throws when the shift is outside rho(A) at working precision.
Matrix resolvent_matrix(const OperatorHandle& a, cplx lambda);

// Shared factorization of (lambda I - A) for repeated products.
std::shared_ptr<const LuFactorization> shifted_factorization(
    const OperatorHandle& a, cplx lambda);

CheckReport check_resolvent_identity(const OperatorHandle& a, cplx lambda,
                                     cplx mu);

// Partial sums of sum A^k / lambda^{k+1}; requires |lambda| >= 1.01 ||A||.
struct NeumannResolvent {
  Matrix matrix;
  std::size_t terms = 0;
  ResolventSample sample;
};
NeumannResolvent neumann_resolvent(const OperatorHandle& a, cplx lambda,
                                   double tol);

struct PseudoResolventFamily {
  std::vector<cplx> lambdas;
  std::vector<Matrix> samples;
};

// Builds the family from true resolvents of A over the given shifts.
PseudoResolventFamily pseudo_resolvent_from(const OperatorHandle& a,
                                            const std::vector<cplx>& lambdas);

// (a) pairwise pseudo-resolvent identity, (b) commutation, (c) constant
// numerical rank, (d) when injective: generator reconstruction
// A = lambda I - R_lambda^{-1} from two shifts, with their disagreement.
CheckReport check_pseudo_resolvent(const PseudoResolventFamily& family);

// ||R(lambda;A)^n|| <= M / (Re lambda - omega)^n over a shift grid,
// n = 1..n_max (n_max <= 12; dense powers by repeated multiplication).
CheckReport check_hille_yosida_bounds(const OperatorHandle& a,
                                      const GrowthEnvelope& env,
                                      const std::vector<cplx>& lambda_grid,
                                      std::size_t n_max);

}  // namespace sgl
