#pragma once
#include "sgl/operator_handle.hpp"
#include "sgl/reports.hpp"

namespace sgl {

// A sequence of generators with its limit, indexed by the value the limit
// is taken in (the table's n column).
struct GeneratorSequence {
  std::vector<OperatorHandle> items;
  OperatorHandle limit;
  std::vector<std::string> labels;
  std::vector<double> indices;
};

// A_n = A + n^{-p} B over the given n values.
GeneratorSequence perturbation_family(const OperatorHandle& a,
                                      const OperatorHandle& b, int p,
                                      const std::vector<std::size_t>& n_values);

// A_lambda = yosida(A, lambda) along lambda = 2^k, k in [k_min, k_max].
GeneratorSequence yosida_family(const OperatorHandle& a, int k_min, int k_max);

// A_n = A + N with a fixed nilpotent of norm 1: resolvents converge nowhere.
GeneratorSequence stagnant_family(const OperatorHandle& a, std::size_t count);

// rows (n, max over probes of ||R(lambda;A_n)x - R(lambda;A)x|| / ||x||)
ConvergenceTable resolvent_convergence_table(const GeneratorSequence& seq,
                                             cplx lambda, std::size_t probes);

// rows (n, max over a t-grid of [0,t0] and probes of ||e^{tA_n}x - e^{tA}x||)
ConvergenceTable semigroup_convergence_table(const GeneratorSequence& seq,
                                             double t0,
                                             std::size_t t_grid_size,
                                             std::size_t probes);

struct TkEquivalenceResult {
  ConvergenceTable resolvent_table;
  ConvergenceTable semigroup_table;
  CheckReport report;
  bool no_convergence = false;
};

// Desk-scale rendering of the resolvent/semigroup convergence equivalence:
// errors within a factor 100 of each other at every n, empirical orders
// within 0.3. Stagnating families pass vacuously with a flag.
TkEquivalenceResult check_tk_equivalence(const GeneratorSequence& seq,
                                         cplx lambda, double t0);

// R(l;B)[T(t)-S(t)]R(l;A)x = Int_0^t S(t-s)[R(l;A)-R(l;B)]T(s)x ds
CheckReport bridge_identity_check(const OperatorHandle& a,
                                  const OperatorHandle& b, cplx lambda,
                                  double t, std::size_t quad_points);

// Dirichlet Laplacian refinement across grid levels, compared on probe
// functions sampled to each grid in the grid-scaled norm sqrt(h) ||.||.
struct RefinementTables {
  ConvergenceTable resolvent_table;
  ConvergenceTable semigroup_table;
};
RefinementTables laplacian_refinement_tables(std::size_t levels, cplx lambda,
                                             double t0);

}  // namespace sgl
