// Timing comparison of the OpenMP kernels against their serial references.
#include <chrono>
#include <cstdio>

#include "sgl/contour.hpp"
#include "sgl/eigs.hpp"
#include "sgl/operator_handle.hpp"
#include "sgl/parallel.hpp"
#include "sgl/resolvent.hpp"
#include "sgl/semigroup.hpp"

using namespace sgl;

namespace {

template <typename F>
double time_ms(F&& fn, int repeats) {
  const auto start = std::chrono::high_resolution_clock::now();
  for (int r = 0; r < repeats; ++r) fn();
  const auto stop = std::chrono::high_resolution_clock::now();
  return std::chrono::duration<double, std::milli>(stop - start).count() /
         repeats;
}

Matrix random_dense(std::size_t n, unsigned seed) {
  return op_random_bounded(n, seed, 2.0).densified();
}

}  // namespace

int main() {
  std::printf("workers: %d (cap via SEMIGROUP_LAB_THREADS)\n\n", worker_count());
  std::printf("%-28s %10s %10s %8s\n", "kernel", "serial ms", "omp ms", "speedup");

  {
    const Matrix a = random_dense(384, 1);
    const Matrix b = random_dense(384, 2);
    const double ts = time_ms([&] { multiply_serial(a, b); }, 3);
    const double tp = time_ms([&] { multiply(a, b); }, 3);
    std::printf("%-28s %10.2f %10.2f %7.2fx\n", "matmul n=384", ts, tp, ts / tp);
  }
  {
    const OperatorHandle op = op_random_dissipative(192, 3);
    auto lu = shifted_factorization(op, cplx{2.0, 1.0});
    const Matrix rhs = Matrix::identity(192);
    const double tp = time_ms([&] { lu->solve_matrix(rhs); }, 3);
    // column loop without the parallel_for dispatch
    const double ts = time_ms(
        [&] {
          std::vector<cplx> col(192), sol(192);
          for (std::size_t j = 0; j < 192; ++j) {
            for (std::size_t i = 0; i < 192; ++i) col[i] = rhs(i, j);
            lu->solve(col, sol);
          }
        },
        3);
    std::printf("%-28s %10.2f %10.2f %7.2fx\n", "resolvent columns n=192", ts,
                tp, ts / tp);
  }
  {
    const OperatorHandle op = op_random_dissipative(48, 4);
    ContourSpec contour;
    contour.radius = 1.3 * operator_norm(op).value;
    contour.nodes = 128;
    const double tp = time_ms([&] { dunford_exp(op, 1.0, contour); }, 3);
    std::printf("%-28s %10s %10.2f %8s\n", "dunford n=48 N=128", "-", tp, "-");
  }
  {
    const OperatorHandle op = op_random_dissipative(32, 5);
    const std::vector<double> t_grid{0.25, 0.5, 1.0};
    const std::vector<std::size_t> n_seq{8, 16, 32, 64, 128};
    const double tp =
        time_ms([&] { converge_table("euler", op, t_grid, n_seq); }, 2);
    std::printf("%-28s %10s %10.2f %8s\n", "converge euler n=32", "-", tp, "-");
  }
  return 0;
}
