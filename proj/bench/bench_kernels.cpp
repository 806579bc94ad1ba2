#include <benchmark/benchmark.h>

#include <vector>

#include "covkit/kernels.hpp"
#include "covkit/rng.hpp"

using namespace covkit;

namespace {

ComplexMatrix positive_diagonal(std::size_t n) {
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) d[i] = 0.5 + static_cast<double>(i) / static_cast<double>(n);
  return ComplexMatrix::diagonal(std::span<const double>(d));
}

template <ComplexMatrix (*F)(const ComplexMatrix&, const ComplexMatrix&)>
void bm_matmul(benchmark::State& state) {
  Rng rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(rng, n, n), b = random_matrix(rng, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(F(a, b));
}

template <ComplexMatrix (*F)(const ComplexMatrix&, const ComplexMatrix&)>
void bm_kron(benchmark::State& state) {
  Rng rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_matrix(rng, n, n), b = random_matrix(rng, n, n);
  for (auto _ : state) benchmark::DoNotOptimize(F(a, b));
}

using TraceFn = ComplexMatrix (*)(const ComplexMatrix&, std::size_t, std::size_t, const ComplexMatrix*);

// range(0): leg dimension, range(1): 1 for a Q-weighted trace
template <TraceFn F>
void bm_trace(benchmark::State& state) {
  Rng rng(3);
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto m = random_matrix(rng, d * d, d * d);
  const auto q = positive_diagonal(d);
  const ComplexMatrix* qp = state.range(1) ? &q : nullptr;
  for (auto _ : state) benchmark::DoNotOptimize(F(m, d, d, qp));
}

using SumFn = ComplexMatrix (*)(std::size_t, std::size_t, std::size_t, const TermFn&);

// group-average shape: n terms u_k X u_k^dagger
template <SumFn F>
void bm_ordered_sum(benchmark::State& state) {
  Rng rng(4);
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::size_t d = 9;
  std::vector<ComplexMatrix> us;
  for (std::size_t k = 0; k < 16; ++k) us.push_back(random_unitary(rng, d));
  const auto x = random_matrix(rng, d, d);
  const TermFn term = [&](std::size_t k) {
    const auto& u = us[k % us.size()];
    return serial::matmul(serial::matmul(u, x), u.adjoint());
  };
  for (auto _ : state) benchmark::DoNotOptimize(F(n, d, d, term));
}

}  // namespace

BENCHMARK(bm_matmul<serial::matmul>)->Name("matmul/serial")->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(bm_matmul<kernels::matmul>)->Name("matmul/omp")->RangeMultiplier(2)->Range(32, 256);
BENCHMARK(bm_kron<serial::kron>)->Name("kron/serial")->RangeMultiplier(2)->Range(4, 32);
BENCHMARK(bm_kron<kernels::kron>)->Name("kron/omp")->RangeMultiplier(2)->Range(4, 32);
BENCHMARK(bm_trace<serial::trace_second>)->Name("trace_second/serial")->ArgsProduct({{8, 16, 32}, {0, 1}});
BENCHMARK(bm_trace<kernels::trace_second>)->Name("trace_second/omp")->ArgsProduct({{8, 16, 32}, {0, 1}});
BENCHMARK(bm_trace<serial::trace_first>)->Name("trace_first/serial")->ArgsProduct({{8, 16, 32}, {0, 1}});
BENCHMARK(bm_trace<kernels::trace_first>)->Name("trace_first/omp")->ArgsProduct({{8, 16, 32}, {0, 1}});
BENCHMARK(bm_ordered_sum<serial::ordered_sum>)->Name("ordered_sum/serial")->Arg(24)->Arg(120)->Arg(720);
BENCHMARK(bm_ordered_sum<kernels::ordered_sum>)->Name("ordered_sum/omp")->Arg(24)->Arg(120)->Arg(720);

BENCHMARK_MAIN();
