#pragma once

#include <cstddef>
#include <functional>

#include "covkit/matlin.hpp"

// Hot loops. The covkit::kernels versions are OpenMP-parallel; covkit::serial
// holds straight-line reference versions used by the parity tests and the
// benchmark. Parallel reductions use a fixed chunking that does not depend on
// the thread count, so results are reproducible across OMP_NUM_THREADS.

namespace covkit {

using TermFn = std::function<ComplexMatrix(std::size_t)>;

namespace kernels {

inline constexpr std::size_t kReductionChunks = 64;

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
// q == nullptr means the plain trace
ComplexMatrix trace_second(const ComplexMatrix& m, std::size_t dA, std::size_t dB, const ComplexMatrix* q);
ComplexMatrix trace_first(const ComplexMatrix& m, std::size_t dA, std::size_t dB, const ComplexMatrix* q);
// sum_{k<n} term(k), every term rows x cols
ComplexMatrix ordered_sum(std::size_t n, std::size_t rows, std::size_t cols, const TermFn& term);

}  // namespace kernels

namespace serial {

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix trace_second(const ComplexMatrix& m, std::size_t dA, std::size_t dB, const ComplexMatrix* q);
ComplexMatrix trace_first(const ComplexMatrix& m, std::size_t dA, std::size_t dB, const ComplexMatrix* q);
ComplexMatrix ordered_sum(std::size_t n, std::size_t rows, std::size_t cols, const TermFn& term);

}  // namespace serial

}  // namespace covkit
