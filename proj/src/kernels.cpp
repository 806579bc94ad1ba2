#include "covkit/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <vector>

namespace covkit::kernels {

namespace {

using Index = std::ptrdiff_t;

// Side-specific index helpers for the traced entry M[(row block), (col block)].
inline Complex traced_entry_second(const ComplexMatrix& m, std::size_t dB, const ComplexMatrix* q,
                                   std::size_t i, std::size_t j) {
  Complex acc = 0.0;
  if (q == nullptr) {
    for (std::size_t k = 0; k < dB; ++k) acc += m(i * dB + k, j * dB + k);
    return acc;
  }
  for (std::size_t k = 0; k < dB; ++k)
    for (std::size_t l = 0; l < dB; ++l) acc += (*q)(k, l) * m(i * dB + l, j * dB + k);
  return acc;
}

inline Complex traced_entry_first(const ComplexMatrix& m, std::size_t dA, std::size_t dB,
                                  const ComplexMatrix* q, std::size_t a, std::size_t b) {
  Complex acc = 0.0;
  if (q == nullptr) {
    for (std::size_t k = 0; k < dA; ++k) acc += m(k * dB + a, k * dB + b);
    return acc;
  }
  for (std::size_t k = 0; k < dA; ++k)
    for (std::size_t l = 0; l < dA; ++l) acc += (*q)(k, l) * m(l * dB + a, k * dB + b);
  return acc;
}

}  // namespace

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t n = a.rows(), m = b.cols(), inner = a.cols();
  ComplexMatrix c(n, m);
#pragma omp parallel for schedule(static) if (n * m * inner > 32768)
  for (Index i = 0; i < static_cast<Index>(n); ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex(0.0)) continue;
      for (std::size_t j = 0; j < m; ++j) c(i, j) += aik * b(k, j);
    }
  }
  return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  const std::size_t rB = b.rows(), cB = b.cols();
  ComplexMatrix out(a.rows() * rB, a.cols() * cB);
#pragma omp parallel for schedule(static) if (out.size() > 16384)
  for (Index i = 0; i < static_cast<Index>(a.rows()); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < rB; ++k)
        for (std::size_t l = 0; l < cB; ++l) out(i * rB + k, j * cB + l) = aij * b(k, l);
    }
  return out;
}

ComplexMatrix trace_second(const ComplexMatrix& m, std::size_t dA, std::size_t dB, const ComplexMatrix* q) {
  ComplexMatrix out(dA, dA);
#pragma omp parallel for schedule(static) if (m.size() > 16384)
  for (Index i = 0; i < static_cast<Index>(dA); ++i)
    for (std::size_t j = 0; j < dA; ++j) out(i, j) = traced_entry_second(m, dB, q, i, j);
  return out;
}

ComplexMatrix trace_first(const ComplexMatrix& m, std::size_t dA, std::size_t dB, const ComplexMatrix* q) {
  ComplexMatrix out(dB, dB);
#pragma omp parallel for schedule(static) if (m.size() > 16384)
  for (Index a = 0; a < static_cast<Index>(dB); ++a)
    for (std::size_t b = 0; b < dB; ++b) out(a, b) = traced_entry_first(m, dA, dB, q, a, b);
  return out;
}

ComplexMatrix ordered_sum(std::size_t n, std::size_t rows, std::size_t cols, const TermFn& term) {
  const std::size_t chunks = std::min(n, kReductionChunks);
  std::vector<ComplexMatrix> partial(chunks, ComplexMatrix(rows, cols));
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
  for (Index c = 0; c < static_cast<Index>(chunks); ++c) {
    const std::size_t lo = n * c / chunks, hi = n * (c + 1) / chunks;
    try {
      for (std::size_t k = lo; k < hi; ++k) partial[c] += term(k);
    } catch (...) {
#pragma omp critical(covkit_ordered_sum)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  ComplexMatrix total(rows, cols);
  for (const auto& p : partial) total += p;
  return total;
}

}  // namespace covkit::kernels
