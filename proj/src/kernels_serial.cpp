#include "covkit/kernels.hpp"

namespace covkit::serial {

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Complex acc = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * b(k, j);
      c(i, j) = acc;
    }
  return c;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

ComplexMatrix trace_second(const ComplexMatrix& m, std::size_t dA, std::size_t dB, const ComplexMatrix* q) {
  ComplexMatrix out(dA, dA);
  for (std::size_t i = 0; i < dA; ++i)
    for (std::size_t j = 0; j < dA; ++j)
      for (std::size_t k = 0; k < dB; ++k) {
        if (q == nullptr) {
          out(i, j) += m(i * dB + k, j * dB + k);
          continue;
        }
        for (std::size_t l = 0; l < dB; ++l) out(i, j) += (*q)(k, l) * m(i * dB + l, j * dB + k);
      }
  return out;
}

ComplexMatrix trace_first(const ComplexMatrix& m, std::size_t dA, std::size_t dB, const ComplexMatrix* q) {
  ComplexMatrix out(dB, dB);
  for (std::size_t a = 0; a < dB; ++a)
    for (std::size_t b = 0; b < dB; ++b)
      for (std::size_t k = 0; k < dA; ++k) {
        if (q == nullptr) {
          out(a, b) += m(k * dB + a, k * dB + b);
          continue;
        }
        for (std::size_t l = 0; l < dA; ++l) out(a, b) += (*q)(k, l) * m(l * dB + a, k * dB + b);
      }
  return out;
}

ComplexMatrix ordered_sum(std::size_t n, std::size_t rows, std::size_t cols, const TermFn& term) {
  ComplexMatrix total(rows, cols);
  for (std::size_t k = 0; k < n; ++k) total += term(k);
  return total;
}

}  // namespace covkit::serial
