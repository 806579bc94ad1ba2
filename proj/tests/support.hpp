#pragma once

#include <cmath>

#include "covkit/chan.hpp"
#include "covkit/matlin.hpp"
#include "covkit/rng.hpp"

namespace covkit::testing {

// Brute-force index-sum oracles, written independently of the kernels.

inline ComplexMatrix kron_oracle(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

// Tr over one leg of ((I (x) Q) M) or ((Q (x) I) M); q empty means the identity.
inline ComplexMatrix partial_trace_oracle(const ComplexMatrix& m, std::size_t dA, std::size_t dB, bool second,
                                          const ComplexMatrix& q = {}) {
  const std::size_t keep = second ? dA : dB, gone = second ? dB : dA;
  auto weight = [&](std::size_t r, std::size_t c) -> Complex { return q.empty() ? (r == c ? 1.0 : 0.0) : q(r, c); };
  ComplexMatrix out(keep, keep);
  for (std::size_t i = 0; i < keep; ++i)
    for (std::size_t j = 0; j < keep; ++j) {
      Complex s = 0.0;
      for (std::size_t k = 0; k < gone; ++k)
        for (std::size_t l = 0; l < gone; ++l) {
          const Complex w = weight(k, l);
          if (w == 0.0) continue;
          // sum_k (W M)[(.,k),(.,k)] = sum_{k,l} W[k,l] M[(.,l),(.,k)]
          s += second ? w * m(i * dB + l, j * dB + k) : w * m(l * dB + i, k * dB + j);
        }
      out(i, j) = s;
    }
  return out;
}

inline ComplexMatrix matmul_oracle(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      for (std::size_t k = 0; k < a.cols(); ++k) out(i, j) += a(i, k) * b(k, j);
  return out;
}

// Phi(X) = sum_r s_r K_r X K_r^dagger evaluated directly, never through a Choi matrix.
struct KrausMap {
  std::vector<ComplexMatrix> ops;
  std::vector<double> signs;

  ComplexMatrix operator()(const ComplexMatrix& x) const {
    ComplexMatrix out(ops.front().rows(), ops.front().rows());
    for (std::size_t r = 0; r < ops.size(); ++r) out += signs[r] * (ops[r] * x * ops[r].adjoint());
    return out;
  }
};

inline KrausMap random_kraus(Rng& rng, std::size_t din, std::size_t dout, std::size_t rank) {
  KrausMap k;
  for (std::size_t r = 0; r < rank; ++r) {
    k.ops.push_back(random_matrix(rng, dout, din));
    k.signs.push_back(1.0);
  }
  return k;
}

// Random CPTP map: Kraus operators rescaled by S^{-1/2} with S = sum K^dagger K.
inline Channel random_cptp(Rng& rng, std::size_t din, std::size_t dout, std::size_t rank) {
  auto k = random_kraus(rng, din, dout, rank);
  ComplexMatrix s(din, din);
  for (const auto& op : k.ops) s += op.adjoint() * op;
  const auto e = eig_hermitian(s);
  ComplexMatrix inv_sqrt(din, din);
  for (std::size_t i = 0; i < din; ++i) inv_sqrt(i, i) = 1.0 / std::sqrt(e.values[i]);
  const ComplexMatrix t = e.vectors * inv_sqrt * e.vectors.adjoint();
  for (auto& op : k.ops) op = op * t;
  return choi_from_action(k, din, dout);
}

inline double max_abs_vec(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

}  // namespace covkit::testing
