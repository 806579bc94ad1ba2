#include "covkit/rng.hpp"

#include <cmath>
#include <numbers>

namespace covkit {

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::uniform_open() { return 1.0 - uniform(); }

double Rng::normal() {
  if (have_spare_) {
    have_spare_ = false;
    return spare_;
  }
  const double r = std::sqrt(-2.0 * std::log(uniform_open()));
  const double t = 2.0 * std::numbers::pi * uniform();
  spare_ = r * std::sin(t);
  have_spare_ = true;
  return r * std::cos(t);
}

Complex Rng::complex_normal() {
  const double re = normal();
  const double im = normal();
  return {re, im};
}

std::size_t Rng::below(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)); }

std::vector<double> Rng::dirichlet(std::size_t n) {
  std::vector<double> w(n);
  double total = 0.0;
  for (auto& x : w) {
    x = -std::log(uniform_open());
    total += x;
  }
  for (auto& x : w) x /= total;
  return w;
}

ComplexMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  ComplexMatrix m(rows, cols);
  for (auto& z : m.entries()) z = rng.complex_normal();
  return m;
}

ComplexMatrix random_hermitian(Rng& rng, std::size_t n) {
  const ComplexMatrix a = random_matrix(rng, n, n);
  return 0.5 * (a + a.adjoint());
}

ComplexMatrix random_unitary(Rng& rng, std::size_t n) {
  // Gram-Schmidt on the columns of a Ginibre matrix.
  ComplexMatrix a = random_matrix(rng, n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t p = 0; p < j; ++p) {
        Complex dot = 0.0;
        for (std::size_t i = 0; i < n; ++i) dot += std::conj(a(i, p)) * a(i, j);
        for (std::size_t i = 0; i < n; ++i) a(i, j) -= dot * a(i, p);
      }
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) norm += std::norm(a(i, j));
    norm = std::sqrt(norm);
    for (std::size_t i = 0; i < n; ++i) a(i, j) /= norm;
  }
  return a;
}

}  // namespace covkit
