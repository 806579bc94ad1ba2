#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "covkit/matlin.hpp"

namespace covkit {

// Seeded generator whose outputs are identical on every platform: only the
// raw mt19937_64 stream is used, never the implementation-defined std
// distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // uniform on [0, 1)
  double uniform();
  // uniform on (0, 1]
  double uniform_open();
  double normal();
  Complex complex_normal();
  std::size_t below(std::size_t n);
  // Dirichlet(1, ..., 1)
  std::vector<double> dirichlet(std::size_t n);

 private:
  std::mt19937_64 engine_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

ComplexMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols);
ComplexMatrix random_hermitian(Rng& rng, std::size_t n);
ComplexMatrix random_unitary(Rng& rng, std::size_t n);

}  // namespace covkit
