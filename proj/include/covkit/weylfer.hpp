#pragma once

#include <string>
#include <vector>

#include "covkit/chan.hpp"
#include "covkit/matlin.hpp"

namespace covkit {

// Z_{d1} x ... x Z_{dk}; elements indexed in mixed radix, first factor most significant.
class AbelianGroup {
 public:
  explicit AbelianGroup(std::vector<int> orders);

  const std::vector<int>& orders() const { return orders_; }
  std::size_t order() const { return order_; }
  std::vector<int> coords(std::size_t index) const;
  std::size_t index(const std::vector<int>& coords) const;
  std::size_t add(std::size_t a, std::size_t b) const;
  std::size_t negate(std::size_t a) const;

 private:
  std::vector<int> orders_;
  std::size_t order_ = 1;
};

enum class CocycleKind { weyl, fermionic };

// A nondegenerate 2-cocycle system: W(x)W(y) = sigma(x,y) W(x+y) on C^hilbert_dim.
class CocycleSystem {
 public:
  CocycleKind kind() const { return kind_; }
  // G: F x F-hat for Weyl (x-major), Z_2^{2n} for fermionic
  const AbelianGroup& group() const { return group_; }
  std::size_t size() const { return group_.order(); }
  std::size_t hilbert_dim() const { return dim_; }
  const ComplexMatrix& W(std::size_t x) const { return ops_[x]; }
  Complex sigma(std::size_t x, std::size_t y) const;
  // unit vectors of G
  const std::vector<std::size_t>& generators() const { return generators_; }
  std::string label(std::size_t x) const;

  friend CocycleSystem weyl_system(const std::vector<int>& orders);
  friend CocycleSystem fermionic_system(int modes);

 private:
  CocycleSystem(CocycleKind kind, AbelianGroup g, std::size_t dim);

  CocycleKind kind_;
  AbelianGroup group_;
  std::size_t dim_;
  std::vector<ComplexMatrix> ops_;
  std::vector<std::size_t> generators_;
  std::size_t half_ = 0;  // number of coordinates of the x part (Weyl)
};

CocycleSystem weyl_system(const std::vector<int>& orders);
CocycleSystem fermionic_system(int modes);
// c_1 .. c_2n as Jordan-Wigner Pauli strings
std::vector<ComplexMatrix> majorana_operators(int modes);

struct BellBasis {
  std::vector<ComplexMatrix> vectors;                // f_x, columns of length dim^2
  std::vector<std::vector<Complex>> characters;      // phi_x(y) on the generators y
};

BellBasis bell_basis(const CocycleSystem& sys, Tolerance tol = {});
// phi_x(y) = conj(sigma(x,y)) sigma(y,x)
Complex character(const CocycleSystem& sys, std::size_t x, std::size_t y);

Channel unitary_conj_channel(const CocycleSystem& sys, std::size_t x);
Channel mixture(const CocycleSystem& sys, const std::vector<double>& p, Tolerance tol = {});

struct Recovery {
  bool covariant = false;
  bool distribution = false;
  std::vector<double> p;
  double residual = 0.0;
};
Recovery recover_distribution(const Channel& ch, const CocycleSystem& sys, Tolerance tol = {});

double projective_covariance_residual(const Channel& ch, const CocycleSystem& sys);

}  // namespace covkit
