#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace covkit {

using Complex = std::complex<double>;

// Dense complex matrix, row-major.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zeros(std::size_t rows, std::size_t cols);
  // e_ij of shape rows x cols
  static ComplexMatrix unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j);
  static ComplexMatrix diagonal(std::span<const double> d);
  static ComplexMatrix diagonal(std::span<const Complex> d);
  static ComplexMatrix column(std::span<const Complex> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Complex> entries() { return data_; }
  std::span<const Complex> entries() const { return data_; }

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  Complex trace() const;

  ComplexMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& b);
  ComplexMatrix col(std::size_t j) const;

  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& operator-=(const ComplexMatrix& o);
  ComplexMatrix& operator*=(Complex s);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexMatrix operator*(ComplexMatrix a, Complex s);

double max_abs(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_norm(const ComplexMatrix& a);
double spectral_norm(const ComplexMatrix& a);
// Hilbert-Schmidt inner product Tr(a^dagger b)
Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b);
double hermitian_defect(const ComplexMatrix& a);

struct Tolerance {
  double eps = 1e-9;

  Tolerance() = default;
  explicit Tolerance(double e);
};

enum class Side { first, second };

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dA, std::size_t dB, Side side);
// Trace over the designated leg after multiplying by Q on that leg.
ComplexMatrix weighted_partial_trace(const ComplexMatrix& m, std::size_t dA, std::size_t dB,
                                     const ComplexMatrix& q, Side side);

// Conjugation by the swap of an (dA x dB) tensor: returns S M S^dagger on B (x) A.
ComplexMatrix swap_legs(const ComplexMatrix& m, std::size_t dA, std::size_t dB);

// Orthonormal basis of the approximate kernel, threshold tol * largest singular value.
std::vector<ComplexMatrix> null_space(const ComplexMatrix& a, Tolerance tol = {});

struct EigenDecomposition {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // columns
};

EigenDecomposition eig_hermitian(const ComplexMatrix& h, Tolerance tol = {});
bool is_psd(const ComplexMatrix& h, Tolerance tol = {});

// Matrix whose columns are the given vectors.
ComplexMatrix hstack(std::span<const ComplexMatrix> columns);

// Row-major vec of an r x c matrix, and its inverse.
ComplexMatrix vec(const ComplexMatrix& x);
ComplexMatrix unvec(const ComplexMatrix& v, std::size_t rows, std::size_t cols);

struct GeneratorPair {
  ComplexMatrix source;  // action on the domain
  ComplexMatrix target;  // action on the codomain
};

// Orthonormal (Hilbert-Schmidt) basis of {X : target_g X = X source_g for all pairs}.
std::vector<ComplexMatrix> intertwiner_space(std::span<const GeneratorPair> pairs, Tolerance tol = {});

// Multiply so that the first entry (row-major) within 1e-9 of the largest magnitude is real positive.
ComplexMatrix fix_phase(const ComplexMatrix& m);

}  // namespace covkit
