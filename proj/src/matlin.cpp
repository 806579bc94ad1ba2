#include "covkit/matlin.hpp"

#include <algorithm>
#include <cmath>

#include "covkit/error.hpp"
#include "covkit/kernels.hpp"
#include "eigen_bridge.hpp"

namespace covkit {

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex(0.0)) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) throw DimensionError("entry count does not match rows x cols");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::zeros(std::size_t rows, std::size_t cols) { return ComplexMatrix(rows, cols); }

ComplexMatrix ComplexMatrix::unit(std::size_t rows, std::size_t cols, std::size_t i, std::size_t j) {
  ComplexMatrix m(rows, cols);
  m(i, j) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> d) {
  ComplexMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

ComplexMatrix ComplexMatrix::column(std::span<const Complex> v) {
  return ComplexMatrix(v.size(), 1, std::vector<Complex>(v.begin(), v.end()));
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix out = *this;
  for (auto& z : out.data_) z = std::conj(z);
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix ComplexMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("block out of range");
  ComplexMatrix out(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
  return out;
}

void ComplexMatrix::set_block(std::size_t r0, std::size_t c0, const ComplexMatrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw DimensionError("block out of range");
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

ComplexMatrix ComplexMatrix::col(std::size_t j) const { return block(0, j, rows_, 1); }

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("shape mismatch in +");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("shape mismatch in -");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex s) {
  for (auto& z : data_) z *= s;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator-(ComplexMatrix a) { return a *= -1.0; }
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("shape mismatch in matrix product");
  return kernels::matmul(a, b);
}

double max_abs(const ComplexMatrix& a) {
  double m = 0.0;
  for (const auto& z : a.entries()) m = std::max(m, std::abs(z));
  return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("shape mismatch in max_abs_diff");
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) m = std::max(m, std::abs(a.entries()[k] - b.entries()[k]));
  return m;
}

double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& z : a.entries()) s += std::norm(z);
  return std::sqrt(s);
}

double spectral_norm(const ComplexMatrix& a) {
  if (a.empty()) return 0.0;
  Eigen::BDCSVD<detail::EMatrix> svd(detail::to_eigen(a));
  return svd.singularValues()(0);
}

Complex hs_inner(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("shape mismatch in hs_inner");
  Complex s = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) s += std::conj(a.entries()[k]) * b.entries()[k];
  return s;
}

double hermitian_defect(const ComplexMatrix& a) {
  if (!a.square()) return INFINITY;
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j) - std::conj(a(j, i))));
  return m;
}

Tolerance::Tolerance(double e) : eps(e) {
  if (!(e > 0.0) || !std::isfinite(e)) throw InvalidArgument("tolerance must be positive and finite");
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) { return kernels::kron(a, b); }

namespace {

void check_bipartite(const ComplexMatrix& m, std::size_t dA, std::size_t dB) {
  if (!m.square() || m.rows() != dA * dB) throw DimensionError("matrix is not (dA*dB) square");
}

}  // namespace

ComplexMatrix partial_trace(const ComplexMatrix& m, std::size_t dA, std::size_t dB, Side side) {
  check_bipartite(m, dA, dB);
  return side == Side::second ? kernels::trace_second(m, dA, dB, nullptr) : kernels::trace_first(m, dA, dB, nullptr);
}

ComplexMatrix weighted_partial_trace(const ComplexMatrix& m, std::size_t dA, std::size_t dB, const ComplexMatrix& q,
                                     Side side) {
  check_bipartite(m, dA, dB);
  const std::size_t traced = side == Side::second ? dB : dA;
  if (!q.square()) throw DimensionError("weight matrix is not square");
  if (q.rows() != traced) throw DimensionError("weight matrix does not match the traced leg");
  return side == Side::second ? kernels::trace_second(m, dA, dB, &q) : kernels::trace_first(m, dA, dB, &q);
}

ComplexMatrix swap_legs(const ComplexMatrix& m, std::size_t dA, std::size_t dB) {
  check_bipartite(m, dA, dB);
  ComplexMatrix out(dA * dB, dA * dB);
  for (std::size_t i = 0; i < dA; ++i)
    for (std::size_t k = 0; k < dB; ++k)
      for (std::size_t j = 0; j < dA; ++j)
        for (std::size_t l = 0; l < dB; ++l) out(k * dA + i, l * dA + j) = m(i * dB + k, j * dB + l);
  return out;
}

std::vector<ComplexMatrix> null_space(const ComplexMatrix& a, Tolerance tol) {
  const std::size_t n = a.cols();
  std::vector<ComplexMatrix> basis;
  if (n == 0) return basis;
  if (a.rows() == 0 || max_abs(a) == 0.0) {
    for (std::size_t j = 0; j < n; ++j) basis.push_back(ComplexMatrix::unit(n, 1, j, 0));
    return basis;
  }
  Eigen::BDCSVD<detail::EMatrix> svd(detail::to_eigen(a), Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  const double cutoff = tol.eps * s(0);
  std::size_t rank = 0;
  while (rank < static_cast<std::size_t>(s.size()) && s(rank) > cutoff) ++rank;
  const auto& v = svd.matrixV();
  for (std::size_t j = rank; j < n; ++j) basis.push_back(detail::from_eigen(v.col(j)));
  return basis;
}

EigenDecomposition eig_hermitian(const ComplexMatrix& h, Tolerance tol) {
  if (!h.square()) throw NotHermitian("matrix is not square");
  if (hermitian_defect(h) > tol.eps * std::max(1.0, max_abs(h)))
    throw NotHermitian("matrix is not Hermitian within tolerance");
  EigenDecomposition out;
  if (h.empty()) return out;
  detail::EMatrix e = detail::to_eigen(h);
  e = (0.5 * (e + e.adjoint())).eval();
  Eigen::SelfAdjointEigenSolver<detail::EMatrix> solver(e);
  const auto& vals = solver.eigenvalues();
  out.values.assign(vals.data(), vals.data() + vals.size());
  out.vectors = detail::from_eigen(solver.eigenvectors());
  return out;
}

bool is_psd(const ComplexMatrix& h, Tolerance tol) {
  const auto d = eig_hermitian(h, tol);
  return d.values.empty() || d.values.front() >= -tol.eps;
}

ComplexMatrix hstack(std::span<const ComplexMatrix> columns) {
  if (columns.empty()) return {};
  const std::size_t n = columns.front().rows();
  std::size_t total = 0;
  for (const auto& c : columns) {
    if (c.rows() != n) throw DimensionError("hstack row mismatch");
    total += c.cols();
  }
  ComplexMatrix out(n, total);
  std::size_t at = 0;
  for (const auto& c : columns) {
    out.set_block(0, at, c);
    at += c.cols();
  }
  return out;
}

ComplexMatrix vec(const ComplexMatrix& x) {
  return ComplexMatrix(x.size(), 1, std::vector<Complex>(x.entries().begin(), x.entries().end()));
}

ComplexMatrix unvec(const ComplexMatrix& v, std::size_t rows, std::size_t cols) {
  if (v.size() != rows * cols) throw DimensionError("unvec size mismatch");
  return ComplexMatrix(rows, cols, std::vector<Complex>(v.entries().begin(), v.entries().end()));
}

namespace {

bool is_diagonal(const ComplexMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && m(i, j) != Complex(0.0)) return false;
  return true;
}

}  // namespace

std::vector<ComplexMatrix> intertwiner_space(std::span<const GeneratorPair> pairs, Tolerance tol) {
  if (pairs.empty()) throw InvalidArgument("intertwiner_space needs at least one generator pair");
  const std::size_t ds = pairs.front().source.rows();
  const std::size_t dt = pairs.front().target.rows();
  for (const auto& p : pairs) {
    if (!p.source.square() || !p.target.square() || p.source.rows() != ds || p.target.rows() != dt)
      throw DimensionError("generator pair shapes disagree");
  }

  // Diagonal generators (weight operators) force X[r,c] = 0 unless the weights agree.
  std::vector<char> free(dt * ds, 1);
  for (const auto& p : pairs) {
    if (!is_diagonal(p.source) || !is_diagonal(p.target)) continue;
    for (std::size_t r = 0; r < dt; ++r)
      for (std::size_t c = 0; c < ds; ++c) {
        const Complex b = p.target(r, r), a = p.source(c, c);
        const double scale = std::max({1.0, std::abs(a), std::abs(b)});
        if (std::abs(b - a) > 1e-10 * scale) free[r * ds + c] = 0;
      }
  }
  std::vector<std::size_t> column_of(dt * ds, 0), unknowns;
  for (std::size_t u = 0; u < dt * ds; ++u)
    if (free[u]) {
      column_of[u] = unknowns.size();
      unknowns.push_back(u);
    }
  std::vector<ComplexMatrix> out;
  if (unknowns.empty()) return out;

  // Row (g, r, c): sum_m B[r,m] X[m,c] - sum_m X[r,m] A[m,c] = 0.
  std::vector<Complex> rows_data;
  std::size_t n_rows = 0;
  std::vector<Complex> row(unknowns.size());
  for (const auto& p : pairs) {
    const double noise = 1e-13 * (max_abs(p.target) + max_abs(p.source));
    for (std::size_t r = 0; r < dt; ++r)
      for (std::size_t c = 0; c < ds; ++c) {
        std::fill(row.begin(), row.end(), Complex(0.0));
        bool touched = false;
        for (std::size_t m = 0; m < dt; ++m) {
          const Complex b = p.target(r, m);
          if (b != Complex(0.0) && free[m * ds + c]) {
            row[column_of[m * ds + c]] += b;
            touched = true;
          }
        }
        for (std::size_t m = 0; m < ds; ++m) {
          const Complex a = p.source(m, c);
          if (a != Complex(0.0) && free[r * ds + m]) {
            row[column_of[r * ds + m]] -= a;
            touched = true;
          }
        }
        if (!touched) continue;
        // Unit-norm rows: same kernel, better-balanced singular values when
        // generators mix very different scales (q-deformed weights). Rows that
        // are only cancellation noise are dropped rather than blown up.
        double norm = 0.0;
        for (const auto& z : row) norm += std::norm(z);
        norm = std::sqrt(norm);
        if (norm <= noise) continue;
        for (auto& z : row) z /= norm;
        rows_data.insert(rows_data.end(), row.begin(), row.end());
        ++n_rows;
      }
  }
  const ComplexMatrix system(n_rows, unknowns.size(), std::move(rows_data));
  for (const auto& v : null_space(system, tol)) {
    ComplexMatrix x(dt, ds);
    for (std::size_t u = 0; u < unknowns.size(); ++u) x.entries()[unknowns[u]] = v(u, 0);
    out.push_back(std::move(x));
  }
  return out;
}

ComplexMatrix fix_phase(const ComplexMatrix& m) {
  const double top = max_abs(m);
  if (top == 0.0) return m;
  for (const auto& z : m.entries()) {
    if (std::abs(z) >= top - 1e-9) return std::conj(z) / std::abs(z) * m;
  }
  return m;
}

}  // namespace covkit
