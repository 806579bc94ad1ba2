#include "covkit/linsolve.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <bit>
#include <cstdint>

#include "covkit/error.hpp"

namespace covkit {

namespace {

constexpr std::size_t kMaxColumns = 20;

double max_residual(const Eigen::MatrixXd& a, const Eigen::VectorXd& x, const Eigen::VectorXd& b) {
  return a.rows() == 0 ? 0.0 : (a * x - b).cwiseAbs().maxCoeff();
}

}  // namespace

FeasibilityResult nonnegative_solve(const ComplexMatrix& m, const ComplexMatrix& b, Tolerance tol) {
  if (b.rows() != m.rows() || b.cols() != 1) throw DimensionError("right-hand side shape mismatch");
  const std::size_t n = m.cols();
  if (n > kMaxColumns) throw InvalidArgument("nonnegative_solve enumerates subsets; too many columns");

  const Eigen::Index rows = static_cast<Eigen::Index>(2 * m.rows());
  Eigen::MatrixXd a(rows, n);
  Eigen::VectorXd rhs(rows);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a(2 * i, j) = m(i, j).real();
      a(2 * i + 1, j) = m(i, j).imag();
    }
    rhs(2 * i) = b(i, 0).real();
    rhs(2 * i + 1) = b(i, 0).imag();
  }
  const double accept = tol.eps * std::max(1.0, rhs.cwiseAbs().maxCoeff());

  FeasibilityResult out;
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> full(a);
  full.setThreshold(tol.eps);
  out.solution_dimension = n - static_cast<std::size_t>(full.rank());
  out.residual = max_residual(a, full.solve(rhs), rhs);

  if (rows == 0 || rhs.cwiseAbs().maxCoeff() <= accept) {
    out.feasible = true;
    out.residual = rows == 0 ? 0.0 : rhs.cwiseAbs().maxCoeff();
    out.witness.assign(n, 0.0);
    return out;
  }

  std::vector<std::uint32_t> subsets;
  for (std::uint32_t s = 1; s < (1u << n); ++s) subsets.push_back(s);
  std::stable_sort(subsets.begin(), subsets.end(),
                   [](std::uint32_t x, std::uint32_t y) { return std::popcount(x) < std::popcount(y); });

  for (std::uint32_t s : subsets) {
    std::vector<Eigen::Index> cols;
    for (std::size_t j = 0; j < n; ++j)
      if (s & (1u << j)) cols.push_back(static_cast<Eigen::Index>(j));
    Eigen::MatrixXd sub(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) sub.col(c) = a.col(cols[c]);
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> dec(sub);
    dec.setThreshold(tol.eps);
    if (static_cast<std::size_t>(dec.rank()) < cols.size()) continue;  // not a vertex candidate
    const Eigen::VectorXd x = dec.solve(rhs);
    if (x.minCoeff() < -tol.eps) continue;
    const double res = max_residual(sub, x, rhs);
    if (res > accept) continue;
    out.feasible = true;
    out.residual = res;
    out.witness.assign(n, 0.0);
    for (std::size_t c = 0; c < cols.size(); ++c) out.witness[cols[c]] = std::max(0.0, x(c));
    return out;
  }
  return out;
}

}  // namespace covkit
