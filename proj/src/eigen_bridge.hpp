#pragma once

#include <Eigen/Dense>

#include "covkit/matlin.hpp"

namespace covkit::detail {

using EMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline EMatrix to_eigen(const ComplexMatrix& m) {
  EMatrix e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return e;
}

template <typename Derived>
ComplexMatrix from_eigen(const Eigen::MatrixBase<Derived>& e) {
  ComplexMatrix m(e.rows(), e.cols());
  for (Eigen::Index i = 0; i < e.rows(); ++i)
    for (Eigen::Index j = 0; j < e.cols(); ++j) m(i, j) = e(i, j);
  return m;
}

}  // namespace covkit::detail
