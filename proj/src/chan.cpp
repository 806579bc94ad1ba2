#include "covkit/chan.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "covkit/error.hpp"

namespace covkit {

namespace {

// Sanity threshold for "is this a projection family"; a precondition check, not a reported residual.
constexpr double kFamilyTol = 1e-6;

}  // namespace

Channel::Channel(std::size_t in, std::size_t out, ComplexMatrix c) : in_dim(in), out_dim(out), choi(std::move(c)) {
  if (in == 0 || out == 0) throw DimensionError("channel dimensions must be positive");
  if (!choi.square() || choi.rows() != in * out) throw DimensionError("Choi matrix must be (in*out) square");
}

ComplexMatrix Channel::block(std::size_t i, std::size_t j) const {
  return choi.block(i * out_dim, j * out_dim, out_dim, out_dim);
}

Channel choi_from_action(const Action& action, std::size_t in_dim, std::size_t out_dim) {
  ComplexMatrix c(in_dim * out_dim, in_dim * out_dim);
  for (std::size_t i = 0; i < in_dim; ++i)
    for (std::size_t j = 0; j < in_dim; ++j) {
      const ComplexMatrix y = action(ComplexMatrix::unit(in_dim, in_dim, i, j));
      if (y.rows() != out_dim || y.cols() != out_dim) throw DimensionError("action output has the wrong shape");
      c.set_block(i * out_dim, j * out_dim, y);
    }
  return Channel(in_dim, out_dim, std::move(c));
}

ComplexMatrix apply(const Channel& ch, const ComplexMatrix& x) {
  if (x.rows() != ch.in_dim || x.cols() != ch.in_dim) throw DimensionError("input does not match channel in_dim");
  const std::size_t d = ch.out_dim;
  ComplexMatrix y(d, d);
  for (std::size_t i = 0; i < ch.in_dim; ++i)
    for (std::size_t j = 0; j < ch.in_dim; ++j) {
      const Complex xij = x(i, j);
      if (xij == Complex(0.0)) continue;
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) y(a, b) += xij * ch.choi(i * d + a, j * d + b);
    }
  return y;
}

Channel identity_channel(std::size_t d) {
  return choi_from_action([](const ComplexMatrix& x) { return x; }, d, d);
}

Channel transpose_channel(std::size_t d) {
  return choi_from_action([](const ComplexMatrix& x) { return x.transpose(); }, d, d);
}

Channel scaled(const Channel& ch, Complex s) { return Channel(ch.in_dim, ch.out_dim, s * ch.choi); }

ChannelFlags classify(const Channel& ch, Tolerance tol) {
  ChannelFlags f;
  if (hermitian_defect(ch.choi) <= tol.eps * std::max(1.0, max_abs(ch.choi))) {
    const auto eig = eig_hermitian(ch.choi, tol);
    f.min_choi_eigenvalue = eig.values.front();
    f.cp = f.min_choi_eigenvalue >= -tol.eps;
  } else {
    f.min_choi_eigenvalue = std::numeric_limits<double>::quiet_NaN();
  }
  f.tp_residual = max_abs_diff(partial_trace(ch.choi, ch.in_dim, ch.out_dim, Side::second),
                               ComplexMatrix::identity(ch.in_dim));
  f.tp = f.tp_residual <= tol.eps;
  const ComplexMatrix image = apply(ch, ComplexMatrix::identity(ch.in_dim));
  f.unital_residual = max_abs_diff(image, ComplexMatrix::identity(ch.out_dim));
  f.unital = f.unital_residual <= tol.eps;
  return f;
}

QWeight::QWeight(std::vector<double> diagonal, Tolerance tol) : diag_(std::move(diagonal)) {
  if (diag_.empty()) throw DimensionError("empty Q weight");
  double inv = 0.0;
  for (double x : diag_) {
    if (!(x > 0.0) || !std::isfinite(x)) throw InvalidArgument("Q weight entries must be positive");
    qdim_ += x;
    inv += 1.0 / x;
  }
  if (std::abs(qdim_ - inv) > tol.eps * std::max(1.0, qdim_))
    throw InvalidArgument("Q weight must satisfy Tr Q = Tr Q^-1");
}

QWeight QWeight::identity(std::size_t n) { return QWeight(std::vector<double>(n, 1.0)); }

ComplexMatrix QWeight::matrix() const { return ComplexMatrix::diagonal(std::span<const double>(diag_)); }

ComplexMatrix QWeight::power(double p) const {
  std::vector<double> d(diag_.size());
  std::transform(diag_.begin(), diag_.end(), d.begin(), [p](double x) { return std::pow(x, p); });
  return ComplexMatrix::diagonal(std::span<const double>(d));
}

double qtp_residual(const Channel& ch, const QWeight& qin, const QWeight& qout) {
  if (qin.dim() != ch.in_dim || qout.dim() != ch.out_dim) throw DimensionError("Q weights do not match channel");
  // Tr(Qout Phi(e_ij)) must equal Tr(Qin e_ij) = Qin[j,i].
  const ComplexMatrix qo = qout.matrix();
  double worst = 0.0;
  for (std::size_t i = 0; i < ch.in_dim; ++i)
    for (std::size_t j = 0; j < ch.in_dim; ++j) {
      const Complex lhs = (qo * ch.block(i, j)).trace();
      const Complex rhs = i == j ? Complex(qin.diagonal()[i]) : Complex(0.0);
      worst = std::max(worst, std::abs(lhs - rhs));
    }
  return worst;
}

bool is_qtp(const Channel& ch, const QWeight& qin, const QWeight& qout, Tolerance tol) {
  return qtp_residual(ch, qin, qout) <= tol.eps;
}

Isometry::Isometry(ComplexMatrix m, std::string source, std::vector<std::string> targets, Tolerance tol)
    : matrix(std::move(m)), source_label(std::move(source)), target_labels(std::move(targets)) {
  if (matrix.rows() < matrix.cols()) throw NotIsometry("isometry must be tall");
  const double defect = max_abs_diff(matrix.adjoint() * matrix, ComplexMatrix::identity(matrix.cols()));
  if (defect > std::max(tol.eps, 1e-9)) throw NotIsometry("v^dagger v differs from identity");
}

Channel cg_map(const Isometry& v, const QWeight& q_gamma, std::size_t d_beta, std::size_t d_gamma) {
  if (v.matrix.rows() != d_beta * d_gamma) throw DimensionError("isometry range is not d_beta * d_gamma");
  if (q_gamma.dim() != d_gamma) throw DimensionError("Q weight does not match the gamma leg");
  const ComplexMatrix& w = v.matrix;
  const ComplexMatrix wd = w.adjoint();
  const ComplexMatrix q = q_gamma.matrix();
  return choi_from_action(
      [&](const ComplexMatrix& a) { return weighted_partial_trace(w * a * wd, d_beta, d_gamma, q, Side::second); },
      w.cols(), d_beta);
}

Channel adjoint_star(const Channel& ch) {
  return Channel(ch.out_dim, ch.in_dim, swap_legs(ch.choi, ch.in_dim, ch.out_dim).transpose());
}

Channel adjoint_prime(const Channel& ch) {
  return Channel(ch.out_dim, ch.in_dim, swap_legs(ch.choi, ch.in_dim, ch.out_dim));
}

SpanDecomposition projection_span_decompose(const Channel& ch, const QWeight& q_in,
                                            std::span<const ComplexMatrix> projections, Tolerance tol) {
  if (q_in.dim() != ch.in_dim) throw DimensionError("Q weight does not match channel input");
  const std::size_t n = ch.choi.rows();
  for (std::size_t a = 0; a < projections.size(); ++a) {
    const ComplexMatrix& p = projections[a];
    if (p.rows() != n || p.cols() != n) throw DimensionError("projection has the wrong size");
    if (hermitian_defect(p) > kFamilyTol || max_abs_diff(p * p, p) > kFamilyTol)
      throw InvalidArgument("family member is not an orthogonal projection");
    for (std::size_t b = 0; b < a; ++b)
      if (max_abs(p * projections[b]) > kFamilyTol) throw InvalidArgument("projections are not mutually orthogonal");
  }
  const ComplexMatrix s = kron(q_in.power(-0.5), ComplexMatrix::identity(ch.out_dim));
  const ComplexMatrix d = s * ch.choi * s;
  SpanDecomposition out;
  ComplexMatrix rebuilt(n, n);
  for (const auto& p : projections) {
    const Complex c = (p * d).trace() / p.trace();
    out.coefficients.push_back(c);
    rebuilt += c * p;
  }
  out.residual = max_abs_diff(d, rebuilt);
  out.in_span = out.residual <= tol.eps;
  return out;
}

Channel convex_mix(std::span<const Channel> channels, std::span<const double> weights, Tolerance tol) {
  if (channels.empty() || channels.size() != weights.size())
    throw InvalidArgument("need one weight per channel");
  double total = 0.0;
  for (double w : weights) {
    if (w < -1e-12) throw InvalidArgument("negative mixture weight");
    total += w;
  }
  if (std::abs(total - 1.0) > tol.eps) throw InvalidArgument("mixture weights must sum to 1");
  const std::size_t in = channels.front().in_dim, out = channels.front().out_dim;
  ComplexMatrix c(in * out, in * out);
  for (std::size_t k = 0; k < channels.size(); ++k) {
    if (channels[k].in_dim != in || channels[k].out_dim != out) throw DimensionError("mixed channels differ in shape");
    c += std::max(0.0, weights[k]) * channels[k].choi;
  }
  return Channel(in, out, std::move(c));
}

}  // namespace covkit
