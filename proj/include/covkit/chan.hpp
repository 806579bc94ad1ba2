#pragma once

#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "covkit/matlin.hpp"

namespace covkit {

// Linear map B(C^in_dim) -> B(C^out_dim) stored as C = sum_ij e_ij (x) Phi(e_ij),
// input leg first.
struct Channel {
  std::size_t in_dim = 0;
  std::size_t out_dim = 0;
  ComplexMatrix choi;

  Channel() = default;
  Channel(std::size_t in, std::size_t out, ComplexMatrix c);

  // Phi(e_ij)
  ComplexMatrix block(std::size_t i, std::size_t j) const;
};

using Action = std::function<ComplexMatrix(const ComplexMatrix&)>;

Channel choi_from_action(const Action& action, std::size_t in_dim, std::size_t out_dim);
ComplexMatrix apply(const Channel& ch, const ComplexMatrix& x);

Channel identity_channel(std::size_t d);
Channel transpose_channel(std::size_t d);
Channel scaled(const Channel& ch, Complex s);

struct ChannelFlags {
  bool cp = false;
  bool tp = false;
  bool unital = false;
  double min_choi_eigenvalue = 0.0;  // NaN when the Choi matrix is not Hermitian
  double tp_residual = 0.0;
  double unital_residual = 0.0;
};

ChannelFlags classify(const Channel& ch, Tolerance tol = {});

// Positive diagonal weight with Tr Q = Tr Q^-1.
class QWeight {
 public:
  explicit QWeight(std::vector<double> diagonal, Tolerance tol = {});
  static QWeight identity(std::size_t n);

  std::size_t dim() const { return diag_.size(); }
  double qdim() const { return qdim_; }
  std::span<const double> diagonal() const { return diag_; }
  ComplexMatrix matrix() const;
  ComplexMatrix power(double p) const;

 private:
  std::vector<double> diag_;
  double qdim_ = 0.0;
};

double qtp_residual(const Channel& ch, const QWeight& qin, const QWeight& qout);
bool is_qtp(const Channel& ch, const QWeight& qin, const QWeight& qout, Tolerance tol = {});

struct Isometry {
  ComplexMatrix matrix;  // d_big x d_small
  std::string source_label;
  std::vector<std::string> target_labels;

  Isometry() = default;
  explicit Isometry(ComplexMatrix m, std::string source = {}, std::vector<std::string> targets = {},
                    Tolerance tol = {});
};

// A -> (id (x) Tr_Q)(v A v^dagger), the traced leg being the second (gamma) factor.
Channel cg_map(const Isometry& v, const QWeight& q_gamma, std::size_t d_beta, std::size_t d_gamma);

// <Phi*(Y), X> = <Y, Phi(X)> with <A,B> = Tr(AB)
Channel adjoint_star(const Channel& ch);
// <<Phi'(Y), X>> = <<Y, Phi(X)>> with <<A,B>> = Tr(A^t B)
Channel adjoint_prime(const Channel& ch);

struct SpanDecomposition {
  bool in_span = false;
  std::vector<Complex> coefficients;
  double residual = 0.0;
};

SpanDecomposition projection_span_decompose(const Channel& ch, const QWeight& q_in,
                                            std::span<const ComplexMatrix> projections, Tolerance tol = {});

Channel convex_mix(std::span<const Channel> channels, std::span<const double> weights, Tolerance tol = {});

// Channel JSON: {"in_dim": n, "out_dim": m, "choi": [[[re, im], ...], ...]}
std::string channel_to_json(const Channel& ch);
Channel channel_from_json(const std::string& text);
void write_channel_file(const std::string& path, const Channel& ch);
Channel read_channel_file(const std::string& path);
// Shared by report writers: 17 significant digits.
std::string format_double(double x);

}  // namespace covkit
