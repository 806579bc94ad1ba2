#pragma once

#include <memory>
#include <vector>

#include "covkit/chan.hpp"
#include "covkit/matlin.hpp"

namespace covkit::suq2 {

inline constexpr int kMaxLabel = 12;

// Symmetric q-integer (q^-n - q^n) / (q^-1 - q).
double qint(int n, double q);

// Generator matrices of a U_q(sl2) representation.
struct Generators {
  ComplexMatrix E, F, K;
  std::size_t dim() const { return K.rows(); }
};

// Spin-k irrep on the weight basis |0>..|k>:
//   K|i> = q^(k-2i)|i>,  E|i> = sqrt(q^(k-2i+2) [i][k-i+1]) |i-1>,  F = E^dagger K^-1.
struct Irrep {
  int k = 0;
  double q = 0.0;
  Generators gens;
  QWeight Q;  // diag(q^-k, q^-k+2, ..., q^k)
  double qdim = 1.0;

  std::size_t dim() const { return static_cast<std::size_t>(k) + 1; }
};

// Memoized; safe to call concurrently.
std::shared_ptr<const Irrep> irrep(int k, double q);

struct FusionRange {
  int k = 0;
  int l = 0;
  std::vector<int> members;  // |k-l|, |k-l|+2, ..., k+l
};

FusionRange fusion_range(int k, int l);
bool in_fusion_range(int m, int k, int l);

// Tensor product rep: Delta(E) = E(x)1 + K(x)E, Delta(F) = F(x)K^-1 + 1(x)F, Delta(K) = K(x)K.
Generators coproduct(const Generators& a, const Generators& b);

// Conjugate realization Q^(1/2) pi_k(S(x))^t Q^(-1/2) with S(E) = -K^-1 E, S(F) = -F K, S(K) = K^-1.
Generators conj_action(int k, double q);

// Orthonormal basis of Hom(src, tgt) for the generators E, F, K.
std::vector<ComplexMatrix> hom_space(const Generators& src, const Generators& tgt, Tolerance tol = {});
double intertwiner_residual(const ComplexMatrix& x, const Generators& src, const Generators& tgt);

// v^{beta,gamma}_alpha in Hom(alpha, beta (x) gamma), isometric, phase fixed.
Isometry cg_isometry(int alpha, int beta, int gamma, double q, Tolerance tol = {});

// Phi^{k -> l}_m = (id (x) Tr_{Q_m})(v . v^dagger), v = v^{l,m}_k
Channel cg_channel(int k, int l, int m, double q, Tolerance tol = {});

struct Family {
  std::vector<int> members;  // m values
  std::vector<Channel> channels;
};
Family covariant_family(int k, int l, double q, Tolerance tol = {});

// p_m = w w^dagger for w in Hom(m, conj_action(k) (x) irrep(l)), ordered like fusion_range(k, l).
std::vector<ComplexMatrix> covariant_projections(int k, int l, double q, Tolerance tol = {});

struct CovarianceCheck {
  bool covariant = false;
  std::vector<int> members;
  std::vector<Complex> coefficients;
  double residual = 0.0;
};
CovarianceCheck covariance_check(const Channel& ch, int k, int l, double q, Tolerance tol = {});

// Direct check of Phi(x . X) = x . Phi(X) for x in {E, F, K} under the adjoint action
// K.X = K X K^-1, E.X = E X - K X K^-1 E, F.X = F X K - X F K, on matrix units.
double adjoint_action_residual(const Channel& ch, int k, int l, double q);

struct TpFeasibility {
  bool feasible = false;
  std::vector<int> members;
  std::vector<double> witness;
  double residual = 0.0;
  std::size_t solution_dimension = 0;
};
// Is some a >= 0 with sum_m a_m Phi^{k->l}_m trace preserving?
TpFeasibility tp_feasibility(int k, int l, double q, Tolerance tol = {});

// (k+1) |Q_k| / d_k = (1 - q^2)(k + 1) / (1 - q^(2(k+1)))
double kac_obstruction(int k, double q);

}  // namespace covkit::suq2
