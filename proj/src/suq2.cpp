#include "covkit/suq2.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "covkit/error.hpp"
#include "covkit/linsolve.hpp"

namespace covkit::suq2 {

namespace {

void check_q(double q) {
  if (!(q > 0.0 && q < 1.0)) throw InvalidArgument("q must lie in (0, 1)");
}

void check_label(int k) {
  if (k < 0 || k > kMaxLabel) throw InvalidArgument("SU_q(2) label out of range [0, " + std::to_string(kMaxLabel) + "]");
}

ComplexMatrix diag_inverse(const ComplexMatrix& d) {
  ComplexMatrix out(d.rows(), d.cols());
  for (std::size_t i = 0; i < d.rows(); ++i) out(i, i) = 1.0 / d(i, i);
  return out;
}

std::shared_ptr<const Irrep> build_irrep(int k, double q) {
  const std::size_t d = static_cast<std::size_t>(k) + 1;
  ComplexMatrix K(d, d), E(d, d);
  std::vector<double> qdiag(d);
  for (std::size_t i = 0; i < d; ++i) {
    const int w = k - 2 * static_cast<int>(i);
    K(i, i) = std::pow(q, w);
    qdiag[i] = std::pow(q, -w);
  }
  for (int i = 1; i <= k; ++i)
    E(i - 1, i) = std::sqrt(std::pow(q, k - 2 * i + 2) * qint(i, q) * qint(k - i + 1, q));
  ComplexMatrix F = E.adjoint() * diag_inverse(K);
  auto r = std::make_shared<Irrep>(Irrep{k, q, Generators{std::move(E), std::move(F), std::move(K)},
                                         QWeight(std::move(qdiag)), qint(k + 1, q)});
  return r;
}

}  // namespace

double qint(int n, double q) {
  check_q(q);
  return (std::pow(q, -n) - std::pow(q, n)) / (1.0 / q - q);
}

std::shared_ptr<const Irrep> irrep(int k, double q) {
  check_q(q);
  check_label(k);
  static std::shared_mutex mutex;
  static std::map<std::pair<int, std::uint64_t>, std::shared_ptr<const Irrep>> cache;
  const auto key = std::make_pair(k, std::bit_cast<std::uint64_t>(q));
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto built = build_irrep(k, q);
  std::unique_lock lock(mutex);
  return cache.try_emplace(key, std::move(built)).first->second;
}

FusionRange fusion_range(int k, int l) {
  if (k < 0 || l < 0) throw InvalidArgument("labels must be nonnegative");
  FusionRange f{k, l, {}};
  for (int m = std::abs(k - l); m <= k + l; m += 2) f.members.push_back(m);
  return f;
}

bool in_fusion_range(int m, int k, int l) {
  return m >= std::abs(k - l) && m <= k + l && (m - std::abs(k - l)) % 2 == 0;
}

Generators coproduct(const Generators& a, const Generators& b) {
  const ComplexMatrix ia = ComplexMatrix::identity(a.dim());
  const ComplexMatrix ib = ComplexMatrix::identity(b.dim());
  return Generators{kron(a.E, ib) + kron(a.K, b.E), kron(a.F, diag_inverse(b.K)) + kron(ia, b.F), kron(a.K, b.K)};
}

Generators conj_action(int k, double q) {
  const auto r = irrep(k, q);
  const ComplexMatrix& K = r->gens.K;
  const ComplexMatrix Ki = diag_inverse(K);
  const ComplexMatrix qh = r->Q.power(0.5), qhi = r->Q.power(-0.5);
  const ComplexMatrix sE = -(Ki * r->gens.E), sF = -(r->gens.F * K);
  return Generators{qh * sE.transpose() * qhi, qh * sF.transpose() * qhi, qh * Ki * qhi};
}

std::vector<ComplexMatrix> hom_space(const Generators& src, const Generators& tgt, Tolerance tol) {
  const GeneratorPair pairs[3] = {{src.K, tgt.K}, {src.E, tgt.E}, {src.F, tgt.F}};
  return intertwiner_space(pairs, tol);
}

double intertwiner_residual(const ComplexMatrix& x, const Generators& src, const Generators& tgt) {
  return std::max({max_abs_diff(tgt.E * x, x * src.E), max_abs_diff(tgt.F * x, x * src.F),
                   max_abs_diff(tgt.K * x, x * src.K)});
}

namespace {

ComplexMatrix normalized_isometry(const ComplexMatrix& h) {
  // h spans a one-dimensional Hom space; h^dagger h is a scalar multiple of I.
  const double c = (h.adjoint() * h)(0, 0).real();
  return (1.0 / std::sqrt(c)) * h;
}

}  // namespace

Isometry cg_isometry(int alpha, int beta, int gamma, double q, Tolerance tol) {
  check_q(q);
  check_label(alpha);
  check_label(beta);
  check_label(gamma);
  if (!in_fusion_range(alpha, beta, gamma))
    throw NotInFusionRange(std::to_string(alpha) + " is not in the fusion range of " + std::to_string(beta) + " (x) " +
                           std::to_string(gamma));
  const auto a = irrep(alpha, q), b = irrep(beta, q), g = irrep(gamma, q);
  const auto hom = hom_space(a->gens, coproduct(b->gens, g->gens), tol);
  if (hom.size() != 1) throw NullSpaceDimension("CG intertwiner space is not one-dimensional", hom.size());
  return Isometry(fix_phase(normalized_isometry(hom.front())), std::to_string(alpha),
                  {std::to_string(beta), std::to_string(gamma)});
}

Channel cg_channel(int k, int l, int m, double q, Tolerance tol) {
  const Isometry v = cg_isometry(k, l, m, q, tol);
  return cg_map(v, irrep(m, q)->Q, static_cast<std::size_t>(l) + 1, static_cast<std::size_t>(m) + 1);
}

Family covariant_family(int k, int l, double q, Tolerance tol) {
  Family f;
  f.members = fusion_range(k, l).members;
  for (int m : f.members) f.channels.push_back(cg_channel(k, l, m, q, tol));
  return f;
}

std::vector<ComplexMatrix> covariant_projections(int k, int l, double q, Tolerance tol) {
  const Generators t = coproduct(conj_action(k, q), irrep(l, q)->gens);
  std::vector<ComplexMatrix> out;
  for (int m : fusion_range(k, l).members) {
    const auto hom = hom_space(irrep(m, q)->gens, t, tol);
    if (hom.size() != 1) throw DecompositionError("conjugate tensor decomposition is not multiplicity-free as expected");
    const ComplexMatrix w = normalized_isometry(hom.front());
    out.push_back(w * w.adjoint());
  }
  return out;
}

CovarianceCheck covariance_check(const Channel& ch, int k, int l, double q, Tolerance tol) {
  if (ch.in_dim != static_cast<std::size_t>(k) + 1 || ch.out_dim != static_cast<std::size_t>(l) + 1)
    throw DimensionError("channel dimensions do not match (k+1, l+1)");
  const auto projections = covariant_projections(k, l, q, tol);
  const auto dec = projection_span_decompose(ch, irrep(k, q)->Q, projections, tol);
  return CovarianceCheck{dec.in_span, fusion_range(k, l).members, dec.coefficients, dec.residual};
}

double adjoint_action_residual(const Channel& ch, int k, int l, double q) {
  if (ch.in_dim != static_cast<std::size_t>(k) + 1 || ch.out_dim != static_cast<std::size_t>(l) + 1)
    throw DimensionError("channel dimensions do not match (k+1, l+1)");
  const Generators& a = irrep(k, q)->gens;
  const Generators& b = irrep(l, q)->gens;
  auto act = [](const Generators& g, int which, const ComplexMatrix& x) {
    const ComplexMatrix ki = diag_inverse(g.K);
    switch (which) {
      case 0: return g.K * x * ki;
      case 1: return g.E * x - g.K * x * ki * g.E;
      default: return g.F * x * g.K - x * g.F * g.K;
    }
  };
  double worst = 0.0;
  for (int which = 0; which < 3; ++which)
    for (std::size_t i = 0; i < ch.in_dim; ++i)
      for (std::size_t j = 0; j < ch.in_dim; ++j) {
        const ComplexMatrix e = ComplexMatrix::unit(ch.in_dim, ch.in_dim, i, j);
        worst = std::max(worst, max_abs_diff(apply(ch, act(a, which, e)), act(b, which, apply(ch, e))));
      }
  return worst;
}

TpFeasibility tp_feasibility(int k, int l, double q, Tolerance tol) {
  const Family fam = covariant_family(k, l, q, tol);
  const std::size_t din = static_cast<std::size_t>(k) + 1, dout = static_cast<std::size_t>(l) + 1;
  ComplexMatrix m(din * din, fam.channels.size());
  for (std::size_t c = 0; c < fam.channels.size(); ++c) {
    const ComplexMatrix t = partial_trace(fam.channels[c].choi, din, dout, Side::second);
    for (std::size_t r = 0; r < din * din; ++r) m(r, c) = t.entries()[r];
  }
  const auto sol = nonnegative_solve(m, vec(ComplexMatrix::identity(din)), tol);
  return TpFeasibility{sol.feasible, fam.members, sol.witness, sol.residual, sol.solution_dimension};
}

double kac_obstruction(int k, double q) {
  check_q(q);
  if (k < 0) throw InvalidArgument("label must be nonnegative");
  return (1.0 - q * q) * (k + 1) / (1.0 - std::pow(q, 2 * (k + 1)));
}

}  // namespace covkit::suq2
