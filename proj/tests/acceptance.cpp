#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <set>
#include <sstream>
#include <string>

#include "covkit/chan.hpp"
#include "covkit/cli.hpp"
#include "covkit/finrep.hpp"
#include "covkit/rng.hpp"
#include "covkit/suq2.hpp"
#include "covkit/weylfer.hpp"
#include "support.hpp"

using namespace covkit;

namespace {

constexpr double kQs[] = {0.3, 0.5, 0.9};

// Collects the worst value of each checked quantity and any hard failures.
struct Check {
  bool ok = true;
  std::string detail;

  void le(const std::string& what, double value, double bound) {
    if (!(value <= bound)) fail(what + " = " + num(value) + " > " + num(bound));
  }
  void that(const std::string& what, bool cond) {
    if (!cond) fail(what);
  }
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
  void note(const std::string& s) {
    if (ok) detail += (detail.empty() ? "" : ", ") + s;
  }
  static std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", x);
    return buf;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// min over unit phases c of |c a - b|
double phase_aligned_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  Complex z = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) z += std::conj(a(i, j)) * b(i, j);
  const Complex c = std::abs(z) > 0 ? z / std::abs(z) : Complex(1.0);
  return max_abs_diff(c * a, b);
}

ComplexMatrix align_phase(const ComplexMatrix& a, const ComplexMatrix& b) {
  Complex z = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) z += std::conj(a(i, j)) * b(i, j);
  return (z / std::abs(z)) * a;
}

// --- printed S_4 data, 0-based: a(i, j) is a_{i+1, j+1} ---

ComplexMatrix phi2_printed(const ComplexMatrix& a) {
  ComplexMatrix out(3, 3);
  const Complex t = a.trace();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out(i, j) = i == j ? (t - a(i, i)) / 2.0 : a(j, i) / 2.0;
  return out;
}

ComplexMatrix phi3_printed(const ComplexMatrix& a) {
  ComplexMatrix out(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out(i, j) = i == j ? a(i, i) : -a(i, j) / 2.0;
  return out;
}

ComplexMatrix phi4_printed(const ComplexMatrix& a) {
  ComplexMatrix out(3, 3);
  const Complex t = a.trace();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out(i, j) = i == j ? (t - a(i, i)) / 2.0 : -a(j, i) / 2.0;
  return out;
}

// |a b> in C^3 (x) C^3 and |k> (x) |a b> in C^3 (x) C^9
std::size_t ab(std::size_t a, std::size_t b) { return a * 3 + b; }
std::size_t kab(std::size_t k, std::size_t a, std::size_t b) { return k * 9 + ab(a, b); }

// v3 |k> = |k> (x) |h_k>
ComplexMatrix v3_printed() {
  ComplexMatrix v(27, 3);
  const double s = 1 / std::sqrt(6.0);
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t a = 0; a < 3; ++a) v(kab(k, a, a), k) = (a == k ? -2.0 : 1.0) * s;
  return v;
}

// v4 |k> = (|k+1, g-_{k+2}> - |k+2, g-_{k+1}>)/sqrt2, g-_j = (|j+1, j+2> - |j+2, j+1>)/sqrt2, indices mod 3
ComplexMatrix v4_printed() {
  ComplexMatrix v(27, 3);
  auto add_g = [&](std::size_t col, std::size_t k, std::size_t j, double c) {
    const std::size_t a = (j + 1) % 3, b = (j + 2) % 3;
    v(kab(k, a, b), col) += c / std::sqrt(2.0);
    v(kab(k, b, a), col) -= c / std::sqrt(2.0);
  };
  for (std::size_t k = 0; k < 3; ++k) {
    add_g(k, (k + 1) % 3, (k + 2) % 3, 1 / std::sqrt(2.0));
    add_g(k, (k + 2) % 3, (k + 1) % 3, -1 / std::sqrt(2.0));
  }
  return v;
}

// v^{1,2}_1 columns |0>, |1> in the |ij> basis of C^2 (x) C^3
ComplexMatrix v121_printed(double q) {
  const double q2 = q * q, q4 = q2 * q2, s = std::sqrt(1 + q2 + q4);
  ComplexMatrix v(6, 2);
  v(0 * 3 + 1, 0) = 1 / s;
  v(1 * 3 + 0, 0) = -std::sqrt(q2 + q4) / s;
  v(0 * 3 + 2, 1) = std::sqrt(1 + q2) / s;
  v(1 * 3 + 1, 1) = -q2 / s;
  return v;
}

ComplexMatrix phi_112_printed(const ComplexMatrix& x, double q) {
  const double q2 = q * q, q4 = q2 * q2, n = 1 + q2 + q4;
  const Complex a = x(0, 0), b = x(0, 1), c = x(1, 0), d = x(1, 1);
  return ComplexMatrix{{(a + d * (q2 + q4)) / n, -b * q2 / n}, {-c * q2 / n, (a * (1 + q2) + d * q4) / n}};
}

// The five S_4 irreps on one group object.
struct S4Irreps {
  SnSquare square;
  std::vector<FiniteGroupRep> reps;
};

S4Irreps s4_irreps() {
  auto sq = sn_square_decomposition(4);
  const auto g = sq.v.group();
  std::vector<FiniteGroupRep> reps = {trivial_rep(g), sign_rep(g), sq.v, tensor(sq.v, sign_rep(g)),
                                      restrict_to(sq.vv, sq.blocks[2].isometry.matrix)};
  return {std::move(sq), std::move(reps)};
}

// --- criteria ---

Check criterion1() {
  Check c;
  const auto t0 = std::chrono::steady_clock::now();
  const auto cat = sn_catalog(4);
  std::vector<Channel> ch;
  for (const auto& comp : cat.components) ch.push_back(comp.channel);
  const auto ext = sn_extreme_channels(4);
  c.that("four extreme channels", ext.size() == 4);
  for (std::size_t i = 0; i < ext.size() && i < ch.size(); ++i) c.le("catalog vs extremes", max_abs_diff(ext[i].choi, ch[i].choi), 0.0);

  // entrywise comparison of the actions on every matrix unit
  const Action printed[] = {phi2_printed, phi3_printed, phi4_printed};
  double worst = 0.0;
  for (int k = 0; k < 3; ++k)
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        const auto e = ComplexMatrix::unit(3, 3, i, j);
        worst = std::max(worst, max_abs_diff(apply(ext[k + 1], e), printed[k](e)));
      }
  c.le("printed matrices", worst, 1e-10);
  c.le("Phi_1 = id", max_abs_diff(ext[0].choi, identity_channel(3).choi), 1e-10);

  double cov = 0.0;
  for (const auto& e : ext) {
    const auto f = classify(e);
    c.that("CP", f.cp);
    c.that("TP", f.tp);
    c.that("unital", f.unital);
    cov = std::max(cov, covariance_residual(e, cat.square.v, cat.square.v));
  }
  c.le("covariance residual", cov, 1e-10);
  const double t = seconds_since(t0);
  c.le("runtime s", t, 1.0);
  c.note("printed " + Check::num(worst) + ", cov " + Check::num(cov) + ", " + Check::num(t) + " s");
  return c;
}

Check criterion2() {
  Check c;
  for (std::size_t n : {4u, 5u, 6u}) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto sq = sn_square_decomposition(n);
    const double t = seconds_since(t0);
    const std::vector<std::size_t> expected = {1, n - 1, n * (n - 3) / 2, (n - 1) * (n - 2) / 2};
    std::vector<std::size_t> dims;
    std::set<std::string> labels;
    for (const auto& b : sq.blocks) {
      dims.push_back(b.dim);
      labels.insert(b.label);
    }
    c.that("dims for n=" + std::to_string(n), dims == expected);
    c.that("four distinct blocks for n=" + std::to_string(n), labels.size() == 4);
    // multiplicity-free: each block is irreducible and inequivalent to the others
    for (std::size_t a = 0; a < sq.blocks.size(); ++a) {
      const auto ra = restrict_to(sq.vv, sq.blocks[a].isometry.matrix);
      for (std::size_t b = 0; b < sq.blocks.size(); ++b) {
        const auto rb = restrict_to(sq.vv, sq.blocks[b].isometry.matrix);
        c.that("Hom between blocks", hom_basis(ra, rb).size() == (a == b ? 1u : 0u));
      }
    }
    if (n == 6) {
      c.le("n=6 runtime s", t, 30.0);
      c.note("n=6 " + Check::num(t) + " s");
    }
  }
  return c;
}

Check criterion3() {
  Check c;
  const auto ext = snplus_extreme_channels(4);
  c.that("three extreme channels", ext.size() == 3);
  if (ext.size() != 3) return c;
  const auto sn = sn_extreme_channels(4);
  const std::vector<Channel> pair = {sn[2], sn[3]};
  const std::vector<double> weights = {0.4, 0.6};
  c.le("(2/5)Phi_3 + (3/5)Phi_4", max_abs_diff(ext[2].choi, convex_mix(pair, weights).choi), 1e-12);

  const auto cat = sn_catalog(4);
  const auto p3 = cat.square.blocks[2].projection(), p4 = cat.square.blocks[3].projection();
  c.le("Choi = (3/5)(p3 + p4)", max_abs_diff(ext[2].choi, 0.6 * (p3 + p4)), 1e-12);
  std::size_t rank = 0;
  for (double x : eig_hermitian(p3 + p4).values) rank += x > 0.5;
  c.that("projection rank 5", rank == 5);

  // computed isometries embedded in C^3 (x) C^9
  auto embed = [&](const CGComponent& comp) {
    return kron(ComplexMatrix::identity(3), comp.block.isometry.matrix.conjugate()) * comp.v.matrix;
  };
  const auto v3 = embed(cat.components[2]), v4 = embed(cat.components[3]);
  const double d3 = phase_aligned_diff(v3, v3_printed()), d4 = phase_aligned_diff(v4, v4_printed());
  c.le("v3 up to phase", d3, 1e-9);
  c.le("v4 up to phase", d4, 1e-9);

  const auto w_printed = std::sqrt(0.4) * v3_printed() + std::sqrt(0.6) * v4_printed();
  const auto w = std::sqrt(0.4) * align_phase(v3, v3_printed()) + std::sqrt(0.6) * align_phase(v4, v4_printed());
  const double dw = phase_aligned_diff(w, w_printed);
  c.le("w up to phase", dw, 1e-9);
  const auto id9 = QWeight::identity(9);
  c.le("channel of printed w", max_abs_diff(cg_map(Isometry(w_printed), id9, 3, 9).choi, ext[2].choi), 1e-9);
  // any relative phase between the two parts gives the same channel
  const auto w_raw = std::sqrt(0.4) * v3 + std::sqrt(0.6) * v4;
  c.le("channel of computed w", max_abs_diff(cg_map(Isometry(w_raw), id9, 3, 9).choi, ext[2].choi), 1e-9);
  c.note("v3 " + Check::num(d3) + ", v4 " + Check::num(d4) + ", w " + Check::num(dw) + ", rank " + std::to_string(rank));
  return c;
}

Check criterion4() {
  Check c;
  double worst_s4 = 0.0, worst_q = 0.0;
  std::size_t count = 0;
  const auto s4 = s4_irreps();
  for (const auto& a : s4.reps)
    for (const auto& b : s4.reps)
      for (const auto& comp : cg_family(a, b)) {
        const double ratio = static_cast<double>(a.dim()) / static_cast<double>(comp.gamma.dim());
        worst_s4 = std::max(worst_s4, max_abs_diff(comp.channel.choi, ratio * comp.block.projection()));
        ++count;
      }
  for (double q : kQs)
    for (int k = 0; k <= 4; ++k)
      for (int l = 0; l <= 4; ++l) {
        const auto fam = suq2::covariant_family(k, l, q);
        const auto proj = suq2::covariant_projections(k, l, q);
        const auto rk = suq2::irrep(k, q);
        const auto s = kron(rk->Q.power(0.5), ComplexMatrix::identity(static_cast<std::size_t>(l) + 1));
        for (std::size_t i = 0; i < fam.members.size(); ++i) {
          const double ratio = rk->qdim / suq2::irrep(fam.members[i], q)->qdim;
          worst_q = std::max(worst_q, max_abs_diff(fam.channels[i].choi, ratio * (s * proj[i] * s)));
          ++count;
        }
      }
  c.le("S_4", worst_s4, 1e-9);
  c.le("SU_q(2)", worst_q, 1e-9);
  c.note(std::to_string(count) + " maps, S_4 " + Check::num(worst_s4) + ", SU_q(2) " + Check::num(worst_q));
  return c;
}

Check criterion5() {
  Check c;
  Rng rng(5);
  double worst_v = 0.0, worst_phi = 0.0;
  for (double q : kQs) {
    worst_v = std::max(worst_v, phase_aligned_diff(suq2::cg_isometry(1, 1, 2, q).matrix, v121_printed(q)));
    const auto ch = suq2::cg_channel(1, 1, 2, q);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        const auto e = ComplexMatrix::unit(2, 2, i, j);
        worst_phi = std::max(worst_phi, max_abs_diff(apply(ch, e), phi_112_printed(e, q)));
      }
    for (int t = 0; t < 5; ++t) {
      const auto x = random_matrix(rng, 2, 2);
      worst_phi = std::max(worst_phi, max_abs_diff(apply(ch, x), phi_112_printed(x, q)));
    }
    const auto f = classify(ch);
    c.that("cp", f.cp);
    c.that("not tp", !f.tp);
    c.that("unital", f.unital);
    const auto& Q = suq2::irrep(1, q)->Q;
    c.that("qtp", is_qtp(ch, Q, Q));
  }
  c.le("v^{1,2}_1", worst_v, 1e-10);
  c.le("closed form", worst_phi, 1e-10);
  c.note("v " + Check::num(worst_v) + ", closed form " + Check::num(worst_phi));
  return c;
}

Check criterion6() {
  Check c;
  double worst = 0.0;
  std::size_t count = 0;
  for (double q : kQs)
    for (int b = 0; b <= 6; ++b)
      for (int g = 0; g <= 6; ++g)
        for (int a : suq2::fusion_range(b, g).members) {
          if (a > 6) continue;
          const auto v = suq2::cg_isometry(a, b, g, q).matrix;
          const auto ra = suq2::irrep(a, q), rb = suq2::irrep(b, q), rg = suq2::irrep(g, q);
          worst = std::max(worst, max_abs_diff(kron(rb->Q.matrix(), rg->Q.matrix()) * v, v * ra->Q.matrix()));
          ++count;
        }
  c.le("residual", worst, 1e-9);
  c.note(std::to_string(count) + " triples, " + Check::num(worst));
  return c;
}

Check criterion7() {
  Check c;
  double witness = 0.0;
  for (double q : kQs) {
    for (int k = 0; k <= 4; ++k)
      for (int l = 0; l < k; ++l)
        c.that("(" + std::to_string(k) + "," + std::to_string(l) + ") infeasible", !suq2::tp_feasibility(k, l, q).feasible);
    for (int k = 0; k <= 4; ++k) {
      const auto t = suq2::tp_feasibility(k, k, q);
      c.that("(k,k) feasible", t.feasible);
      c.that("(k,k) unique solution", t.solution_dimension == 0);
      c.that("identity vertex first", t.members.front() == 0);
      for (std::size_t i = 0; i < t.witness.size(); ++i)
        witness = std::max(witness, std::abs(t.witness[i] - (i == 0 ? 1.0 : 0.0)));
    }
    for (int k = 0; k < 10; ++k)
      c.that("kac_obstruction increasing", suq2::kac_obstruction(k + 1, q) > suq2::kac_obstruction(k, q));
  }
  c.le("witness distance", witness, 1e-9);
  c.note("witness " + Check::num(witness));
  return c;
}

Check criterion8() {
  Check c;
  double worst = 0.0;
  std::size_t count = 0;
  const auto s4 = s4_irreps();
  for (const auto& a : s4.reps)
    for (const auto& b : s4.reps) {
      const auto fwd = cg_family(a, b), back = cg_family(b, a);
      const double ratio = static_cast<double>(a.dim()) / static_cast<double>(b.dim());
      for (const auto& comp : fwd) {
        const auto gbar = conj(comp.gamma);
        const CGComponent* match = nullptr;
        for (const auto& d : back)
          if (d.gamma.dim() == gbar.dim() && hom_basis(gbar, d.gamma).size() == 1) match = &d;
        c.that("reverse map found", match != nullptr);
        if (!match) continue;
        worst = std::max(worst, max_abs_diff(adjoint_star(comp.channel).choi, ratio * match->channel.choi));
        ++count;
      }
    }
  c.le("adjoint", worst, 1e-10);
  c.note(std::to_string(count) + " maps, " + Check::num(worst));
  return c;
}

Check criterion9() {
  Check c;
  std::vector<CocycleSystem> systems;
  for (const auto& o : std::vector<std::vector<int>>{{2}, {3}, {4}, {2, 2}}) systems.push_back(weyl_system(o));
  for (int n : {1, 2}) systems.push_back(fermionic_system(n));
  Rng rng(9);
  double worst_choi = 0.0, worst_rec = 0.0;
  for (const auto& sys : systems) {
    const auto basis = bell_basis(sys);
    const double F = static_cast<double>(sys.hilbert_dim());
    for (std::size_t x = 0; x < sys.size(); ++x) {
      const auto f = basis.vectors[x];
      worst_choi = std::max(worst_choi, max_abs_diff(unitary_conj_channel(sys, x).choi, F * (f * f.adjoint())));
    }
    for (int t = 0; t < 100; ++t) {
      const auto p = rng.dirichlet(sys.size());
      const auto r = recover_distribution(mixture(sys, p), sys);
      c.that("mixture recognized", r.covariant && r.distribution);
      worst_rec = std::max(worst_rec, testing::max_abs_vec(r.p, p));
    }
  }
  bool car = true;
  for (int n = 1; n <= 3; ++n) {
    const auto m = majorana_operators(n);
    const auto id = ComplexMatrix::identity(std::size_t{1} << n);
    for (std::size_t j = 0; j < m.size(); ++j)
      for (std::size_t k = 0; k < m.size(); ++k)
        car = car && (m[j] * m[k] + m[k] * m[j]) == (j == k ? 2.0 * id : ComplexMatrix(id.rows(), id.cols()));
  }
  c.le("Choi = |F| f f*", worst_choi, 1e-10);
  c.le("recovery", worst_rec, 1e-12);
  c.that("CAR exact", car);
  c.note("Choi " + Check::num(worst_choi) + ", recovery " + Check::num(worst_rec));
  return c;
}

std::string report_text(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return std::to_string(code) + "\n" + out.str();
}

Check criterion10() {
  Check c;
  Rng rng(10);

  // CP <=> Choi PSD <=> all Kraus signs positive
  std::size_t agree = 0;
  for (int t = 0; t < 200; ++t) {
    const std::size_t din = 2 + rng.below(2), dout = 2;
    auto k = testing::random_kraus(rng, din, dout, 1 + rng.below(din * dout));
    bool positive = true;
    for (auto& s : k.signs) {
      if (rng.uniform() < 0.2) s = -0.5;
      positive = positive && s > 0;
    }
    const auto ch = choi_from_action(k, din, dout);
    const bool cp = classify(ch).cp;
    agree += cp == is_psd(ch.choi) && cp == positive;
  }
  c.that("CP <=> PSD on 200 maps (" + std::to_string(agree) + " agree)", agree == 200);

  double trip = 0.0;
  for (int t = 0; t < 50; ++t) {
    const auto k = testing::random_kraus(rng, 3, 2, 3);
    const auto ch = choi_from_action(k, 3, 2);
    const auto back = choi_from_action([&](const ComplexMatrix& x) { return apply(ch, x); }, 3, 2);
    trip = std::max(trip, max_abs_diff(back.choi, ch.choi));
    const auto x = random_matrix(rng, 3, 3);
    trip = std::max(trip, max_abs_diff(apply(ch, x), k(x)));
  }
  c.le("round trip", trip, 1e-12);

  const auto sq = sn_square_decomposition(4);
  double idem = 0.0;
  for (int t = 0; t < 5; ++t) {
    const auto x = random_matrix(rng, 9, 9), y = random_matrix(rng, 9, 3);
    const auto tx = twirl(sq.vv, sq.vv, x), ty = twirl(sq.v, sq.vv, y);
    idem = std::max({idem, max_abs_diff(twirl(sq.vv, sq.vv, tx), tx), max_abs_diff(twirl(sq.v, sq.vv, ty), ty)});
  }
  c.le("twirl idempotence", idem, 1e-12);

  std::vector<FiniteGroupRep> reps;
  for (const auto& b : sq.blocks) reps.push_back(restrict_to(sq.vv, b.isometry.matrix));
  const double order = static_cast<double>(sq.vv.group()->order());
  double schur = 0.0;
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = 0; b < reps.size(); ++b)
      for (std::size_t i = 0; i < reps[a].dim(); ++i)
        for (std::size_t j = 0; j < reps[a].dim(); ++j)
          for (std::size_t k = 0; k < reps[b].dim(); ++k)
            for (std::size_t l = 0; l < reps[b].dim(); ++l) {
              Complex s = 0.0;
              for (std::size_t g = 0; g < reps[a].group()->order(); ++g)
                s += reps[a].image(g)(i, j) * std::conj(reps[b].image(g)(k, l));
              const double expected = (a == b && i == k && j == l) ? 1.0 / static_cast<double>(reps[a].dim()) : 0.0;
              schur = std::max(schur, std::abs(s / order - expected));
            }
  c.le("Schur orthogonality", schur, 1e-10);

  // same report text across repeated runs and thread counts
  const auto scratch = (std::filesystem::temp_directory_path() / "covkit_acceptance").string();
  std::filesystem::create_directories(scratch);
  const std::vector<std::vector<std::string>> runs = {
      {"covkit", "report", "--group", "symmetric", "--n", "5", "--seed", "3"},
      {"covkit", "report", "--group", "suq2", "--q", "0.5", "--k", "2", "--l", "2", "--seed", "3"},
      {"covkit", "report", "--group", "weyl", "--orders", "2,3", "--seed", "3"},
      {"covkit", "report", "--group", "fermionic", "--modes", "2", "--seed", "3"},
      {"covkit", "sample", "--group", "weyl", "--orders", "4", "--seed", "17", "--out", scratch},
  };
  const int threads = omp_get_max_threads();
  std::size_t same = 0;
  for (const auto& args : runs) {
    omp_set_num_threads(1);
    const auto a = report_text(args);
    omp_set_num_threads(4);
    const auto b = report_text(args);
    const auto d = report_text(args);
    same += a == b && b == d && a.rfind("0\n", 0) == 0;
  }
  omp_set_num_threads(threads);
  c.that("reports reproducible (" + std::to_string(same) + "/" + std::to_string(runs.size()) + ")", same == runs.size());
  c.note("round trip " + Check::num(trip) + ", twirl " + Check::num(idem) + ", Schur " + Check::num(schur));
  return c;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Check()>> criteria[] = {
      {"S_4 golden channels", criterion1},
      {"S_n decomposition dims", criterion2},
      {"S_n^+ collapse", criterion3},
      {"Choi = scaled projection", criterion4},
      {"SU_q(2) qubit suite", criterion5},
      {"Q-matrix compatibility", criterion6},
      {"no-TP obstruction", criterion7},
      {"Kac adjoint", criterion8},
      {"Weyl/fermionic extreme points", criterion9},
      {"property suites", criterion10},
  };
  int failed = 0, index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    Check c;
    try {
      c = fn();
    } catch (const std::exception& e) {
      c.fail(std::string("exception: ") + e.what());
    }
    std::printf("%s %d %s: %s\n", c.ok ? "PASS" : "FAIL", index, name, c.detail.c_str());
    std::fflush(stdout);
    failed += !c.ok;
  }
  return failed == 0 ? 0 : 1;
}
