#include "covkit/finrep.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>

#include "covkit/error.hpp"
#include "covkit/kernels.hpp"
#include "covkit/rng.hpp"

namespace covkit {

Permutation compose(const Permutation& g, const Permutation& h) {
  if (g.size() != h.size()) throw DimensionError("permutations of different degree");
  Permutation out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) out[x] = g[h[x]];
  return out;
}

Permutation inverse(const Permutation& g) {
  Permutation out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) out[g[x]] = static_cast<std::uint32_t>(x);
  return out;
}

Permutation transposition(std::size_t n, std::size_t a, std::size_t b) {
  const std::size_t pts[] = {a, b};
  return cycle(n, pts);
}

Permutation cycle(std::size_t n, std::span<const std::size_t> points) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0u);
  for (std::size_t k = 0; k < points.size(); ++k) {
    const std::size_t from = points[k], to = points[(k + 1) % points.size()];
    if (from < 1 || from > n || to < 1 || to > n) throw InvalidArgument("cycle point out of range");
    p[from - 1] = static_cast<std::uint32_t>(to - 1);
  }
  return p;
}

namespace {

void check_permutation(const Permutation& p, std::size_t degree) {
  if (p.size() != degree) throw InvalidArgument("generator has the wrong degree");
  std::vector<char> seen(degree, 0);
  for (auto x : p) {
    if (x >= degree || seen[x]) throw InvalidArgument("generator is not a bijection");
    seen[x] = 1;
  }
}

}  // namespace

std::size_t FiniteGroup::Hash::operator()(const Permutation& p) const {
  std::size_t h = 1469598103934665603ull;
  for (auto x : p) h = (h ^ x) * 1099511628211ull;
  return h;
}

std::shared_ptr<const FiniteGroup> FiniteGroup::from_permutations(std::size_t degree, std::vector<Permutation> generators,
                                                                  std::size_t cap) {
  if (degree == 0) throw InvalidArgument("permutation degree must be positive");
  for (const auto& g : generators) check_permutation(g, degree);
  auto grp = std::shared_ptr<FiniteGroup>(new FiniteGroup());
  grp->degree_ = degree;
  grp->generators_ = std::move(generators);

  Permutation id(degree);
  std::iota(id.begin(), id.end(), 0u);
  grp->elements_.push_back(id);
  grp->parent_.push_back(0);
  grp->parent_gen_.push_back(0);
  grp->index_.emplace(id, 0);
  for (std::size_t head = 0; head < grp->elements_.size(); ++head) {
    for (std::size_t s = 0; s < grp->generators_.size(); ++s) {
      Permutation g = compose(grp->generators_[s], grp->elements_[head]);
      if (grp->index_.contains(g)) continue;
      if (grp->elements_.size() >= cap) throw GroupTooLarge("group closure exceeds the element cap");
      grp->index_.emplace(g, grp->elements_.size());
      grp->elements_.push_back(std::move(g));
      grp->parent_.push_back(head);
      grp->parent_gen_.push_back(s);
    }
  }
  for (const auto& g : grp->generators_) grp->generator_index_.push_back(grp->index_.at(g));
  grp->inverse_.resize(grp->elements_.size());
  for (std::size_t i = 0; i < grp->elements_.size(); ++i)
    grp->inverse_[i] = grp->index_.at(covkit::inverse(grp->elements_[i]));
  return grp;
}

std::optional<std::size_t> FiniteGroup::index_of(const Permutation& p) const {
  auto it = index_.find(p);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t FiniteGroup::multiply(std::size_t a, std::size_t b) const {
  return index_.at(compose(elements_[a], elements_[b]));
}

GroupPtr symmetric_group(std::size_t n) {
  if (n < 2) throw InvalidArgument("symmetric group needs n >= 2");
  std::vector<Permutation> gens;
  for (std::size_t k = 1; k < n; ++k) gens.push_back(transposition(n, k, k + 1));
  return FiniteGroup::from_permutations(n, std::move(gens));
}

FiniteGroupRep::FiniteGroupRep(GroupPtr group, std::size_t dim, std::vector<ComplexMatrix> images)
    : group_(std::move(group)), dim_(dim), images_(std::move(images)) {}

double FiniteGroupRep::homomorphism_defect() const {
  double worst = 0.0;
  const auto& gens = group_->generators();
  for (std::size_t s : gens) {
    worst = std::max(worst, max_abs_diff(images_[s].adjoint() * images_[s], ComplexMatrix::identity(dim_)));
    for (std::size_t g = 0; g < group_->order(); ++g)
      worst = std::max(worst, max_abs_diff(images_[s] * images_[g], images_[group_->multiply(s, g)]));
  }
  return worst;
}

namespace {

constexpr double kRepTol = 1e-9;

void require_rep(const FiniteGroupRep& r) {
  if (r.homomorphism_defect() > kRepTol) throw InvalidArgument("images do not form a unitary representation");
}

void require_same_group(const FiniteGroupRep& u, const FiniteGroupRep& v) {
  if (u.group() != v.group()) throw InvalidArgument("representations of different groups");
}

}  // namespace

FiniteGroupRep FiniteGroupRep::from_generators(GroupPtr group, std::vector<ComplexMatrix> generator_images) {
  if (generator_images.size() != group->generators().size())
    throw InvalidArgument("need one image per group generator");
  const std::size_t d = generator_images.empty() ? 1 : generator_images.front().rows();
  for (const auto& m : generator_images)
    if (m.rows() != d || m.cols() != d) throw DimensionError("generator images differ in size");
  std::vector<ComplexMatrix> images(group->order());
  images[0] = ComplexMatrix::identity(d);
  for (std::size_t i = 1; i < group->order(); ++i)
    images[i] = generator_images[group->parent_generator(i)] * images[group->parent(i)];
  FiniteGroupRep r(std::move(group), d, std::move(images));
  require_rep(r);
  return r;
}

FiniteGroupRep FiniteGroupRep::from_function(GroupPtr group, std::size_t dim,
                                             const std::function<ComplexMatrix(const Permutation&)>& image) {
  std::vector<ComplexMatrix> images(group->order());
  for (std::size_t i = 0; i < group->order(); ++i) {
    images[i] = image(group->element(i));
    if (images[i].rows() != dim || images[i].cols() != dim) throw DimensionError("image has the wrong size");
  }
  FiniteGroupRep r(std::move(group), dim, std::move(images));
  require_rep(r);
  return r;
}

FiniteGroupRep trivial_rep(GroupPtr group) {
  return FiniteGroupRep::from_function(std::move(group), 1, [](const Permutation&) { return ComplexMatrix::identity(1); });
}

FiniteGroupRep sign_rep(GroupPtr group) {
  return FiniteGroupRep::from_function(std::move(group), 1, [](const Permutation& p) {
    std::size_t inversions = 0;
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = a + 1; b < p.size(); ++b) inversions += p[a] > p[b];
    return ComplexMatrix{{inversions % 2 ? -1.0 : 1.0}};
  });
}

FiniteGroupRep permutation_rep(GroupPtr group) {
  const std::size_t n = group->degree();
  return FiniteGroupRep::from_function(std::move(group), n, [n](const Permutation& p) {
    ComplexMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(p[k], k) = 1.0;
    return m;
  });
}

ComplexMatrix standard_basis(std::size_t n) {
  if (n < 2) throw InvalidArgument("standard representation needs n >= 2");
  ComplexMatrix b(n, n - 1);
  if (n == 4) {
    const double f[3][4] = {{1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    for (std::size_t k = 0; k < 3; ++k)
      for (std::size_t i = 0; i < 4; ++i) b(i, k) = 0.5 * f[k][i];
    return b;
  }
  // Helmert basis
  for (std::size_t k = 1; k < n; ++k) {
    const double s = 1.0 / std::sqrt(static_cast<double>(k * (k + 1)));
    for (std::size_t i = 0; i < k; ++i) b(i, k - 1) = s;
    b(k, k - 1) = -static_cast<double>(k) * s;
  }
  return b;
}

FiniteGroupRep standard_rep(GroupPtr group) {
  const ComplexMatrix w = standard_basis(group->degree());
  return restrict_to(permutation_rep(std::move(group)), w);
}

FiniteGroupRep standard_rep(std::size_t n) { return standard_rep(symmetric_group(n)); }

FiniteGroupRep tensor(const FiniteGroupRep& u, const FiniteGroupRep& v) {
  require_same_group(u, v);
  std::vector<ComplexMatrix> images(u.group()->order());
  for (std::size_t g = 0; g < images.size(); ++g) images[g] = kron(u.image(g), v.image(g));
  return FiniteGroupRep::from_function(u.group(), u.dim() * v.dim(),
                                       [&](const Permutation& p) { return images[*u.group()->index_of(p)]; });
}

FiniteGroupRep conj(const FiniteGroupRep& u) {
  return FiniteGroupRep::from_function(u.group(), u.dim(),
                                       [&](const Permutation& p) { return u.image(*u.group()->index_of(p)).conjugate(); });
}

FiniteGroupRep direct_sum(const FiniteGroupRep& u, const FiniteGroupRep& v) {
  require_same_group(u, v);
  const std::size_t d = u.dim() + v.dim();
  return FiniteGroupRep::from_function(u.group(), d, [&](const Permutation& p) {
    const std::size_t g = *u.group()->index_of(p);
    ComplexMatrix m(d, d);
    m.set_block(0, 0, u.image(g));
    m.set_block(u.dim(), u.dim(), v.image(g));
    return m;
  });
}

FiniteGroupRep restrict_to(const FiniteGroupRep& u, const ComplexMatrix& w) {
  if (w.rows() != u.dim()) throw DimensionError("restriction isometry does not match the representation");
  const ComplexMatrix wd = w.adjoint();
  return FiniteGroupRep::from_function(u.group(), w.cols(), [&](const Permutation& p) {
    return wd * u.image(*u.group()->index_of(p)) * w;
  });
}

ComplexMatrix twirl(const FiniteGroupRep& u, const FiniteGroupRep& v, const ComplexMatrix& x) {
  require_same_group(u, v);
  if (x.rows() != v.dim() || x.cols() != u.dim()) throw DimensionError("twirl argument must be dim(v) x dim(u)");
  const std::size_t order = u.group()->order();
  ComplexMatrix s = kernels::ordered_sum(order, v.dim(), u.dim(), [&](std::size_t g) {
    return v.image(g) * x * u.image(g).adjoint();
  });
  return (1.0 / static_cast<double>(order)) * s;
}

ComplexMatrix twirl_superoperator(const FiniteGroupRep& u, const FiniteGroupRep& v) {
  require_same_group(u, v);
  const std::size_t order = u.group()->order();
  const std::size_t n = u.dim() * v.dim();
  ComplexMatrix s = kernels::ordered_sum(order, n, n, [&](std::size_t g) {
    return kron(v.image(g), u.image(g).conjugate());
  });
  return (1.0 / static_cast<double>(order)) * s;
}

std::vector<ComplexMatrix> hom_basis(const FiniteGroupRep& u, const FiniteGroupRep& v, Tolerance tol) {
  const ComplexMatrix t = twirl_superoperator(u, v);
  // t is the orthogonal projection onto vec(Hom(u, v)); its eigenvalues are 0 or 1.
  const auto eig = eig_hermitian(0.5 * (t + t.adjoint()), Tolerance(std::max(tol.eps, 1e-9)));
  std::vector<ComplexMatrix> out;
  for (std::size_t k = eig.values.size(); k-- > 0;) {
    if (eig.values[k] < 0.5) break;
    out.push_back(unvec(eig.vectors.col(k), v.dim(), u.dim()));
  }
  std::reverse(out.begin(), out.end());
  return out;
}

ComplexMatrix DecompBlock::projection() const { return isometry.matrix * isometry.matrix.adjoint(); }

namespace {

struct Attempt {
  std::vector<DecompBlock> blocks;
  bool all_irreducible = true;
};

Attempt split_once(const FiniteGroupRep& u, std::uint64_t seed, Tolerance tol) {
  Rng rng(seed);
  const ComplexMatrix c = twirl(u, u, random_hermitian(rng, u.dim()));
  const auto eig = eig_hermitian(0.5 * (c + c.adjoint()), Tolerance(std::max(tol.eps, 1e-9)));
  double scale = 1.0;
  for (double x : eig.values) scale = std::max(scale, std::abs(x));
  const double gap = 1e-7 * scale;

  Attempt out;
  std::size_t start = 0;
  for (std::size_t k = 1; k <= eig.values.size(); ++k) {
    if (k < eig.values.size() && eig.values[k] - eig.values[k - 1] <= gap) continue;
    const ComplexMatrix w = eig.vectors.block(0, start, u.dim(), k - start);
    const FiniteGroupRep block = restrict_to(u, w);
    if (hom_basis(block, block, tol).size() != 1) out.all_irreducible = false;
    out.blocks.push_back(DecompBlock{Isometry(w), k - start, {}});
    start = k;
  }
  return out;
}

}  // namespace

std::vector<DecompBlock> decompose(const FiniteGroupRep& u, std::uint64_t seed, Tolerance tol) {
  Attempt a = split_once(u, seed, tol);
  if (!a.all_irreducible) a = split_once(u, seed ^ 0x9e3779b97f4a7c15ull, tol);
  if (!a.all_irreducible) {
    // A random commutant element leaves a reducible eigenspace only when a
    // block type repeats (or by a measure-zero collision twice in a row).
    throw MultiplicityDetected("decomposition has a reducible eigenspace after reseeding; representation is not multiplicity-free");
  }
  auto& blocks = a.blocks;
  std::stable_sort(blocks.begin(), blocks.end(), [](const DecompBlock& x, const DecompBlock& y) { return x.dim < y.dim; });
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      if (blocks[i].dim != blocks[j].dim) continue;
      const auto bi = restrict_to(u, blocks[i].isometry.matrix);
      const auto bj = restrict_to(u, blocks[j].isometry.matrix);
      if (!hom_basis(bj, bi, tol).empty())
        throw MultiplicityDetected("blocks " + std::to_string(j) + " and " + std::to_string(i) + " are equivalent");
    }
  for (std::size_t i = 0; i < blocks.size(); ++i) blocks[i].label = "block" + std::to_string(i);
  return blocks;
}

std::vector<DecompBlock> label_square_blocks(const FiniteGroupRep& v, std::vector<DecompBlock> blocks, std::size_t n,
                                             Tolerance tol) {
  if (n < 4) throw InvalidArgument("the four-block labeling needs n >= 4");
  if (blocks.size() != 4) throw DecompositionError("expected four blocks in V (x) V");
  const FiniteGroupRep vv = tensor(v, v);
  const std::size_t dims[4] = {1, n - 1, n * (n - 3) / 2, (n - 1) * (n - 2) / 2};
  const std::string labels[4] = {"(" + std::to_string(n) + ")", "(" + std::to_string(n - 1) + ",1)",
                                 "(" + std::to_string(n - 2) + ",2)", "(" + std::to_string(n - 2) + ",1,1)"};
  std::vector<DecompBlock> out(4);
  std::vector<char> used(4, 0);
  auto take = [&](std::size_t slot, auto&& accept) {
    for (std::size_t b = 0; b < 4; ++b) {
      if (used[b] || blocks[b].dim != dims[slot] || !accept(blocks[b])) continue;
      used[b] = 1;
      out[slot] = blocks[b];
      out[slot].label = labels[slot];
      return;
    }
    throw DecompositionError("no block matches " + labels[slot]);
  };
  auto always = [](const DecompBlock&) { return true; };
  take(0, always);
  take(1, [&](const DecompBlock& b) { return hom_basis(v, restrict_to(vv, b.isometry.matrix), tol).size() == 1; });
  take(2, always);
  take(3, always);
  return out;
}

SnSquare sn_square_decomposition(std::size_t n, std::uint64_t seed, Tolerance tol) {
  if (n < 4) throw InvalidArgument("S_n catalog needs n >= 4");
  FiniteGroupRep v = standard_rep(n);
  FiniteGroupRep vv = tensor(v, v);
  auto blocks = label_square_blocks(v, decompose(vv, seed, tol), n, tol);
  return SnSquare{std::move(v), std::move(vv), std::move(blocks)};
}

namespace {

CGComponent cg_component(const FiniteGroupRep& alpha, const FiniteGroupRep& beta, const FiniteGroupRep& ab,
                         const DecompBlock& block, Tolerance tol) {
  FiniteGroupRep gamma = conj(restrict_to(ab, block.isometry.matrix));
  const auto hom = hom_basis(alpha, tensor(beta, gamma), tol);
  if (hom.size() != 1) throw NullSpaceDimension("CG intertwiner space for " + block.label + " is not one-dimensional", hom.size());
  const ComplexMatrix v = fix_phase(std::sqrt(static_cast<double>(alpha.dim())) * hom.front());
  Isometry iso(v, "alpha", {"beta", block.label});
  Channel ch = cg_map(iso, QWeight::identity(gamma.dim()), beta.dim(), gamma.dim());
  return CGComponent{block, std::move(gamma), std::move(iso), std::move(ch)};
}

}  // namespace

std::vector<CGComponent> cg_family(const FiniteGroupRep& alpha, const FiniteGroupRep& beta, std::uint64_t seed,
                                   Tolerance tol) {
  const FiniteGroupRep ab = tensor(conj(alpha), beta);
  std::vector<CGComponent> out;
  for (const auto& block : decompose(ab, seed, tol)) out.push_back(cg_component(alpha, beta, ab, block, tol));
  return out;
}

SnCatalog sn_catalog(std::size_t n, std::uint64_t seed, Tolerance tol) {
  SnCatalog cat{sn_square_decomposition(n, seed, tol), {}};
  // V is real, so conj(V) (x) V is V (x) V entrywise.
  const FiniteGroupRep ab = tensor(conj(cat.square.v), cat.square.v);
  for (const auto& block : cat.square.blocks)
    cat.components.push_back(cg_component(cat.square.v, cat.square.v, ab, block, tol));
  return cat;
}

std::vector<Channel> sn_extreme_channels(std::size_t n, std::uint64_t seed, Tolerance tol) {
  std::vector<Channel> out;
  for (auto& c : sn_catalog(n, seed, tol).components) out.push_back(std::move(c.channel));
  return out;
}

std::pair<double, double> snplus_weights(std::size_t n) {
  const double nn = static_cast<double>(n);
  const double denom = 2.0 * (nn * nn - 3.0 * nn + 1.0);
  return {nn * (nn - 3.0) / denom, (nn - 1.0) * (nn - 2.0) / denom};
}

std::vector<Channel> snplus_extreme_channels(std::size_t n, std::uint64_t seed, Tolerance tol) {
  auto sn = sn_extreme_channels(n, seed, tol);
  const auto [w3, w4] = snplus_weights(n);
  const Channel pair[2] = {sn[2], sn[3]};
  const double weights[2] = {w3, w4};
  return {sn[0], sn[1], convex_mix(pair, weights, tol)};
}

double covariance_residual(const Channel& ch, const FiniteGroupRep& u, const FiniteGroupRep& v) {
  require_same_group(u, v);
  if (u.dim() != ch.in_dim || v.dim() != ch.out_dim) throw DimensionError("representations do not match the channel");
  double worst = 0.0;
  for (std::size_t k = 0; k < u.group()->generators().size(); ++k) {
    const ComplexMatrix& ug = u.generator_image(k);
    const ComplexMatrix& vg = v.generator_image(k);
    for (std::size_t i = 0; i < ch.in_dim; ++i)
      for (std::size_t j = 0; j < ch.in_dim; ++j) {
        const ComplexMatrix e = ComplexMatrix::unit(ch.in_dim, ch.in_dim, i, j);
        const ComplexMatrix lhs = apply(ch, ug * e * ug.adjoint());
        const ComplexMatrix rhs = vg * apply(ch, e) * vg.adjoint();
        worst = std::max(worst, max_abs_diff(lhs, rhs));
      }
  }
  return worst;
}

}  // namespace covkit
