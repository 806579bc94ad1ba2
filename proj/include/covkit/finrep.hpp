#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "covkit/chan.hpp"
#include "covkit/matlin.hpp"

namespace covkit {

// 0-based image list: p[k] is the image of k.
using Permutation = std::vector<std::uint32_t>;

// (g h)(x) = g(h(x))
Permutation compose(const Permutation& g, const Permutation& h);
Permutation inverse(const Permutation& g);
// 1-based cycle notation helpers, e.g. transposition(4, 1, 2) is (12) on {1..4}.
Permutation transposition(std::size_t n, std::size_t a, std::size_t b);
Permutation cycle(std::size_t n, std::span<const std::size_t> points);

class FiniteGroup {
 public:
  static constexpr std::size_t kDefaultCap = 1'000'000;

  // Closure of the generators under composition. Index 0 is the identity.
  static std::shared_ptr<const FiniteGroup> from_permutations(std::size_t degree, std::vector<Permutation> generators,
                                                              std::size_t cap = kDefaultCap);

  std::size_t order() const { return elements_.size(); }
  std::size_t degree() const { return degree_; }
  const Permutation& element(std::size_t i) const { return elements_[i]; }
  std::optional<std::size_t> index_of(const Permutation& p) const;
  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const { return inverse_[a]; }
  std::size_t identity() const { return 0; }
  const std::vector<std::size_t>& generators() const { return generator_index_; }
  const std::vector<Permutation>& generator_permutations() const { return generators_; }

  // BFS tree: element(i) = generator(parent_generator(i)) * element(parent(i)) for i > 0.
  std::size_t parent(std::size_t i) const { return parent_[i]; }
  std::size_t parent_generator(std::size_t i) const { return parent_gen_[i]; }

 private:
  struct Hash {
    std::size_t operator()(const Permutation& p) const;
  };

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<std::size_t> generator_index_;
  std::vector<Permutation> elements_;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> parent_gen_;
  std::unordered_map<Permutation, std::size_t, Hash> index_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr symmetric_group(std::size_t n);

class FiniteGroupRep {
 public:
  // Images of the group's generators, in generator order; the rest are built
  // through the BFS tree. Fails if the result is not a unitary homomorphism.
  static FiniteGroupRep from_generators(GroupPtr group, std::vector<ComplexMatrix> generator_images);
  static FiniteGroupRep from_function(GroupPtr group, std::size_t dim,
                                      const std::function<ComplexMatrix(const Permutation&)>& image);

  const GroupPtr& group() const { return group_; }
  std::size_t dim() const { return dim_; }
  const ComplexMatrix& image(std::size_t g) const { return images_[g]; }
  const ComplexMatrix& generator_image(std::size_t k) const { return images_[group_->generators()[k]]; }
  const std::vector<ComplexMatrix>& images() const { return images_; }

  // max over generators s and elements g of |u(s)u(g) - u(sg)| and unitarity defect
  double homomorphism_defect() const;

 private:
  FiniteGroupRep(GroupPtr group, std::size_t dim, std::vector<ComplexMatrix> images);

  GroupPtr group_;
  std::size_t dim_ = 0;
  std::vector<ComplexMatrix> images_;
};

FiniteGroupRep trivial_rep(GroupPtr group);
FiniteGroupRep sign_rep(GroupPtr group);
FiniteGroupRep permutation_rep(GroupPtr group);
// Permutation representation restricted to the orthogonal complement of (1,...,1).
FiniteGroupRep standard_rep(GroupPtr group);
FiniteGroupRep standard_rep(std::size_t n);
// Columns: the orthonormal basis of the complement used by standard_rep.
ComplexMatrix standard_basis(std::size_t n);

FiniteGroupRep tensor(const FiniteGroupRep& u, const FiniteGroupRep& v);
FiniteGroupRep conj(const FiniteGroupRep& u);
FiniteGroupRep direct_sum(const FiniteGroupRep& u, const FiniteGroupRep& v);
// g -> w^dagger u(g) w for an isometry w onto a u-invariant subspace
FiniteGroupRep restrict_to(const FiniteGroupRep& u, const ComplexMatrix& w);

ComplexMatrix twirl(const FiniteGroupRep& u, const FiniteGroupRep& v, const ComplexMatrix& x);
// (1/|G|) sum_g v(g) (x) conj(u(g)), acting on row-major vec(X)
ComplexMatrix twirl_superoperator(const FiniteGroupRep& u, const FiniteGroupRep& v);
std::vector<ComplexMatrix> hom_basis(const FiniteGroupRep& u, const FiniteGroupRep& v, Tolerance tol = {});

struct DecompBlock {
  Isometry isometry;  // ambient x dim
  std::size_t dim = 0;
  std::string label;

  ComplexMatrix projection() const;
};

std::vector<DecompBlock> decompose(const FiniteGroupRep& u, std::uint64_t seed = 1, Tolerance tol = {});

// V (x) V for S_n, blocks ordered and labeled (n), (n-1,1), (n-2,2), (n-2,1,1).
struct SnSquare {
  FiniteGroupRep v;
  FiniteGroupRep vv;
  std::vector<DecompBlock> blocks;
};
SnSquare sn_square_decomposition(std::size_t n, std::uint64_t seed = 1, Tolerance tol = {});
// Same labeling rule for an arbitrary standard-like rep v of a permutation group.
std::vector<DecompBlock> label_square_blocks(const FiniteGroupRep& v, std::vector<DecompBlock> blocks,
                                             std::size_t n, Tolerance tol = {});

struct CGComponent {
  DecompBlock block;      // block of conj(alpha) (x) beta, carrying gamma-bar
  FiniteGroupRep gamma;   // conjugate of the block rep
  Isometry v;             // in Hom(alpha, beta (x) gamma), phase fixed
  Channel channel;        // Phi^{alpha -> beta}_gamma
};

// Every CG map alpha -> beta, one per block of conj(alpha) (x) beta.
std::vector<CGComponent> cg_family(const FiniteGroupRep& alpha, const FiniteGroupRep& beta, std::uint64_t seed = 1,
                                   Tolerance tol = {});

struct SnCatalog {
  SnSquare square;
  std::vector<CGComponent> components;  // ordered like square.blocks
};
SnCatalog sn_catalog(std::size_t n, std::uint64_t seed = 1, Tolerance tol = {});

std::vector<Channel> sn_extreme_channels(std::size_t n, std::uint64_t seed = 1, Tolerance tol = {});
std::vector<Channel> snplus_extreme_channels(std::size_t n, std::uint64_t seed = 1, Tolerance tol = {});
// Weights of Phi_3 and Phi_4 in the third S_n^+ extreme channel.
std::pair<double, double> snplus_weights(std::size_t n);

double covariance_residual(const Channel& ch, const FiniteGroupRep& u, const FiniteGroupRep& v);

}  // namespace covkit
