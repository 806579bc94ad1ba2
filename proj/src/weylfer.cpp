#include "covkit/weylfer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "covkit/error.hpp"

namespace covkit {

AbelianGroup::AbelianGroup(std::vector<int> orders) : orders_(std::move(orders)) {
  if (orders_.empty()) throw InvalidArgument("abelian group needs at least one factor");
  for (int d : orders_) {
    if (d < 2) throw InvalidArgument("cyclic orders must be >= 2");
    order_ *= static_cast<std::size_t>(d);
    if (order_ > (1u << 24)) throw InvalidArgument("abelian group too large");
  }
}

std::vector<int> AbelianGroup::coords(std::size_t index) const {
  std::vector<int> c(orders_.size());
  for (std::size_t k = orders_.size(); k-- > 0;) {
    c[k] = static_cast<int>(index % orders_[k]);
    index /= orders_[k];
  }
  return c;
}

std::size_t AbelianGroup::index(const std::vector<int>& c) const {
  std::size_t idx = 0;
  for (std::size_t k = 0; k < orders_.size(); ++k) {
    const int d = orders_[k];
    idx = idx * d + static_cast<std::size_t>(((c[k] % d) + d) % d);
  }
  return idx;
}

std::size_t AbelianGroup::add(std::size_t a, std::size_t b) const {
  auto ca = coords(a);
  const auto cb = coords(b);
  for (std::size_t k = 0; k < ca.size(); ++k) ca[k] += cb[k];
  return index(ca);
}

std::size_t AbelianGroup::negate(std::size_t a) const {
  auto c = coords(a);
  for (auto& x : c) x = -x;
  return index(c);
}

CocycleSystem::CocycleSystem(CocycleKind kind, AbelianGroup g, std::size_t dim)
    : kind_(kind), group_(std::move(g)), dim_(dim) {
  for (std::size_t k = 0; k < group_.orders().size(); ++k) {
    std::vector<int> c(group_.orders().size(), 0);
    c[k] = 1;
    generators_.push_back(group_.index(c));
  }
}

Complex CocycleSystem::sigma(std::size_t x, std::size_t y) const {
  const auto cx = group_.coords(x), cy = group_.coords(y);
  if (kind_ == CocycleKind::fermionic) {
    int s = 0;
    for (std::size_t i = 0; i < cx.size(); ++i)
      for (std::size_t j = 0; j < i; ++j) s += cx[i] * cy[j];
    return s % 2 ? -1.0 : 1.0;
  }
  // sigma((x, gamma), (y, delta)) = gamma(y)
  double phase = 0.0;
  for (std::size_t j = 0; j < half_; ++j)
    phase += static_cast<double>(cx[half_ + j] * cy[j]) / group_.orders()[j];
  phase -= std::floor(phase);
  return std::polar(1.0, 2.0 * std::numbers::pi * phase);
}

std::string CocycleSystem::label(std::size_t x) const {
  const auto c = group_.coords(x);
  auto tuple = [&](std::size_t lo, std::size_t hi) {
    std::string s = "(";
    for (std::size_t k = lo; k < hi; ++k) s += (k > lo ? "," : "") + std::to_string(c[k]);
    return s + ")";
  };
  if (kind_ == CocycleKind::fermionic) return tuple(0, c.size());
  return "x=" + tuple(0, half_) + ";gamma=" + tuple(half_, c.size());
}

CocycleSystem weyl_system(const std::vector<int>& orders) {
  const AbelianGroup f(orders);
  std::vector<int> doubled = orders;
  doubled.insert(doubled.end(), orders.begin(), orders.end());
  const std::size_t n = f.order();
  CocycleSystem sys(CocycleKind::weyl, AbelianGroup(doubled), n);
  sys.half_ = orders.size();
  sys.ops_.reserve(n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t g = 0; g < n; ++g) {
      const auto cg = f.coords(g);
      ComplexMatrix w(n, n);
      for (std::size_t u = 0; u < n; ++u) {
        const auto cu = f.coords(u);
        double phase = 0.0;
        for (std::size_t j = 0; j < orders.size(); ++j) phase += static_cast<double>(cg[j] * cu[j]) / orders[j];
        phase -= std::floor(phase);
        // (T_x M_gamma) delta_u = gamma(u) delta_{u+x}
        w(f.add(u, x), u) = std::polar(1.0, 2.0 * std::numbers::pi * phase);
      }
      sys.ops_.push_back(std::move(w));
    }
  return sys;
}

std::vector<ComplexMatrix> majorana_operators(int modes) {
  if (modes < 1 || modes > 10) throw InvalidArgument("fermionic mode count must be in [1, 10]");
  const ComplexMatrix I = ComplexMatrix::identity(2);
  const ComplexMatrix X{{0.0, 1.0}, {1.0, 0.0}};
  const ComplexMatrix Y{{0.0, Complex(0, -1)}, {Complex(0, 1), 0.0}};
  const ComplexMatrix Z{{1.0, 0.0}, {0.0, -1.0}};
  std::vector<ComplexMatrix> out;
  for (int j = 0; j < modes; ++j)
    for (const ComplexMatrix* p : {&X, &Y}) {
      ComplexMatrix m = ComplexMatrix::identity(1);
      for (int site = 0; site < modes; ++site) m = kron(m, site < j ? Z : site == j ? *p : I);
      out.push_back(std::move(m));
    }
  return out;
}

CocycleSystem fermionic_system(int modes) {
  const auto c = majorana_operators(modes);
  const std::size_t dim = std::size_t{1} << modes;
  CocycleSystem sys(CocycleKind::fermionic, AbelianGroup(std::vector<int>(2 * modes, 2)), dim);
  for (std::size_t x = 0; x < sys.size(); ++x) {
    const auto cx = sys.group().coords(x);
    ComplexMatrix w = ComplexMatrix::identity(dim);
    for (std::size_t i = 0; i < cx.size(); ++i)
      if (cx[i]) w = w * c[i];
    sys.ops_.push_back(std::move(w));
  }
  return sys;
}

Complex character(const CocycleSystem& sys, std::size_t x, std::size_t y) {
  return std::conj(sys.sigma(x, y)) * sys.sigma(y, x);
}

namespace {

ComplexMatrix bell_vector(const CocycleSystem& sys, std::size_t x) {
  const std::size_t d = sys.hilbert_dim();
  const double s = 1.0 / std::sqrt(static_cast<double>(d));
  const ComplexMatrix& w = sys.W(x);
  ComplexMatrix f(d * d, 1);
  for (std::size_t y = 0; y < d; ++y)
    for (std::size_t b = 0; b < d; ++b) f(y * d + b, 0) = s * w(b, y);
  return f;
}

}  // namespace

BellBasis bell_basis(const CocycleSystem& sys, Tolerance tol) {
  BellBasis out;
  for (std::size_t x = 0; x < sys.size(); ++x) {
    out.vectors.push_back(bell_vector(sys, x));
    std::vector<Complex> chi;
    for (std::size_t y : sys.generators()) chi.push_back(character(sys, x, y));
    out.characters.push_back(std::move(chi));
  }
  for (std::size_t a = 0; a < sys.size(); ++a)
    for (std::size_t b = 0; b < a; ++b) {
      double diff = 0.0;
      for (std::size_t k = 0; k < out.characters[a].size(); ++k)
        diff = std::max(diff, std::abs(out.characters[a][k] - out.characters[b][k]));
      if (diff <= tol.eps)
        throw DegenerateCharacters("elements " + sys.label(a) + " and " + sys.label(b) + " share a character");
    }
  return out;
}

Channel unitary_conj_channel(const CocycleSystem& sys, std::size_t x) {
  if (x >= sys.size()) throw InvalidArgument("group element out of range");
  const ComplexMatrix& w = sys.W(x);
  const ComplexMatrix wd = w.adjoint();
  return choi_from_action([&](const ComplexMatrix& a) { return w * a * wd; }, sys.hilbert_dim(), sys.hilbert_dim());
}

Channel mixture(const CocycleSystem& sys, const std::vector<double>& p, Tolerance tol) {
  if (p.size() != sys.size()) throw InvalidArgument("distribution has the wrong length");
  double total = 0.0;
  for (double x : p) {
    if (x < -1e-12) throw InvalidArgument("distribution has a negative entry");
    total += x;
  }
  if (std::abs(total - 1.0) > tol.eps) throw InvalidArgument("distribution does not sum to 1");
  const std::size_t d = sys.hilbert_dim();
  ComplexMatrix c(d * d, d * d);
  for (std::size_t x = 0; x < sys.size(); ++x) {
    if (p[x] <= 0.0) continue;
    const ComplexMatrix f = bell_vector(sys, x);
    c += (p[x] * static_cast<double>(d)) * (f * f.adjoint());
  }
  return Channel(d, d, std::move(c));
}

Recovery recover_distribution(const Channel& ch, const CocycleSystem& sys, Tolerance tol) {
  const std::size_t d = sys.hilbert_dim();
  if (ch.in_dim != d || ch.out_dim != d) throw DimensionError("channel does not act on the system's Hilbert space");
  Recovery r;
  ComplexMatrix rebuilt(d * d, d * d);
  double total = 0.0;
  bool nonnegative = true;
  for (std::size_t x = 0; x < sys.size(); ++x) {
    const ComplexMatrix f = bell_vector(sys, x);
    const double px = (f.adjoint() * ch.choi * f)(0, 0).real() / static_cast<double>(d);
    r.p.push_back(px);
    total += px;
    nonnegative = nonnegative && px >= -tol.eps;
    rebuilt += (px * static_cast<double>(d)) * (f * f.adjoint());
  }
  r.residual = max_abs_diff(ch.choi, rebuilt);
  r.distribution = nonnegative && std::abs(total - 1.0) <= tol.eps;
  r.covariant = r.residual <= tol.eps && r.distribution;
  return r;
}

double projective_covariance_residual(const Channel& ch, const CocycleSystem& sys) {
  const std::size_t d = sys.hilbert_dim();
  if (ch.in_dim != d || ch.out_dim != d) throw DimensionError("channel does not act on the system's Hilbert space");
  double worst = 0.0;
  for (std::size_t x = 0; x < sys.size(); ++x) {
    const ComplexMatrix& w = sys.W(x);
    const ComplexMatrix wd = w.adjoint();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const ComplexMatrix e = ComplexMatrix::unit(d, d, i, j);
        worst = std::max(worst, max_abs_diff(apply(ch, w * e * wd), w * apply(ch, e) * wd));
      }
  }
  return worst;
}

}  // namespace covkit
