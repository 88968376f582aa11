#include "autfn/flat.hpp"

#include <numeric>

#include "autfn/error.hpp"

namespace autfn {

TranslationAction::TranslationAction(std::size_t dim, std::vector<QVector> vectors)
    : dim_(dim), vectors_(std::move(vectors)) {
  for (auto const& v : vectors_) {
    if (v.size() != dim_) {
      throw PreconditionError("translation vector of dimension " + std::to_string(v.size()) + ", expected "
                              + std::to_string(dim_));
    }
  }
}

QVector TranslationAction::translation(std::vector<long> const& exponents) const {
  if (exponents.size() != vectors_.size()) {
    throw PreconditionError("exponent vector length does not match the rank");
  }
  QVector t(dim_, Rational(0));
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    t = t + Rational(exponents[i]) * vectors_[i];
  }
  return t;
}

AffineIsometry::AffineIsometry(std::size_t block, std::vector<std::size_t> perm, std::vector<int> signs,
                               QVector translation)
    : block_(block), perm_(std::move(perm)), signs_(std::move(signs)), translation_(std::move(translation)) {
  std::size_t n = perm_.size();
  if (block_ == 0 || n == 0 || n % block_ != 0) {
    throw PreconditionError("dimension must be a positive multiple of the block size");
  }
  if (signs_.size() != n || translation_.size() != n) {
    throw PreconditionError("inconsistent dimensions in affine isometry");
  }
  std::vector<bool> hit(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (perm_[i] >= n || hit[perm_[i]]) {
      throw PreconditionError("linear part is not a permutation");
    }
    hit[perm_[i]] = true;
    if (signs_[i] != 1 && signs_[i] != -1) {
      throw PreconditionError("signs must be +1 or -1");
    }
  }
  for (std::size_t b = 0; b < n / block_; ++b) {
    std::size_t target = perm_[b * block_] / block_;
    for (std::size_t c = 1; c < block_; ++c) {
      if (perm_[b * block_ + c] / block_ != target) {
        throw PreconditionError("linear part does not permute blocks");
      }
    }
  }
}

AffineIsometry AffineIsometry::identity(std::size_t dim, std::size_t block) {
  std::vector<std::size_t> perm(dim);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  return {block, std::move(perm), std::vector<int>(dim, 1), QVector(dim, Rational(0))};
}

AffineIsometry AffineIsometry::translation_by(QVector t) {
  auto g = identity(t.size(), t.size());
  g.translation_ = std::move(t);
  return g;
}

AffineIsometry AffineIsometry::block_cycle(std::size_t d, std::size_t k, QVector t) {
  std::vector<std::size_t> perm(d * k);
  for (std::size_t i = 0; i < d * k; ++i) {
    perm[i] = ((i / k + 1) % d) * k + i % k;
  }
  return {k, std::move(perm), std::vector<int>(d * k, 1), std::move(t)};
}

QVector AffineIsometry::linear(QVector const& x) const {
  if (x.size() != dim()) {
    throw PreconditionError("point dimension does not match the isometry");
  }
  QVector y(dim(), Rational(0));
  for (std::size_t i = 0; i < dim(); ++i) {
    y[perm_[i]] = signs_[i] * x[i];
  }
  return y;
}

QVector AffineIsometry::operator()(QVector const& x) const { return linear(x) + translation_; }

QMatrix AffineIsometry::matrix() const {
  QMatrix m(dim(), QVector(dim(), Rational(0)));
  for (std::size_t i = 0; i < dim(); ++i) {
    m[perm_[i]][i] = signs_[i];
  }
  return m;
}

long AffineIsometry::linear_order() const {
  std::vector<bool> seen(dim(), false);
  long order = 1;
  for (std::size_t start = 0; start < dim(); ++start) {
    if (seen[start]) continue;
    long length = 0;
    int sign = 1;
    std::size_t i = start;
    do {
      seen[i] = true;
      sign *= signs_[i];
      i = perm_[i];
      ++length;
    } while (i != start);
    order = std::lcm(order, sign < 0 ? 2 * length : length);
  }
  return order;
}

AffineIsometry AffineIsometry::inverse() const {
  std::vector<std::size_t> perm(dim());
  std::vector<int> signs(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    perm[perm_[i]] = i;
    signs[perm_[i]] = signs_[i];
  }
  AffineIsometry inv(block_, std::move(perm), std::move(signs), QVector(dim(), Rational(0)));
  inv.translation_ = -inv.linear(translation_);
  return inv;
}

AffineIsometry AffineIsometry::pow(long m) const {
  AffineIsometry base = m < 0 ? inverse() : *this;
  AffineIsometry result = identity(dim(), block_);
  for (long k = m < 0 ? -m : m; k > 0; k >>= 1) {
    if (k & 1) result = compose(result, base);
    base = compose(base, base);
  }
  return result;
}

AffineIsometry compose(AffineIsometry const& f, AffineIsometry const& g) {
  if (f.dim() != g.dim() || f.block() != g.block()) {
    throw PreconditionError("composing isometries of different shape");
  }
  std::size_t n = f.dim();
  std::vector<std::size_t> perm(n);
  std::vector<int> signs(n);
  for (std::size_t i = 0; i < n; ++i) {
    perm[i] = f.perm()[g.perm()[i]];
    signs[i] = g.signs()[i] * f.signs()[g.perm()[i]];
  }
  return {f.block(), std::move(perm), std::move(signs), f(g.translation())};
}

TranslationLength trans_length_sq(AffineIsometry const& g) {
  long m = g.linear_order();
  std::size_t n = g.dim();
  // Projection of t onto Fix(O): the average of O^j t over one period.
  QVector sum(n, Rational(0));
  QVector term = g.translation();
  for (long j = 0; j < m; ++j) {
    sum = sum + term;
    term = g.linear(term);
  }
  TranslationLength out;
  out.axis_translation = Rational(1, m) * sum;
  out.length_sq = dot(out.axis_translation, out.axis_translation);

  // Min(g): solve (I - O) x = t - P t.
  QMatrix a = identity_matrix(n);
  QMatrix o = g.matrix();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] -= o[r][c];
  }
  auto x = solve(a, g.translation() - out.axis_translation);
  if (!x) {
    throw std::logic_error("translation component outside the range of I - O");
  }
  out.witness = *x;
  if (g(out.witness) - out.witness != out.axis_translation) {
    throw std::logic_error("Min-set witness does not realize the translation length");
  }
  return out;
}

namespace {

void check_coset_action(CosetAction const& a) {
  std::size_t d = a.perm.size();
  if (d == 0 || a.cocycle.size() != d) {
    throw PreconditionError("coset action needs one cocycle value per coset");
  }
  std::vector<bool> hit(d, false);
  for (auto p : a.perm) {
    if (p >= d || hit[p]) {
      throw PreconditionError("coset permutation is not a bijection");
    }
    hit[p] = true;
  }
  for (auto const& h : a.cocycle) {
    if (h.dim() != a.cocycle[0].dim() || h.block() != a.cocycle[0].block()) {
      throw PreconditionError("cocycle values have inconsistent dimensions");
    }
  }
}

}  // namespace

AffineIsometry induce(CosetAction const& a) {
  check_coset_action(a);
  std::size_t d = a.perm.size();
  std::size_t k = a.cocycle[0].dim();
  std::vector<std::size_t> perm(d * k);
  std::vector<int> signs(d * k);
  QVector t(d * k, Rational(0));
  for (std::size_t i = 0; i < d; ++i) {
    auto const& h = a.cocycle[i];
    for (std::size_t c = 0; c < k; ++c) {
      perm[i * k + c] = a.perm[i] * k + h.perm()[c];
      signs[i * k + c] = h.signs()[c];
      t[a.perm[i] * k + c] = h.translation()[c];
    }
  }
  return {k, std::move(perm), std::move(signs), std::move(t)};
}

CosetAction compose(CosetAction const& a, CosetAction const& b) {
  check_coset_action(a);
  check_coset_action(b);
  if (a.perm.size() != b.perm.size()) {
    throw PreconditionError("coset actions of different index");
  }
  // a b g_i = a g_{b(i)} h^b_i = g_{a(b(i))} h^a_{b(i)} h^b_i
  CosetAction out;
  for (std::size_t i = 0; i < a.perm.size(); ++i) {
    out.perm.push_back(a.perm[b.perm[i]]);
    out.cocycle.push_back(compose(a.cocycle[b.perm[i]], b.cocycle[i]));
  }
  return out;
}

CosetAction induce_cyclic(std::size_t d, AffineIsometry const& base) {
  if (d == 0) {
    throw PreconditionError("index must be positive");
  }
  CosetAction out;
  for (std::size_t i = 0; i < d; ++i) {
    out.perm.push_back((i + 1) % d);
    out.cocycle.push_back(i + 1 == d ? base : AffineIsometry::identity(base.dim(), base.block()));
  }
  return out;
}

std::optional<AffineIsometry> block_action(AffineIsometry const& g, std::size_t block_index) {
  std::size_t k = g.block();
  if (block_index >= g.block_count()) {
    throw PreconditionError("block index out of range");
  }
  if (g.perm()[block_index * k] / k != block_index) {
    return std::nullopt;
  }
  std::vector<std::size_t> perm(k);
  std::vector<int> signs(k);
  QVector t(k);
  for (std::size_t c = 0; c < k; ++c) {
    perm[c] = g.perm()[block_index * k + c] - block_index * k;
    signs[c] = g.signs()[block_index * k + c];
    t[c] = g.translation()[block_index * k + c];
  }
  return AffineIsometry(k, std::move(perm), std::move(signs), std::move(t));
}

EquidistantCertificate equidistant_forces_zero(QVector const& tau, long p, long q) {
  if (p == 0 || q == 0) {
    throw PreconditionError("multipliers p and q must be nonzero");
  }
  if (p == q) {
    throw PreconditionError("p = q: the two constraints coincide and nonzero solutions exist");
  }
  EquidistantCertificate c;
  c.tau = tau;
  c.p = p;
  c.q = q;
  c.first = {Integer(2 * p), Integer(p) * p};
  c.second = {Integer(2 * q), Integer(q) * q};
  c.multiplier_first = -q;
  c.multiplier_second = p;
  c.eliminant = c.multiplier_first * c.first.norm_coefficient + c.multiplier_second * c.second.norm_coefficient;
  c.conclusion = "a = 0";
  return c;
}

bool validate(EquidistantCertificate const& c) {
  if (c.p == 0 || c.q == 0 || c.p == c.q) return false;
  Integer p = c.p;
  Integer q = c.q;
  bool constraints = c.first.dot_coefficient == 2 * p && c.first.norm_coefficient == p * p
                     && c.second.dot_coefficient == 2 * q && c.second.norm_coefficient == q * q;
  Integer dot_part = c.multiplier_first * c.first.dot_coefficient + c.multiplier_second * c.second.dot_coefficient;
  Integer norm_part =
      c.multiplier_first * c.first.norm_coefficient + c.multiplier_second * c.second.norm_coefficient;
  return constraints && dot_part == 0 && norm_part == c.eliminant && c.eliminant == p * q * (q - p)
         && c.eliminant != 0 && c.conclusion == "a = 0";
}

EquidistantCheck check_equidistant(QVector const& tau, long p, long q, QVector const& a) {
  if (tau.size() != a.size()) {
    throw PreconditionError("tau and a have different dimensions");
  }
  Rational base = dot(tau, tau);
  QVector tp = tau + Rational(p) * a;
  QVector tq = tau + Rational(q) * a;
  return {dot(tp, tp) == base, dot(tq, tq) == base};
}

QVector degenerate_witness(QVector const& tau, long p) {
  if (p == 0) {
    throw PreconditionError("multiplier must be nonzero");
  }
  Rational s(-2, p);
  s.canonicalize();
  return s * tau;
}

bool NielsenFlatReport::pass() const {
  return kernel_is_zero && equal_lengths && octo.pass() && lattice.rank() == 3
         && classification.is_rhombic_dodecahedron;
}

NielsenFlatReport nielsen_flat(long scale) {
  if (scale < 1) {
    throw PreconditionError("scale must be a positive integer");
  }
  Rational s = scale;
  auto vec = [&](long x, long y, long z) { return QVector{s * x, s * y, s * z}; };
  NielsenFlatReport r;
  r.scale = scale;
  r.action = TranslationAction(3, {-vec(1, 1, 0), vec(1, -1, 0), -vec(-1, 0, 1), vec(-1, 0, -1)});
  r.kernel_is_zero = is_zero(r.action.translation(r.kernel_vector));

  auto const& t = r.action.vectors();
  r.length_sq = dot(t[0], t[0]);
  r.equal_lengths = true;
  for (auto const& v : t) r.equal_lengths = r.equal_lengths && dot(v, v) == r.length_sq;

  auto to3 = [](QVector const& v) { return Vec3{v[0], v[1], v[2]}; };
  Vec3 alpha1 = -to3(t[0]);
  Vec3 alpha2 = to3(t[1]);
  Vec3 beta1 = -to3(t[2]);
  Vec3 beta2 = to3(t[3]);
  r.octo = octo_check(alpha1, alpha2, -beta1, -beta2);

  r.lattice = lattice_from({to3(t[0]), to3(t[1]), to3(t[2]), to3(t[3])});
  r.cell = voronoi_cell(r.lattice);
  r.classification = classify(r.cell);
  return r;
}

}  // namespace autfn
