#include "spectral/alg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace spectral {

namespace {

std::vector<Rational> zeros(int n) { return std::vector<Rational>(n); }

bool all_zero(const std::vector<Rational>& v) {
  for (const auto& q : v)
    if (!q.is_zero()) return false;
  return true;
}

}  // namespace

// ---------------------------------------------------------------------------
// Alg

Alg::Alg(TowerPtr ctx, std::vector<Rational> coords)
    : ctx_(std::move(ctx)), c_(std::move(coords)) {
  if (!ctx_) throw std::invalid_argument("Alg: null tower for element ctor");
  if (static_cast<int>(c_.size()) != ctx_->dim())
    throw std::invalid_argument("Alg: coordinate size mismatch");
  // Elements of the trivial tower are plain scalars; demote so mixed
  // arithmetic with literal rationals never sees a tower mismatch.
  if (ctx_->num_gens() == 0) ctx_ = nullptr;
}

bool Alg::is_zero() const { return all_zero(c_); }

bool Alg::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return false;
  return true;
}

Rational Alg::rational_part() const {
  if (!is_rational())
    throw std::domain_error("Alg: value is not rational: " + to_string());
  return c_[0];
}

Alg Alg::operator-() const {
  Alg r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

namespace {

// Aligns two operands onto a common tower (scalar promotes to the other
// side's tower); throws on genuinely different towers.
void align(const Alg& a, const Alg& b, TowerPtr* ctx,
           std::vector<Rational>* ca, std::vector<Rational>* cb) {
  if (a.ctx() == b.ctx()) {
    *ctx = a.ctx();
    *ca = a.coords();
    *cb = b.coords();
    return;
  }
  if (a.is_scalar()) {
    *ctx = b.ctx();
    *ca = zeros(b.ctx()->dim());
    (*ca)[0] = a.coords()[0];
    *cb = b.coords();
    return;
  }
  if (b.is_scalar()) {
    *ctx = a.ctx();
    *ca = a.coords();
    *cb = zeros(a.ctx()->dim());
    (*cb)[0] = b.coords()[0];
    return;
  }
  throw std::logic_error("Alg: operands live in different towers");
}

}  // namespace

Alg operator+(const Alg& a, const Alg& b) {
  TowerPtr ctx;
  std::vector<Rational> ca, cb;
  align(a, b, &ctx, &ca, &cb);
  for (size_t i = 0; i < ca.size(); ++i) ca[i] += cb[i];
  if (!ctx) return Alg(ca[0]);
  return Alg(ctx, std::move(ca));
}

Alg operator-(const Alg& a, const Alg& b) { return a + (-b); }

Alg operator*(const Alg& a, const Alg& b) {
  if (a.is_scalar()) return b * a.coords()[0];
  if (b.is_scalar()) return a * b.coords()[0];
  if (a.ctx() != b.ctx())
    throw std::logic_error("Alg: product across different towers");
  return Alg(a.ctx(), a.ctx()->mul_flat(a.coords(), b.coords()));
}

bool operator==(const Alg& a, const Alg& b) {
  TowerPtr ctx;
  std::vector<Rational> ca, cb;
  align(a, b, &ctx, &ca, &cb);
  return ca == cb;
}

Alg Alg::operator*(const Rational& s) const {
  Alg r = *this;
  for (auto& q : r.c_) q *= s;
  return r;
}

Alg Alg::inverse() const {
  if (is_scalar()) return Alg(c_[0].inverse());
  int n = ctx_->dim();
  // Columns of the regular representation of *this.
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> ej = zeros(n);
    ej[j] = Rational(1);
    std::vector<Rational> col = ctx_->mul_flat(c_, ej);
    for (int i = 0; i < n; ++i) m[i][j] = col[i];
  }
  std::vector<Rational> rhs = zeros(n);
  rhs[0] = Rational(1);
  // Gaussian elimination with first-nonzero pivoting.
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!m[r][col].is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0)
      throw std::domain_error("Alg: inverse of zero or zero divisor");
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    Rational inv = m[col][col].inverse();
    for (int c2 = col; c2 < n; ++c2) m[col][c2] *= inv;
    rhs[col] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      Rational f = m[r][col];
      for (int c2 = col; c2 < n; ++c2) m[r][c2] -= f * m[col][c2];
      rhs[r] -= f * rhs[col];
    }
  }
  return Alg(ctx_, std::move(rhs));
}

Rational Alg::trace() const {
  if (is_scalar()) return c_[0];
  Alg cur = *this;
  while (cur.ctx_ && cur.ctx_->num_gens() > 0) cur = cur.trace_top();
  return cur.is_scalar() ? cur.c_[0] : cur.c_[0];
}

Alg Alg::trace_top() const {
  if (is_scalar() || ctx_->num_gens() == 0)
    throw std::domain_error("Alg: trace_top without a generator");
  const TowerPtr& base = ctx_->base();
  int bd = base->dim();
  int d = ctx_->top_degree();
  std::vector<Alg> p = ctx_->power_sums_top();
  Alg acc = base->zero();
  for (int b = 0; b < d; ++b) {
    std::vector<Rational> blk(c_.begin() + b * bd, c_.begin() + (b + 1) * bd);
    acc += Alg(base, std::move(blk)) * p[b];
  }
  return acc;
}

std::string Alg::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ", ";
    os << c_[i].to_string();
  }
  os << "]";
  return os.str();
}

// ---------------------------------------------------------------------------
// Tower

TowerPtr Tower::trivial() {
  static TowerPtr t = [] {
    auto p = std::shared_ptr<Tower>(new Tower());
    return TowerPtr(p);
  }();
  return t;
}

Alg Tower::zero() const {
  return Alg(shared_from_this(), zeros(dim_));
}

Alg Tower::one() const { return constant(Rational(1)); }

Alg Tower::constant(const Rational& q) const {
  auto c = zeros(dim_);
  c[0] = q;
  return Alg(shared_from_this(), std::move(c));
}

Alg Tower::gen(int index) const {
  if (index < 0 || index >= depth_)
    throw std::invalid_argument("Tower: gen index out of range");
  if (index == depth_ - 1) {
    if (top_degree_ == 1) {
      // Linear minimal polynomial: the generator is -m0, already a
      // sub-tower element; re-tag its coordinates in this tower.
      Alg m0 = minpoly_[0];
      std::vector<Rational> c = m0.is_scalar()
                                    ? [&] {
                                        auto v = zeros(dim_);
                                        v[0] = m0.coords()[0];
                                        return v;
                                      }()
                                    : m0.coords();
      for (auto& q : c) q = -q;
      return Alg(shared_from_this(), std::move(c));
    }
    auto c = zeros(dim_);
    c[base_->dim()] = Rational(1);
    return Alg(shared_from_this(), std::move(c));
  }
  Alg lower = base_->gen(index);
  auto c = zeros(dim_);
  for (size_t i = 0; i < lower.coords().size(); ++i) c[i] = lower.coords()[i];
  return Alg(shared_from_this(), std::move(c));
}

std::vector<int> Tower::signature() const {
  std::vector<int> ids;
  const Tower* t = this;
  while (t && t->depth_ > 0) {
    ids.push_back(t->factor_id_);
    t = t->base_.get();
  }
  std::reverse(ids.begin(), ids.end());
  return ids;
}

std::vector<Rational> Tower::mul_flat(const std::vector<Rational>& a,
                                      const std::vector<Rational>& b) const {
  if (depth_ == 0) return {a[0] * b[0]};
  int bd = base_->dim();
  int d = top_degree_;
  auto block = [bd](const std::vector<Rational>& v, int i) {
    return std::vector<Rational>(v.begin() + i * bd, v.begin() + (i + 1) * bd);
  };
  // Convolution in the top generator.
  std::vector<std::vector<Rational>> conv(2 * d - 1, zeros(bd));
  for (int i = 0; i < d; ++i) {
    auto ai = block(a, i);
    if (all_zero(ai)) continue;
    for (int j = 0; j < d; ++j) {
      auto bj = block(b, j);
      if (all_zero(bj)) continue;
      auto prod = base_->mul_flat(ai, bj);
      for (int k = 0; k < bd; ++k) conv[i + j][k] += prod[k];
    }
  }
  // Reduce exponents >= d using the precomputed images of gen^(d+k).
  for (int e = 2 * d - 2; e >= d; --e) {
    if (all_zero(conv[e])) continue;
    const std::vector<Rational>& img = high_powers_[e - d];
    for (int j = 0; j < d; ++j) {
      std::vector<Rational> ib(img.begin() + j * bd,
                               img.begin() + (j + 1) * bd);
      if (all_zero(ib)) continue;
      auto prod = base_->mul_flat(conv[e], ib);
      for (int k = 0; k < bd; ++k) conv[j][k] += prod[k];
    }
  }
  std::vector<Rational> out = zeros(dim_);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < bd; ++k) out[j * bd + k] = conv[j][k];
  return out;
}

std::vector<Alg> Tower::power_sums_top() const {
  if (depth_ == 0) throw std::domain_error("Tower: no generator");
  int d = top_degree_;
  std::vector<Alg> p(d, base_->zero());
  p[0] = base_->constant(Rational(d));
  // Newton identities for the monic minpoly x^d + m_{d-1}x^{d-1} + ... + m_0:
  // p_k + m_{d-1} p_{k-1} + ... + m_{d-k+1} p_1 + k m_{d-k} = 0.
  for (int k = 1; k < d; ++k) {
    Alg acc = minpoly_[d - k] * Rational(k);
    for (int i = 1; i < k; ++i) acc += minpoly_[d - i] * p[k - i];
    p[k] = -acc;
  }
  return p;
}

TowerPtr Tower::extend(const TowerPtr& base, int factor_id,
                       const QPoly& factor) {
  if (!base) throw std::invalid_argument("Tower: null base");
  if (factor.degree() < 1 || factor.leading() != Rational(1))
    throw std::invalid_argument("Tower: factor must be monic nonconstant");
  auto t = std::shared_ptr<Tower>(new Tower());
  t->base_ = base;
  t->factor_id_ = factor_id;
  t->factor_ = factor;
  t->depth_ = base->num_gens() + 1;

  // Minimal polynomial: the factor with every prior same-factor root
  // divided out by synthetic division.
  std::vector<Alg> mp;
  for (int i = 0; i <= factor.degree(); ++i)
    mp.push_back(base->constant(factor[i]));
  {
    // Collect prior same-factor generators, bottom to top.
    std::vector<Alg> prior;
    for (int gidx = 0, n = base->num_gens(); gidx < n; ++gidx) {
      // Walk the chain to find the factor id of generator gidx.
      const Tower* w = base.get();
      int level = base->num_gens() - 1;
      while (level > gidx) {
        w = w->base_.get();
        --level;
      }
      if (w->factor_id_ == factor_id) prior.push_back(base->gen(gidx));
    }
    for (const Alg& g : prior) {
      int n = static_cast<int>(mp.size()) - 1;
      if (n == 0)
        throw std::domain_error("Tower: factor exhausted, no roots left");
      std::vector<Alg> q(n);
      q[n - 1] = mp[n];
      for (int k = n - 1; k >= 1; --k) q[k - 1] = mp[k] + g * q[k];
      Alg rem = mp[0] + g * q[0];
      if (!rem.is_zero())
        throw std::logic_error("Tower: synthetic division left a remainder");
      mp = std::move(q);
    }
  }
  int d = static_cast<int>(mp.size()) - 1;
  if (d < 1) throw std::domain_error("Tower: factor exhausted, no roots left");
  t->top_degree_ = d;
  t->dim_ = base->dim() * d;
  t->minpoly_ = mp;

  // Images of gen^(d+k) for the reduction step, k = 0..d-2.
  if (d >= 2) {
    int bd = base->dim();
    auto as_flat = [&](const std::vector<Alg>& blocks) {
      std::vector<Rational> f = zeros(t->dim_);
      for (int b2 = 0; b2 < d; ++b2) {
        const Alg& blk = blocks[b2];
        if (blk.is_scalar()) {
          f[b2 * bd] = blk.coords()[0];
        } else {
          for (int k = 0; k < bd; ++k) f[b2 * bd + k] = blk.coords()[k];
        }
      }
      return f;
    };
    // x^d = -(m_0 + m_1 x + ... + m_{d-1} x^{d-1}).
    std::vector<Alg> cur(d, base->zero());
    for (int i = 0; i < d; ++i) cur[i] = -mp[i];
    t->high_powers_.push_back(as_flat(cur));
    for (int k = 1; k <= d - 2; ++k) {
      // Multiply by the generator: shift blocks, reduce the overflow.
      Alg overflow = cur[d - 1];
      for (int b2 = d - 1; b2 >= 1; --b2) cur[b2] = cur[b2 - 1];
      cur[0] = base->zero();
      if (!overflow.is_zero()) {
        for (int i = 0; i < d; ++i) cur[i] += overflow * (-mp[i]);
      }
      t->high_powers_.push_back(as_flat(cur));
    }
  }
  return TowerPtr(t);
}

// ---------------------------------------------------------------------------
// AlgHom

AlgHom::AlgHom(TowerPtr src, TowerPtr dst, std::vector<Alg> gen_images)
    : src_(std::move(src)), dst_(std::move(dst)) {
  if (static_cast<int>(gen_images.size()) != src_->num_gens())
    throw std::invalid_argument("AlgHom: one image per generator required");
  for (const Alg& g : gen_images)
    if (g.ctx() != dst_)
      throw std::invalid_argument("AlgHom: images must live in the target");

  // Degrees of each source level, bottom to top.
  std::vector<int> degrees;
  std::vector<const Tower*> levels;
  {
    const Tower* w = src_.get();
    while (w && w->num_gens() > 0) {
      levels.push_back(w);
      w = w->base().get();
    }
    std::reverse(levels.begin(), levels.end());
    for (auto* lv : levels) degrees.push_back(lv->top_degree());
  }

  basis_images_.resize(src_->dim(), dst_->zero());
  basis_images_[0] = dst_->one();
  int filled = 1;  // prefix of basis monomials already mapped
  for (size_t lvl = 0; lvl < levels.size(); ++lvl) {
    // Validate the mapped minimal polynomial of this generator: coefficients
    // live in the already-mapped prefix.
    const std::vector<Alg>& mp = levels[lvl]->top_minpoly();
    auto map_sub = [&](const Alg& sub) {
      if (sub.is_scalar()) return dst_->constant(sub.coords()[0]);
      Alg acc = dst_->zero();
      for (int i = 0; i < static_cast<int>(sub.coords().size()); ++i) {
        if (sub.coords()[i].is_zero()) continue;
        acc += basis_images_[i] * sub.coords()[i];
      }
      return acc;
    };
    const Alg& gi = gen_images[lvl];
    Alg acc = dst_->zero();
    for (int i = static_cast<int>(mp.size()) - 1; i >= 0; --i)
      acc = acc * gi + map_sub(mp[i]);
    if (!acc.is_zero())
      throw std::logic_error(
          "AlgHom: generator image violates its minimal polynomial");
    // Extend basis images with powers of this generator.
    int d = degrees[lvl];
    Alg p = dst_->one();
    for (int e = 1; e < d; ++e) {
      p = p * gi;
      for (int i = 0; i < filled; ++i)
        basis_images_[e * filled + i] = basis_images_[i] * p;
    }
    filled *= d;
  }
}

Alg AlgHom::apply(const Alg& a) const {
  if (a.is_scalar()) return dst_->constant(a.coords()[0]);
  if (a.ctx() != src_) throw std::logic_error("AlgHom: wrong source tower");
  Alg acc = dst_->zero();
  for (int i = 0; i < static_cast<int>(a.coords().size()); ++i) {
    if (a.coords()[i].is_zero()) continue;
    acc += basis_images_[i] * a.coords()[i];
  }
  return acc;
}

// ---------------------------------------------------------------------------
// TowerFactory

TowerFactory::TowerFactory(std::vector<QPoly> factors)
    : factors_(std::move(factors)) {
  for (const auto& f : factors_) {
    if (f.degree() < 1 || f.leading() != Rational(1))
      throw std::invalid_argument("TowerFactory: factors must be monic");
  }
  towers_[{}] = Tower::trivial();
}

TowerPtr TowerFactory::tower(const std::vector<int>& factor_ids) {
  auto it = towers_.find(factor_ids);
  if (it != towers_.end()) return it->second;
  if (factor_ids.empty()) return Tower::trivial();
  std::vector<int> base_ids(factor_ids.begin(), factor_ids.end() - 1);
  TowerPtr base = tower(base_ids);
  int fid = factor_ids.back();
  if (fid < 0 || fid >= static_cast<int>(factors_.size()))
    throw std::invalid_argument("TowerFactory: bad factor id");
  TowerPtr t = Tower::extend(base, fid, factors_[fid]);
  towers_[factor_ids] = t;
  return t;
}

const AlgHom& TowerFactory::hom(const std::vector<int>& src_ids,
                                const std::vector<int>& dst_ids,
                                const std::vector<int>& gen_map) {
  auto key = std::make_tuple(src_ids, dst_ids, gen_map);
  auto it = homs_.find(key);
  if (it != homs_.end()) return *it->second;
  TowerPtr src = tower(src_ids);
  TowerPtr dst = tower(dst_ids);
  std::vector<Alg> images;
  for (size_t i = 0; i < gen_map.size(); ++i) {
    int tgt = gen_map[i];
    if (tgt < 0 || tgt >= dst->num_gens())
      throw std::invalid_argument("TowerFactory: hom target gen out of range");
    images.push_back(dst->gen(tgt));
  }
  auto hom = std::make_unique<AlgHom>(src, dst, std::move(images));
  const AlgHom& ref = *hom;
  homs_[key] = std::move(hom);
  return ref;
}

}  // namespace spectral
