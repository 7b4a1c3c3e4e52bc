// Iterated algebraic extensions of Q by roots of fixed irreducible factors.
//
// A Tower adjoins generators one at a time. Each generator is a root of one
// of the registered rational factors, constrained to differ from every
// previously adjoined root of the same factor: its minimal polynomial over
// the sub-tower is the factor divided by (x - g) for each such prior g.
// The resulting ring is etale over Q, so the regular-representation trace
// equals the sum over all admissible root assignments; that is exactly the
// "sum over pairwise distinct ramification points" semantics the recursion
// needs.
//
// Elements (Alg) are flat coordinate vectors in the monomial basis, with the
// last generator's exponent varying slowest. An Alg with a null tower acts
// as a plain rational scalar and promotes on contact, so Alg models a ring
// with unit and works as a coefficient type for Poly and LSeries.

#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "spectral/poly.hpp"
#include "spectral/rational.hpp"

namespace spectral {

class Tower;
using TowerPtr = std::shared_ptr<const Tower>;

class Alg {
 public:
  Alg() : c_{Rational(0)} {}
  Alg(long n) : c_{Rational(n)} {}
  Alg(const Rational& q) : c_{q} {}
  Alg(TowerPtr ctx, std::vector<Rational> coords);

  const TowerPtr& ctx() const { return ctx_; }
  const std::vector<Rational>& coords() const { return c_; }
  bool is_scalar() const { return ctx_ == nullptr; }
  bool is_zero() const;
  bool is_rational() const;  // all non-constant coordinates vanish
  Rational rational_part() const;  // throws unless is_rational()

  Alg operator-() const;
  friend Alg operator+(const Alg& a, const Alg& b);
  friend Alg operator-(const Alg& a, const Alg& b);
  friend Alg operator*(const Alg& a, const Alg& b);
  Alg& operator+=(const Alg& o) { return *this = *this + o; }
  Alg& operator-=(const Alg& o) { return *this = *this - o; }
  Alg& operator*=(const Alg& o) { return *this = *this * o; }
  friend bool operator==(const Alg& a, const Alg& b);
  friend bool operator!=(const Alg& a, const Alg& b) { return !(a == b); }

  Alg operator*(const Rational& s) const;
  Alg operator/(const Rational& s) const { return *this * s.inverse(); }
  friend Alg operator/(const Alg& a, const Alg& b) { return a * b.inverse(); }

  // Multiplicative inverse via the regular representation; throws
  // domain_error on zero or (impossible for fields, defensive for towers)
  // zero divisors.
  Alg inverse() const;

  // Trace over Q: sum of the element over all admissible root assignments.
  Rational trace() const;

  // Trace over the top generator only, landing in the sub-tower.
  Alg trace_top() const;

  std::string to_string() const;

 private:
  friend class Tower;
  TowerPtr ctx_;  // null means scalar
  std::vector<Rational> c_;
};

inline Alg operator*(const Rational& s, const Alg& a) { return a * s; }

class Tower : public std::enable_shared_from_this<Tower> {
 public:
  // The rational base ring Q (dimension 1, no generators).
  static TowerPtr trivial();

  // Adjoins a root of `factor` (monic irreducible over Q) distinct from all
  // previously adjoined roots of the same factor_id. Throws if the factor is
  // exhausted (no roots left), signalled by a degree-0 minimal polynomial.
  static TowerPtr extend(const TowerPtr& base, int factor_id,
                         const QPoly& factor);

  int dim() const { return dim_; }
  int num_gens() const { return depth_; }
  const TowerPtr& base() const { return base_; }
  int factor_id() const { return factor_id_; }       // of the top generator
  const QPoly& factor() const { return factor_; }    // of the top generator
  int top_degree() const { return top_degree_; }
  // Minimal polynomial of the top generator over the sub-tower (monic,
  // ascending; coefficients are sub-tower elements).
  const std::vector<Alg>& top_minpoly() const { return minpoly_; }

  std::vector<int> signature() const;  // factor_ids bottom to top

  Alg zero() const;
  Alg one() const;
  Alg constant(const Rational& q) const;
  Alg gen(int index) const;  // 0-based, bottom to top

  // Internal helpers used by Alg; kept public for the hom machinery.
  std::vector<Rational> mul_flat(const std::vector<Rational>& a,
                                 const std::vector<Rational>& b) const;
  // Newton power sums p_0..p_{D-1} of the top minimal polynomial, as
  // sub-tower elements; used for partial traces.
  std::vector<Alg> power_sums_top() const;

 private:
  Tower() = default;
  TowerPtr base_;
  int factor_id_ = -1;
  QPoly factor_;
  int top_degree_ = 1;
  int depth_ = 0;
  int dim_ = 1;
  std::vector<Alg> minpoly_;  // over base_
  // Images of gen^(D+k), k = 0..D-2, as flat coordinate vectors.
  std::vector<std::vector<Rational>> high_powers_;
};

// Ring homomorphism between towers determined by generator images. The
// construction validates every mapped minimal-polynomial relation and
// caches basis-monomial images.
class AlgHom {
 public:
  AlgHom(TowerPtr src, TowerPtr dst, std::vector<Alg> gen_images);
  Alg apply(const Alg& a) const;
  const TowerPtr& src() const { return src_; }
  const TowerPtr& dst() const { return dst_; }

 private:
  TowerPtr src_, dst_;
  std::vector<Alg> basis_images_;  // image of each source basis monomial
};

// Per-curve registry of factors, towers, and cached homs. Towers obtained
// here are shared, so Alg context checks are plain pointer comparisons.
class TowerFactory {
 public:
  explicit TowerFactory(std::vector<QPoly> factors);
  const std::vector<QPoly>& factors() const { return factors_; }

  // Tower for the given generator factor_id sequence (in that order).
  TowerPtr tower(const std::vector<int>& factor_ids);

  // Hom sending src gen i to dst gen gen_map[i]; cached.
  const AlgHom& hom(const std::vector<int>& src_ids,
                    const std::vector<int>& dst_ids,
                    const std::vector<int>& gen_map);

 private:
  std::vector<QPoly> factors_;
  std::map<std::vector<int>, TowerPtr> towers_;
  std::map<std::tuple<std::vector<int>, std::vector<int>, std::vector<int>>,
           std::unique_ptr<AlgHom>>
      homs_;
};

}  // namespace spectral
