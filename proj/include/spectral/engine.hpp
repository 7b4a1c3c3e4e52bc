// Exact Eynard-Orantin recursion on the Jacobian of an A-spectral curve.
//
// Correlators are computed in the uniformizing coordinate z with
// dz = dX/sqrt(S). Every omega_n^h with 2h - 2 + n >= 1 is a finite sum of
// products
//
//     coef * prod_i wp^{(p_i)}(z_i - z_{c_i}),
//
// one Weierstrass factor per variable, with even derivative orders p_i and
// centers c_i at ramification points. A center is recorded by the
// irreducible factor of S it is a root of; the coefficient lives in the
// tower algebra adjoining those roots pairwise-distinctly, so summing over
// root assignments is the algebra trace, and no radical or float appears.
// The residue sum over ramification points in the recursion kernel splits,
// per monomial, into branches that either identify the kernel center with a
// recorded root or adjoin a fresh one; centers no longer referenced by any
// Weierstrass factor afterwards are traced out on the spot.
//
// Expansions use two facts special to this geometry: branch points sit at
// 2-torsion points of the Jacobian, so wp is even about every center
// difference, and the kernel numerator expands in odd powers only. Hence
// every surviving extraction is at an even power and odd derivative orders
// can never be produced; the assembly asserts this invariant.

#pragma once

#include <map>
#include <tuple>
#include <utility>
#include <vector>

#include "spectral/alg.hpp"
#include "spectral/curve.hpp"
#include "spectral/frame.hpp"
#include "spectral/modular.hpp"
#include "spectral/series.hpp"

namespace spectral {

// One Weierstrass factor wp^{(p)}(z_var - z_center); the variable is the
// position of the slot in Monomial::slots, the center an index into
// Monomial::centers.
struct WpSlot {
  int center;
  int p;
};
inline bool operator==(const WpSlot& a, const WpSlot& b) {
  return a.center == b.center && a.p == b.p;
}

// A product term of a correlator. centers holds factor ids in nondecreasing
// order; coef is an element of the tower adjoining one distinct root per
// entry, in that order.
struct Monomial {
  std::vector<int> centers;
  std::vector<WpSlot> slots;  // slots[i] belongs to variable z_i
  Alg coef;
};

class RecursionEngine {
 public:
  // Computes every omega_n^h with 1 <= 2h - 2 + n <= level_cap (cap in
  // 1..3). `order` is the series truncation for kernel expansions; callers
  // catching TruncationError retry with a doubled order.
  RecursionEngine(const ASpectralCurve& curve, int level_cap = 3,
                  int order = 12);

  const ASpectralCurve& curve() const { return curve_; }
  const EllipticInvariants& invariants() const { return inv_; }
  TowerFactory& factory() { return factory_; }
  int level_cap() const { return level_cap_; }

  // Stored correlator, merged and deterministically ordered. Throws
  // std::out_of_range when (h, n) is beyond the computed cap.
  const std::vector<Monomial>& omega(int h, int n) const;

  // Local frame at generator gen_index of the tower; cached.
  const CenterFrame& frame(const TowerPtr& tower, int gen_index);

 private:
  // A stored correlator factor inside one recursion term. vars maps each
  // piece variable to a target variable index, or to kQ / kQbar.
  struct StoredUse {
    const std::vector<Monomial>* table;
    std::vector<int> vars;
  };
  // A bare Bergman-kernel factor B(q, z_var) or B(qbar, z_var); it expands
  // into even-order spectator slots at the kernel center.
  struct BUse {
    int var;
  };
  static constexpr int kQ = -1;
  static constexpr int kQbar = -2;

  using Key = std::pair<std::vector<int>, std::vector<std::pair<int, int>>>;
  using Acc = std::map<Key, Alg>;

  std::vector<Monomial> assemble_(int h, int N);
  void run_term_(const std::vector<StoredUse>& stored,
                 const std::vector<BUse>& bspect, bool bqq, int N, Acc& acc);
  void contributions_(const Monomial& m1, const Monomial& m2,
                      const std::vector<StoredUse>& stored,
                      const std::vector<BUse>& bspect, bool bqq, int N,
                      Acc& acc);
  // wp^{(p)} expansion of a slot whose variable sits at the kernel center
  // a_pos, for a slot centered at c_pos of the same tower.
  LSeries<Alg> slot_series_(const TowerPtr& tower, int a_pos, int c_pos,
                            int p);
  // Trace out centers not referenced by any slot, then fold into acc.
  void merge_(Acc& acc, Monomial m);

  ASpectralCurve curve_;
  EllipticInvariants inv_;
  TowerFactory factory_;
  int level_cap_;
  int order_;
  std::vector<int> degree_;          // degree of each ramification factor
  LSeries<Rational> wp0_;            // wp Laurent tail at the origin
  LSeries<Alg> wp2s_;                // wp(2s), lifted
  std::map<std::pair<int, int>, std::vector<Monomial>> table_;
  std::map<std::pair<const Tower*, int>, CenterFrame> frames_;
  std::map<std::tuple<const Tower*, int, int>, LSeries<Alg>> evens_;
};

// Engine with the default order, retrying once with a doubled order when a
// kernel expansion runs past its truncation.
RecursionEngine make_engine(const ASpectralCurve& curve, int level_cap = 3);

}  // namespace spectral
