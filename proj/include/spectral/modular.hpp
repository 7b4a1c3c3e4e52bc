// Exact elliptic and modular layer.
//
// From the quartic S: the elliptic invariants of the Jacobian; the theta
// fourth-power values t_i = theta_i^4/(2 varpi_A)^2 as elements of a
// quadratic extension; the differential ring generated by (t2, t4, E2)
// with the weight-raising derivation D; and the Serre-derivative scalars
// T_{2d;i} obtained by setting E2 = 0. No transcendental period is ever
// materialized: everything downstream consumes the algebraic t_i and the
// rational T_{2d;i0} column.

#pragma once

#include <array>
#include <map>
#include <vector>

#include "spectral/errors.hpp"
#include "spectral/poly.hpp"
#include "spectral/qfield.hpp"
#include "spectral/rational.hpp"

namespace spectral {

struct EllipticInvariants {
  // Reported normalization, as in curve tables by Cremona label.
  Rational g2;
  Rational g3;
  // Weierstrass ODE normalization: (wp')^2 = 4 wp^3 - wg2 wp - wg3, with
  // wg = -g. The theta relations and the wp layer consume these.
  Rational wg2;
  Rational wg3;
  Rational delta;  // wg2^3 - 27 wg3^2, the discriminant label
};

// Invariants of the Jacobian of y^2 = S(X) for monic squarefree quartic S,
// via the classical binary-quartic covariants.
EllipticInvariants elliptic_invariants(const QPoly& S);

// Invariants from a reported (g2, g3) pair (curve-table presets).
EllipticInvariants invariants_from_reported(const Rational& g2,
                                            const Rational& g3);

struct ThetaQuartics {
  QuadValue t2;
  QuadValue t3;  // = t2 + t4
  QuadValue t4;
  int i0;     // selected even characteristic: purely imaginary for delta<0
  long disc;  // d of the field Q[sqrt(d)]; 0 when all values are rational
};

// Solves the two Eisenstein relations for (t2, t3, t4) through the
// rational 2-torsion point e3 of the Weierstrass cubic. Any solution in
// the 6-element orbit below is equally valid; this returns the one with
// t4 = e1 - e2 and positive radical part. Throws ClassViolation when the
// cubic has no rational root (theta values then live in a sextic field;
// see theta_isquare_cubic).
ThetaQuartics theta_quartics(const EllipticInvariants& inv);

// Monic cubic in z satisfied by t_{i0}^2 = (e1 - e2)^2 for any curve,
// rational 2-torsion or not: the squared-difference resolvent of the
// Weierstrass cubic.
QPoly theta_isquare_cubic(const EllipticInvariants& inv);

// Both defining relations, exactly:
//   t2^2 + t2 t4 + t4^2 = (3/4) wg2
//   -(1/2)(t2 - t4)(t2 + 2 t4)(2 t2 + t4) = (27/8) wg3
bool theta_relations_hold(const QuadValue& t2, const QuadValue& t4,
                          const EllipticInvariants& inv);

// Radical data of the unique real root of a monic cubic with one real and
// two complex roots:
//   root = shift + cbrt(ucube) + cbrt(conj(ucube)),
// where ucube lives in Q[sqrt(disc)] with disc > 0, real cube roots are
// meant, and the product of the two cube roots equals prod exactly.
struct CardanoRealRoot {
  Rational shift;
  QuadValue ucube;
  long disc = 0;   // 0 when ucube is rational (the root is then rational
                   // plus a single real cube root)
  Rational prod;
};

// Throws std::invalid_argument unless the input is a monic cubic, and
// ClassViolation when all three roots are real (the radical expression
// then leaves the real quadratic field).
CardanoRealRoot cardano_real_root(const QPoly& cubic);

// (t2 t3 t4)^2 = delta / 16; throws VerificationMismatch on failure.
void discriminant_check(const ThetaQuartics& tq,
                        const EllipticInvariants& inv);

// The 6 solutions (identity first): (t2,t3,t4), (-t4,-t3,-t2), (-t2,t4,t3),
// (-t3,-t4,t2), (t4,-t2,-t3), (t3,t2,-t4), with i0 recomputed per triple.
std::array<ThetaQuartics, 6> theta_orbit(const ThetaQuartics& tq);

bool same_theta_orbit(const ThetaQuartics& x, const ThetaQuartics& y);

// Polynomials in (t2, t4, E2) with rational coefficients, carrying the
// derivation D of the theta differential ring:
//   D t2 = (4/3) t2 (-t2 - 2 t4 - E2)
//   D t4 = (4/3) t4 (2 t2 + t4 - E2)
//   D E2 = (2/3) (t2^2 + t4^2 + t2 t4 - E2^2)
class ThetaRingPoly {
 public:
  using Mono = std::array<int, 3>;  // exponents of (t2, t4, E2)

  ThetaRingPoly() = default;
  explicit ThetaRingPoly(const Rational& constant);
  static ThetaRingPoly gen_t2();
  static ThetaRingPoly gen_t4();
  static ThetaRingPoly gen_e2();

  bool is_zero() const { return c_.empty(); }
  const std::map<Mono, Rational>& coefficients() const { return c_; }

  ThetaRingPoly operator-() const;
  friend ThetaRingPoly operator+(const ThetaRingPoly& x,
                                 const ThetaRingPoly& y);
  friend ThetaRingPoly operator-(const ThetaRingPoly& x,
                                 const ThetaRingPoly& y);
  friend ThetaRingPoly operator*(const ThetaRingPoly& x,
                                 const ThetaRingPoly& y);
  ThetaRingPoly operator*(const Rational& s) const;
  friend bool operator==(const ThetaRingPoly& x, const ThetaRingPoly& y) {
    return x.c_ == y.c_;
  }

  ThetaRingPoly derived() const;       // the derivation D
  ThetaRingPoly at_e2_zero() const;    // drop every monomial with E2
  ThetaRingPoly substituted(const ThetaRingPoly& im_t2,
                            const ThetaRingPoly& im_t4,
                            const ThetaRingPoly& im_e2) const;
  // Evaluate after E2 = 0 at quadratic-extension theta values.
  QuadValue eval(const QuadValue& t2, const QuadValue& t4) const;

  bool has_integer_coefficients() const;

 private:
  void add_term_(const Mono& m, const Rational& q);
  std::map<Mono, Rational> c_;
};

// D^d theta_i / theta_i as an element of the ring, for i in {2, 3, 4}:
// R_1 = Q_i/3 and R_{d+1} = D R_d + R_d R_1.
ThetaRingPoly theta_log_derivative(int i, int d);

struct SerreTable {
  int i0;
  int d_max;
  // columns[i-2][d] = T_{2d;i} in units (2 varpi_A)^{2d}, for d = 0..d_max.
  std::array<std::vector<QuadValue>, 3> columns;
  // The i0 column; rational for every curve this layer accepts.
  std::vector<Rational> t_i0;
};

SerreTable serre_table(const ThetaQuartics& tq, int d_max);

}  // namespace spectral
