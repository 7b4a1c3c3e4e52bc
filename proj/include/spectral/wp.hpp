// Expansions of the Weierstrass function of the curve's Jacobian.
//
// Normalization throughout: (wp')^2 = 4 wp^3 - wg2 wp - wg3. The recursion
// engine reads wp in two charts. Both arguments at one ramification center
// use the Laurent tail at the origin; arguments at two different centers use
// an even Taylor expansion, because the centers sit at 2-torsion points of
// the Jacobian, so their difference is a half period, where wp takes a root
// of the Weierstrass cubic and expands without odd terms.

#pragma once

#include "spectral/alg.hpp"
#include "spectral/modular.hpp"
#include "spectral/poly.hpp"
#include "spectral/series.hpp"

namespace spectral {

// Laurent series s^{-2} + sum_{k>=1} c_k s^{2k}, valid through s^order.
LSeries<Rational> wp_laurent(const EllipticInvariants& inv, int order);

// wp(z_a - z_b) for distinct branch points a, b of the quartic S, exact in
// the tower algebra containing both: S'(b)/(4(a-b)) + S''(b)/24. Symmetric
// in a and b, and always a root of 4x^3 - wg2 x - wg3.
Alg half_period_value(const QPoly& S, const Alg& a, const Alg& b);

// Even Taylor series sum_k c_k s^{2k} of wp(omega + s) grown from its value
// c_0 = e at the 2-torsion point omega, valid through s^order. The series
// solves wp'' = 6 wp^2 - wg2/2; it solves the first-order equation as well
// exactly when e is a root of the Weierstrass cubic.
LSeries<Alg> wp_even_expansion(const Alg& e, const EllipticInvariants& inv,
                               int order);

}  // namespace spectral
