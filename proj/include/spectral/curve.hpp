// Reduction of an A-polynomial component, quadratic in the longitude
// eigenvalue l, to the hyperelliptic model
//
//     l = (P1(X) + P2(X) sqrt(S(X))) / R(X),        X = m^2,
//
// where S is a monic palindromic squarefree quartic. The palindromy of S
// encodes the X -> 1/X symmetry of the component, and the w-profile
// sigma(w) = S(X)/X^2 under w = (X + 1/X)/2 drives everything downstream:
// ramification data, the cusp polynomial at the complete hyperbolic point,
// and the weak tameness checks at the punctures.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "spectral/errors.hpp"
#include "spectral/poly.hpp"
#include "spectral/rational.hpp"

namespace spectral {

// A = a(X) l^2 + b(X) l + c(X) with X = m^2.
struct APolyComponent {
  QPoly a;
  QPoly b;
  QPoly c;
  std::string label;  // preset name or input file
  long torsion = 1;   // declared torsion order of the K-theory class
};

struct RamificationFactor {
  QPoly factor;            // monic irreducible factor of S over Q
  std::size_t reciprocal;  // index of the factor whose roots are the inverses
};

struct CuspData {
  // Lowest homogeneous slice of A near the singular point above X = 1,
  // written in t = (longitude deviation)/(meridian deviation).
  QPoly polynomial;
  // Squarefree discriminant of the splitting field of that slice.
  Rational field_disc;
};

struct ASpectralCurve {
  APolyComponent component;
  QPoly S;     // monic palindromic squarefree quartic
  QPoly P1;    // l = (P1 + P2 sqrt(S)) / R
  QPoly P2;    // positive leading coefficient
  QPoly R;
  QPoly sigma;  // S(X)/X^2 = sigma(w) under w = (X + 1/X)/2
  std::vector<RamificationFactor> factors;  // irreducible factors of S
  std::optional<CuspData> cusp;  // present iff singular above X = 1
};

// Validates the component and builds the hyperelliptic model. Throws
// ClassViolation with a distinct message for each way the discriminant
// b^2 - 4ac can fail to be (perfect square) * (palindromic squarefree
// quartic), and for degenerations that put ramification points where the
// local frames need l and a to stay finite and nonzero.
ASpectralCurve curve_from_A(const APolyComponent& comp);

// Returns sigma after re-verifying X^2 sigma((X + 1/X)/2) = S(X) as a
// polynomial identity.
const QPoly& sigma_of_w(const ASpectralCurve& curve);

// Cusp polynomial at the singular point above X = 1 (meridian m = -1);
// throws ClassViolation when the curve is regular there.
const CuspData& cusp_polynomial(const ASpectralCurve& curve);

// Tame symbol of the pair {m, l} at one puncture branch:
//   T = (-1)^(ord m * ord l) m^(ord l) l^(-ord m)  evaluated at the point,
// with orders taken in the local parameter of the branch.
struct TameSymbol {
  std::string point;  // branch label, e.g. "m -> 0, sqrt(S) -> -1"
  long ord_m;
  long ord_l;
  Rational value;
};

// Symbols at every branch over X = 0 and X = infinity. The supported class
// keeps all zeros and poles of l over these two punctures; a finite zero or
// pole elsewhere raises std::domain_error.
std::vector<TameSymbol> puncture_tame_symbols(const ASpectralCurve& curve);

// Product of T over all puncture branches; equals 1 when the symbol pairing
// is globally consistent.
Rational tame_symbol_product(const ASpectralCurve& curve);

// |T| = 1, the local obstruction to weak tameness.
bool weakly_tame(const TameSymbol& s);

}  // namespace spectral
