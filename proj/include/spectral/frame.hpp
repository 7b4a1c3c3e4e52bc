// Local frames at the ramification centers.
//
// In the elliptic coordinate s (dz = dX/sqrt(S)) each branch point a of S
// is a fixed point of the involution s -> -s: X(s) is even with X(0) = a,
// and X'(s) = sqrt(S(X(s))) fixes the square-root branch along the frame.
// From X the frame carries the logarithmic rate udot = X'/(2X) of the
// base holonomy u = (1/2) log X, the odd part vodd of the fibre holonomy
// log l, and the kernel weight wtilde = 1/(2 vodd udot). All coefficients
// stay exact in the tower algebra containing a.

#pragma once

#include "spectral/alg.hpp"
#include "spectral/curve.hpp"
#include "spectral/series.hpp"

namespace spectral {

struct CenterFrame {
  Alg a;                // X(0), a branch point of S
  LSeries<Alg> x;       // X(s), even
  LSeries<Alg> xprime;  // X'(s), odd
  LSeries<Alg> udot;    // X'/(2X), odd
  LSeries<Alg> vodd;    // artanh(P2(X) X' / P1(X)), odd
  LSeries<Alg> wtilde;  // 1/(2 vodd udot), double pole at s = 0
  Alg u1;               // [s^1] udot = S'(a)/(4a)
  Alg v1;               // [s^1] vodd = P2(a) S'(a)/(2 P1(a))
  Alg k0;               // 1/(2 v1 u1)
  Alg k2;               // -k0 (v3/v1 + u3/u1)
};

// Frame at the branch point a (any tower element with S(a) = 0), with every
// series valid through s^order at least; order must be >= 4.
CenterFrame center_frame(const ASpectralCurve& curve, const Alg& a, int order);

// Horner composition of a rational-coefficient polynomial with a series.
LSeries<Alg> poly_at_series(const QPoly& p, const LSeries<Alg>& x);

}  // namespace spectral
