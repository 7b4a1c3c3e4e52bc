// Contraction of stored correlators into closed-form functions of w.
//
// Each of the n + d variables of omega_{n+d}^h is integrated out: n of them
// along the based path pair ending at the evaluation point, d of them over
// the closed cycle dual to the A-period. Cycle integration of a Weierstrass
// factor keeps only derivative order zero and contributes one inverse
// A-period unit; path integration turns wp^{(p)}(z - z_c) into an explicit
// rational multiple of sqrt(S) on the base. Summing over center assignments
// is the tower trace, so the result is an exact rational polynomial in
// w = (X + 1/X)/2 over a half-integer power of sigma(w).

#pragma once

#include <vector>

#include "spectral/engine.hpp"
#include "spectral/poly.hpp"

namespace spectral {

// value = sigma(w)^{-r/2} * poly(w) * unit^grade, where unit is twice the
// A-period and grade = -d for a d-fold cycle contraction.
struct WAmplitude {
  int grade = 0;
  int r = 0;
  QPoly poly;
};

// G_n^{h,(d)} with the first n variables path-contracted and the last d
// cycle-contracted; includes the 1/(n! d!) symmetry weight.
WAmplitude amplitude(RecursionEngine& eng, int h, int n, int d);

// Same contraction with an explicit choice of cycle variables (size d,
// distinct indices into 0..n+d-1). The correlators are symmetric, so the
// result must not depend on the choice; tests exercise this.
WAmplitude amplitude(RecursionEngine& eng, int h, int n, int d,
                     const std::vector<int>& cycle_vars);

}  // namespace spectral
