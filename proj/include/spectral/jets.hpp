// Asymptotic jet coefficients of the wave function built from the
// contracted correlators and the Serre derivative couplings.
//
// The order-chi coefficient is a finite sum of products of contraction
// amplitudes G_n^{h,(d)} and cycle couplings T_{2d} (the rational Serre
// column, carrying 2d positive period-unit grades against the -d of each
// cycle contraction). Grades cancel term by term, so the result is an exact
// rational polynomial in w over a half-integer power of sigma.

#pragma once

#include "spectral/amplitude.hpp"
#include "spectral/modular.hpp"

namespace spectral {

// jhat_chi = sigma(w)^{-r/2} * poly(w); r = 3 chi after reduction.
struct Jet {
  int chi = 0;
  int r = 0;
  QPoly poly;
};

// Requires an engine of level cap >= chi and serre.t_i0 up to d = chi.
Jet jet(RecursionEngine& eng, const SerreTable& serre, int chi);

// Exact coefficients of the inverse-level expansion of the state-sum
// logarithm at the complete point w = 1: the order-chi term contributes
// c[chi-1] * sigma1^{-3 chi / 2} against the chi-th power of the small
// parameter. sigma1 = sigma(1) is negative for both built-in components,
// so the half powers are resolved by the principal branch downstream.
struct KashaevExpansion {
  Rational sigma1;
  std::vector<Rational> c;
};

KashaevExpansion kashaev_expansion(RecursionEngine& eng,
                                   const SerreTable& serre, int chi_max);

}  // namespace spectral
