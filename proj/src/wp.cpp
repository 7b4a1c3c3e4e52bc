// Weierstrass function expansions: Laurent tail, half-period values, and
// even Taylor towers at 2-torsion shifts.

#include "spectral/wp.hpp"

namespace spectral {

LSeries<Rational> wp_laurent(const EllipticInvariants& inv, int order) {
  if (order < -2)
    throw std::invalid_argument("wp_laurent: order below the double pole");
  // c[k] is the coefficient of s^{2k}, k >= 1.
  const int kmax = order >= 2 ? order / 2 : 0;
  std::vector<Rational> c(kmax + 1);
  if (kmax >= 1) c[1] = inv.wg2 / Rational(20);
  if (kmax >= 2) c[2] = inv.wg3 / Rational(28);
  for (int k = 3; k <= kmax; ++k) {
    Rational acc;
    for (int m = 1; m <= k - 2; ++m) acc += c[m] * c[k - 1 - m];
    c[k] = Rational(3) / Rational((2 * k + 3) * (k - 2)) * acc;
  }
  std::vector<Rational> coeffs(order + 3);
  coeffs[0] = Rational(1);  // s^{-2}
  for (int k = 1; k <= kmax; ++k) coeffs[2 * k + 2] = c[k];
  return LSeries<Rational>(-2, std::move(coeffs), order);
}

Alg half_period_value(const QPoly& S, const Alg& a, const Alg& b) {
  const auto lift = [](const Rational& q) { return Alg(q); };
  const Alg gap = a - b;
  if (gap.is_zero())
    throw std::domain_error("half_period_value: coincident branch points");
  const Alg sp = S.derivative().eval_in<Alg>(b, lift);
  const Alg spp = S.derivative().derivative().eval_in<Alg>(b, lift);
  return sp * gap.inverse() * Rational(1, 4) + spp * Rational(1, 24);
}

LSeries<Alg> wp_even_expansion(const Alg& e, const EllipticInvariants& inv,
                               int order) {
  if (order < 0)
    throw std::invalid_argument("wp_even_expansion: negative order");
  const int kmax = order / 2;
  std::vector<Alg> c(kmax + 1);
  c[0] = e;
  for (int k = 0; k < kmax; ++k) {
    Alg acc;
    for (int j = 0; j <= k; ++j) acc += c[j] * c[k - j];
    acc = acc * Rational(6);
    if (k == 0) acc -= Alg(inv.wg2 / Rational(2));
    c[k + 1] = acc * Rational(1, (2 * k + 2) * (2 * k + 1));
  }
  std::vector<Alg> coeffs(order + 1);
  for (int k = 0; k <= kmax; ++k) coeffs[2 * k] = c[k];
  return LSeries<Alg>(0, std::move(coeffs), order);
}

}  // namespace spectral
