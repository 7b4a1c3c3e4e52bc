// Frame expansions at ramification centers.

#include "spectral/frame.hpp"

namespace spectral {

namespace {

LSeries<Alg> constant_series(const Alg& c, int hi) {
  return LSeries<Alg>(0, std::vector<Alg>{c}, hi);
}

// Odd series artanh(y) = sum_{j odd} y^j / j for y with y(0) = 0.
LSeries<Alg> artanh_series(const LSeries<Alg>& y) {
  if (y.is_zero()) return y;
  if (y.order() < 1)
    throw std::domain_error("artanh_series: argument must vanish at 0");
  const int hi = y.truncation();
  LSeries<Alg> acc(hi);
  LSeries<Alg> pow = y;
  const LSeries<Alg> y2 = y * y;
  for (int j = 1;; j += 2) {
    acc = acc + pow * Alg(Rational(1, j));
    if (pow.is_zero() || pow.order() + 2 * y.order() > hi) break;
    pow = pow * y2;
  }
  return acc;
}

}  // namespace

LSeries<Alg> poly_at_series(const QPoly& p, const LSeries<Alg>& x) {
  LSeries<Alg> acc(x.truncation());
  for (int i = p.degree(); i >= 0; --i)
    acc = acc * x + constant_series(Alg(p[i]), x.truncation());
  return acc;
}

CenterFrame center_frame(const ASpectralCurve& curve, const Alg& a,
                         int order) {
  if (order < 4)
    throw std::invalid_argument("center_frame: order must be >= 4");
  const auto lift = [](const Rational& q) { return Alg(q); };
  if (!curve.S.eval_in<Alg>(a, lift).is_zero())
    throw std::domain_error("center_frame: not a branch point of S");

  // Solve X'' = S'(X)/2 with even ansatz X = sum_k x_{2k} s^{2k}, x_0 = a.
  const QPoly sp = curve.S.derivative();
  const int internal = order + 1;
  const int kmax = internal / 2;
  std::vector<Alg> x2k(kmax + 1);
  x2k[0] = a;
  for (int k = 0; k < kmax; ++k) {
    std::vector<Alg> partial(2 * k + 1);
    for (int j = 0; j <= k; ++j) partial[2 * j] = x2k[j];
    LSeries<Alg> xs(0, std::move(partial), 2 * k);
    const Alg c = poly_at_series(sp, xs).coef(2 * k) * Rational(1, 2);
    x2k[k + 1] = c * Rational(1, (2 * k + 2) * (2 * k + 1));
  }
  std::vector<Alg> coeffs(internal + 1);
  for (int k = 0; k <= kmax; ++k) coeffs[2 * k] = x2k[k];

  LSeries<Alg> x(0, std::move(coeffs), internal);
  LSeries<Alg> xprime = series_derivative(x);
  LSeries<Alg> udot = xprime * (x * Alg(2)).inverse();
  LSeries<Alg> y = poly_at_series(curve.P2, x) * xprime *
                   poly_at_series(curve.P1, x).inverse();
  LSeries<Alg> vodd = artanh_series(y);
  LSeries<Alg> wtilde = (vodd * udot * Alg(2)).inverse();
  Alg u1 = udot.coef(1);
  Alg v1 = vodd.coef(1);
  Alg k0 = (v1 * u1 * Rational(2)).inverse();
  Alg k2 = -(k0 * (vodd.coef(3) / v1 + udot.coef(3) / u1));
  return CenterFrame{a,    std::move(x),    std::move(xprime),
                     std::move(udot),       std::move(vodd),
                     std::move(wtilde),     std::move(u1),
                     std::move(v1),         std::move(k0),
                     std::move(k2)};
}

}  // namespace spectral
