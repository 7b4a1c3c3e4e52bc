#include "doctest.h"
#include "spectral/frame.hpp"

#include <vector>

using spectral::Alg;
using spectral::APolyComponent;
using spectral::ASpectralCurve;
using spectral::CenterFrame;
using spectral::LSeries;
using spectral::QPoly;
using spectral::Rational;
using spectral::TowerFactory;
using spectral::TowerPtr;

namespace {

QPoly maki(std::initializer_list<long> ascending) {
  std::vector<Rational> c;
  for (long v : ascending) c.push_back(Rational(v));
  return QPoly(c);
}

ASpectralCurve fig8_curve() {
  return spectral::curve_from_A(
      {maki({0, 0, 1}), maki({-1, 1, 2, 1, -1}), maki({0, 0, 1}), "fig8", 1});
}

ASpectralCurve l2r_curve() {
  return spectral::curve_from_A(
      {maki({0, 0, 1}), maki({-1, 2, 2, -1}), maki({0, 1}), "l2r", 1});
}

Alg lift(const Rational& q) { return Alg(q); }

void check_frame_identities(const ASpectralCurve& cv, const Alg& a,
                            int order) {
  CenterFrame f = spectral::center_frame(cv, a, order);
  const Alg sp_a = cv.S.derivative().eval_in<Alg>(a, lift);

  CHECK(f.x.coef(0) == a);
  CHECK(f.x.coef(2) == sp_a * Rational(1, 4));
  CHECK(f.x.has_parity(0));
  CHECK(f.xprime.has_parity(1));
  CHECK(f.udot.has_parity(1));
  CHECK(f.vodd.has_parity(1));
  CHECK(f.wtilde.has_parity(0));

  // The square-root branch is X' itself.
  CHECK((f.xprime * f.xprime - spectral::poly_at_series(cv.S, f.x)).is_zero());
  CHECK((f.udot * (f.x * Alg(2)) - f.xprime).is_zero());

  // vodd really is artanh of y = P2(X) X'/P1(X): v' (1 - y^2) = y'.
  LSeries<Alg> y = spectral::poly_at_series(cv.P2, f.x) * f.xprime *
                   spectral::poly_at_series(cv.P1, f.x).inverse();
  LSeries<Alg> one(0, std::vector<Alg>{Alg(1)}, y.truncation());
  CHECK((spectral::series_derivative(f.vodd) * (one - y * y) -
         spectral::series_derivative(y))
            .is_zero());

  // wtilde inverts the product exactly.
  LSeries<Alg> prod = f.wtilde * f.vodd * f.udot * Alg(2);
  LSeries<Alg> one2(0, std::vector<Alg>{Alg(1)}, prod.truncation());
  CHECK((prod - one2).is_zero());

  // Leading germs.
  CHECK(f.u1 == sp_a * (a * Rational(4)).inverse());
  const Alg p1_a = cv.P1.eval_in<Alg>(a, lift);
  const Alg p2_a = cv.P2.eval_in<Alg>(a, lift);
  CHECK(f.v1 == p2_a * sp_a * (p1_a * Rational(2)).inverse());
  CHECK(f.wtilde.coef(-2) == f.k0);
  CHECK(f.k0 == (f.v1 * f.u1 * Rational(2)).inverse());
  CHECK(f.k2 ==
        -(f.k0 * (f.vodd.coef(3) / f.v1 + f.udot.coef(3) / f.u1)));
}

}  // namespace

TEST_CASE("frame identities at every figure-eight center") {
  ASpectralCurve cv = fig8_curve();
  TowerFactory factory({maki({1, -3, 1}), maki({1, 1, 1})});

  Alg a = factory.tower({0})->gen(0);
  check_frame_identities(cv, a, 12);
  Alg b = factory.tower({1})->gen(0);
  check_frame_identities(cv, b, 12);

  // Mixed context: the same expansions stay valid inside a larger tower.
  TowerPtr big = factory.tower({0, 1});
  check_frame_identities(cv, big->gen(1), 8);
}

TEST_CASE("figure-eight germ anchors") {
  ASpectralCurve cv = fig8_curve();
  TowerFactory factory({maki({1, -3, 1}), maki({1, 1, 1})});

  // Root a of X^2 - 3X + 1: u1 = 2a - 3 and v1 = 5.
  Alg a = factory.tower({0})->gen(0);
  CenterFrame fa = spectral::center_frame(cv, a, 8);
  CHECK(fa.u1 == a * Rational(2) - Alg(Rational(3)));
  CHECK(fa.v1 == Alg(Rational(5)));

  // Root b of X^2 + X + 1 (a sixth root of unity): u1 = -2b - 1, v1 = -3.
  Alg b = factory.tower({1})->gen(0);
  CenterFrame fb = spectral::center_frame(cv, b, 8);
  CHECK(fb.u1 == -(b * Rational(2)) - Alg(Rational(1)));
  CHECK(fb.v1 == Alg(Rational(-3)));
}

TEST_CASE("frame identities at an irreducible-quartic center") {
  ASpectralCurve cv = l2r_curve();
  TowerFactory factory({cv.S});
  Alg x1 = factory.tower({0})->gen(0);
  check_frame_identities(cv, x1, 12);
}

TEST_CASE("frame rejects non-centers and shallow orders") {
  ASpectralCurve cv = fig8_curve();
  CHECK_THROWS_AS(spectral::center_frame(cv, Alg(Rational(1)), 8),
                  std::domain_error);
  TowerFactory factory({maki({1, -3, 1}), maki({1, 1, 1})});
  CHECK_THROWS_AS(
      spectral::center_frame(cv, factory.tower({0})->gen(0), 2),
      std::invalid_argument);
}
