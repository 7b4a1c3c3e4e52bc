#include "doctest.h"
#include "spectral/modular.hpp"

#include <vector>

#include "spectral/alg.hpp"
#include "spectral/presets.hpp"

using spectral::Alg;
using spectral::ClassViolation;
using spectral::EllipticInvariants;
using spectral::QPoly;
using spectral::QuadValue;
using spectral::Rational;
using spectral::SerreTable;
using spectral::ThetaQuartics;
using spectral::ThetaRingPoly;
using spectral::TowerFactory;
using spectral::TowerPtr;
using spectral::VerificationMismatch;

namespace {

QPoly maki(std::initializer_list<long> ascending) {
  std::vector<Rational> c;
  for (long v : ascending) c.push_back(Rational(v));
  return QPoly(c);
}

QPoly make(std::initializer_list<const char*> ascending) {
  std::vector<Rational> c;
  for (const char* v : ascending) c.push_back(Rational::from_string(v));
  return QPoly(c);
}

QPoly fig8_quartic() { return maki({1, -2, -1, -2, 1}); }
QPoly l2r_quartic() { return maki({1, -2, -5, -2, 1}); }

Rational frac(long n, long d) { return Rational(n) / Rational(d); }

// a/8 + (b/8) sqrt(d), the shape of every preset theta value.
QuadValue eighth(long a, long b, long d) {
  return QuadValue(Rational(a, 8), Rational(b, 8), d);
}

ThetaRingPoly ring_e4() {
  const ThetaRingPoly t2 = ThetaRingPoly::gen_t2();
  const ThetaRingPoly t4 = ThetaRingPoly::gen_t4();
  return t2 * t2 + t2 * t4 + t4 * t4;
}

ThetaRingPoly ring_e6() {
  const ThetaRingPoly t2 = ThetaRingPoly::gen_t2();
  const ThetaRingPoly t4 = ThetaRingPoly::gen_t4();
  return (t2 - t4) * (t2 + t4 * Rational(2)) * (t2 * Rational(2) + t4) *
         Rational(-1, 2);
}

}  // namespace

TEST_CASE("elliptic invariants of the model quartics") {
  EllipticInvariants f8 = spectral::elliptic_invariants(fig8_quartic());
  CHECK(f8.g2 == frac(-1, 12));
  CHECK(f8.g3 == frac(161, 216));
  CHECK(f8.wg2 == frac(1, 12));
  CHECK(f8.wg3 == frac(-161, 216));
  CHECK(f8.delta == Rational(-15));

  EllipticInvariants l2r = spectral::elliptic_invariants(l2r_quartic());
  CHECK(l2r.g2 == frac(-25, 12));
  CHECK(l2r.g3 == frac(253, 216));
  CHECK(l2r.delta == Rational(-28));

  // Hand oracle: X^4 + 1 has I = 12, J = 0.
  EllipticInvariants lem = spectral::elliptic_invariants(maki({1, 0, 0, 0, 1}));
  CHECK(lem.wg2 == Rational(1));
  CHECK(lem.wg3 == Rational(0));
  CHECK(lem.delta == Rational(1));

  // The invariants are unimodular covariants, so X -> X + 1 preserves them.
  QPoly shifted = fig8_quartic().compose(maki({1, 1}));
  EllipticInvariants sh = spectral::elliptic_invariants(shifted);
  CHECK(sh.wg2 == f8.wg2);
  CHECK(sh.wg3 == f8.wg3);

  EllipticInvariants rep = spectral::invariants_from_reported(f8.g2, f8.g3);
  CHECK(rep.wg2 == f8.wg2);
  CHECK(rep.wg3 == f8.wg3);
  CHECK(rep.delta == f8.delta);

  CHECK_THROWS_AS(spectral::elliptic_invariants(maki({1, 0, 0, 1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(spectral::elliptic_invariants(maki({2, 0, 0, 0, 2})),
                  std::invalid_argument);
  CHECK_THROWS_AS(spectral::elliptic_invariants(maki({1, 0, -2, 0, 1})),
                  ClassViolation);
}

TEST_CASE("theta fourth powers through the rational 2-torsion point") {
  EllipticInvariants f8 = spectral::elliptic_invariants(fig8_quartic());
  ThetaQuartics tf8 = spectral::theta_quartics(f8);
  CHECK(tf8.t2 == eighth(7, -1, -15));
  CHECK(tf8.t3 == eighth(7, 1, -15));
  CHECK(tf8.t4 == QuadValue(Rational(0), Rational(1, 4), -15));
  CHECK(tf8.t3 == tf8.t2 + tf8.t4);
  CHECK(tf8.t3 == tf8.t2.conj());
  CHECK(tf8.i0 == 4);
  CHECK(tf8.disc == -15);
  CHECK(spectral::theta_relations_hold(tf8.t2, tf8.t4, f8));
  CHECK_NOTHROW(spectral::discriminant_check(tf8, f8));

  EllipticInvariants l2 = spectral::elliptic_invariants(l2r_quartic());
  ThetaQuartics tl2 = spectral::theta_quartics(l2);
  CHECK(tl2.t2 == eighth(11, -1, -7));
  CHECK(tl2.t3 == eighth(11, 1, -7));
  CHECK(tl2.t4 == QuadValue(Rational(0), Rational(1, 4), -7));
  CHECK(tl2.i0 == 4);
  CHECK(tl2.disc == -7);
  CHECK(spectral::theta_relations_hold(tl2.t2, tl2.t4, l2));
  CHECK_NOTHROW(spectral::discriminant_check(tl2, l2));

  // Fully rational 2-torsion: X^4 + 1 gives three rational theta values.
  EllipticInvariants lem = spectral::elliptic_invariants(maki({1, 0, 0, 0, 1}));
  ThetaQuartics tlm = spectral::theta_quartics(lem);
  CHECK(tlm.t2 == QuadValue(frac(1, 2)));
  CHECK(tlm.t3 == QuadValue(Rational(1)));
  CHECK(tlm.t4 == QuadValue(frac(1, 2)));
  CHECK(tlm.disc == 0);
  CHECK(spectral::theta_relations_hold(tlm.t2, tlm.t4, lem));
  CHECK_NOTHROW(spectral::discriminant_check(tlm, lem));

  // A wrong value must fail both consistency gates.
  CHECK_FALSE(spectral::theta_relations_hold(tf8.t2 + QuadValue(Rational(1)),
                                             tf8.t4, f8));
  ThetaQuartics bad = tf8;
  bad.t2 = bad.t2 + QuadValue(Rational(1));
  CHECK_THROWS_AS(spectral::discriminant_check(bad, f8), VerificationMismatch);

  // Irrational 2-torsion is outside this solver's class.
  EllipticInvariants c19 =
      spectral::invariants_from_reported(frac(8, 3), frac(-1, 27));
  CHECK(c19.delta == Rational(-19));
  CHECK_THROWS_AS(spectral::theta_quartics(c19), ClassViolation);
}

TEST_CASE("six-element theta orbit") {
  EllipticInvariants f8 = spectral::elliptic_invariants(fig8_quartic());
  ThetaQuartics tf8 = spectral::theta_quartics(f8);
  auto orbit = spectral::theta_orbit(tf8);

  CHECK(orbit[0].t2 == tf8.t2);
  CHECK(orbit[0].t3 == tf8.t3);
  CHECK(orbit[0].t4 == tf8.t4);
  for (const ThetaQuartics& o : orbit) {
    CHECK(o.t3 == o.t2 + o.t4);
    CHECK(spectral::theta_relations_hold(o.t2, o.t4, f8));
    CHECK_NOTHROW(spectral::discriminant_check(o, f8));
    CHECK(spectral::same_theta_orbit(o, tf8));
    CHECK(spectral::same_theta_orbit(tf8, o));
  }
  // The purely imaginary slot follows the value around the orbit.
  CHECK(orbit[0].i0 == 4);
  CHECK(orbit[1].i0 == 2);
  CHECK(orbit[2].i0 == 3);
  CHECK(orbit[5].i0 == 4);

  // The tabulated triple ((7+i sqrt(-15))/8, (7-i sqrt(-15))/8, -t4) is the
  // orbit element (t3, t2, -t4) of the solver output.
  ThetaQuartics reported{eighth(7, 1, -15), eighth(7, -1, -15),
                         QuadValue(Rational(0), Rational(-1, 4), -15), 4, -15};
  CHECK(spectral::same_theta_orbit(tf8, reported));

  EllipticInvariants l2 = spectral::elliptic_invariants(l2r_quartic());
  ThetaQuartics tl2 = spectral::theta_quartics(l2);
  CHECK_FALSE(spectral::same_theta_orbit(tf8, tl2));
}

TEST_CASE("squared-difference cubic for the theta square") {
  EllipticInvariants f8 = spectral::elliptic_invariants(fig8_quartic());
  QPoly cf8 = spectral::theta_isquare_cubic(f8);
  CHECK(cf8 == make({"15/16", "1/256", "-1/8", "1"}));
  CHECK(cf8.eval(frac(-15, 16)) == Rational(0));

  // Its roots are exactly the three squared theta values.
  ThetaQuartics tf8 = spectral::theta_quartics(f8);
  QuadValue s2 = tf8.t2 * tf8.t2, s3 = tf8.t3 * tf8.t3, s4 = tf8.t4 * tf8.t4;
  QuadValue e1 = s2 + s3 + s4;
  QuadValue e2 = s2 * s3 + s2 * s4 + s3 * s4;
  QuadValue e3 = s2 * s3 * s4;
  CHECK(cf8 == QPoly({-e3.rational_value(), e2.rational_value(),
                      -e1.rational_value(), Rational(1)}));

  EllipticInvariants l2 = spectral::elliptic_invariants(l2r_quartic());
  CHECK(spectral::theta_isquare_cubic(l2).eval(frac(-7, 16)) == Rational(0));

  // Conductor 19, 11 and 43 curves with irrational 2-torsion: the cubic is
  // irreducible, so no theta square is a rational number.
  QPoly c19 = spectral::theta_isquare_cubic(
      spectral::invariants_from_reported(frac(8, 3), frac(-1, 27)));
  CHECK(c19 == make({"19/16", "4", "4", "1"}));
  QPoly c11 = spectral::theta_isquare_cubic(
      spectral::invariants_from_reported(frac(-4, 3), frac(19, 27)));
  CHECK(c11 == make({"11/16", "1", "-2", "1"}));
  QPoly c43 = spectral::theta_isquare_cubic(
      spectral::invariants_from_reported(frac(-4, 3), frac(35, 27)));
  CHECK(c43 == make({"43/16", "1", "-2", "1"}));
  for (const QPoly* c : {&c19, &c11, &c43})
    CHECK(spectral::rational_roots(*c).empty());
}

namespace {

// Adjoins two distinct roots of the (irreducible) Weierstrass cubic and
// certifies the theta relations exactly in the resulting degree-6 algebra.
void certify_in_splitting_tower(const Rational& g2, const Rational& g3) {
  EllipticInvariants inv = spectral::invariants_from_reported(g2, g3);
  const Rational p = -inv.wg2 / Rational(4);
  const Rational q = -inv.wg3 / Rational(4);
  QPoly cubic({q, p, Rational(0), Rational(1)});
  REQUIRE(spectral::rational_roots(cubic).empty());

  TowerFactory factory({cubic});
  TowerPtr tower = factory.tower({0, 0});
  REQUIRE(tower->dim() == 6);
  Alg r3 = tower->gen(0);
  Alg r2 = tower->gen(1);
  Alg r1 = -(r3 + r2);
  Alg t4 = r1 - r2;
  Alg t2 = r2 - r3;
  Alg t3 = r1 - r3;

  CHECK(t2 * t2 + t2 * t4 + t4 * t4 == Alg(Rational(3, 4) * inv.wg2));
  Alg e6 = (t2 - t4) * (t2 + t4 * Rational(2)) * (t2 * Rational(2) + t4) *
           Rational(-1, 2);
  CHECK(e6 == Alg(Rational(27, 8) * inv.wg3));
  Alg prod = t2 * t3 * t4;
  CHECK(prod * prod == Alg(inv.delta / Rational(16)));

  QPoly resolvent = spectral::theta_isquare_cubic(inv);
  Alg at_t4sq = resolvent.eval_in<Alg>(
      t4 * t4, [](const Rational& c) { return Alg(c); });
  CHECK(at_t4sq.is_zero());
}

}  // namespace

TEST_CASE("splitting tower certifies theta relations beyond rational "
          "2-torsion") {
  certify_in_splitting_tower(frac(8, 3), frac(-1, 27));
  certify_in_splitting_tower(frac(-4, 3), frac(19, 27));
  certify_in_splitting_tower(frac(-4, 3), frac(35, 27));
}

TEST_CASE("differential ring of the theta constants") {
  const ThetaRingPoly t2 = ThetaRingPoly::gen_t2();
  const ThetaRingPoly t4 = ThetaRingPoly::gen_t4();
  const ThetaRingPoly e2 = ThetaRingPoly::gen_e2();
  const ThetaRingPoly e4 = ring_e4();
  const ThetaRingPoly e6 = ring_e6();

  // Weight-raising relations of the Eisenstein-like generators.
  CHECK(e4.derived() == (e6 - e2 * e4) * Rational(8, 3));
  CHECK(e6.derived() == (e4 * e4 - e2 * e6) * Rational(4));

  // Logarithmic derivative seeds.
  CHECK(spectral::theta_log_derivative(2, 0) == ThetaRingPoly(Rational(1)));
  CHECK(spectral::theta_log_derivative(2, 1) ==
        (-t2 - t4 * Rational(2) - e2) * Rational(1, 3));
  CHECK(spectral::theta_log_derivative(3, 1) ==
        (t4 - t2 - e2) * Rational(1, 3));
  CHECK(spectral::theta_log_derivative(4, 1) ==
        (t2 * Rational(2) + t4 - e2) * Rational(1, 3));

  for (int d = 1; d <= 5; ++d) {
    ThetaRingPoly sum;
    for (int i = 2; i <= 4; ++i) {
      ThetaRingPoly rd = spectral::theta_log_derivative(i, d);
      // 3^d clears every denominator of the d-th logarithmic derivative.
      CHECK((rd * Rational(3).pow(d)).has_integer_coefficients());
      if (d == 1) sum = sum + rd;
    }
    // The three first-order terms add up to -E2.
    if (d == 1) CHECK(sum == e2 * Rational(-1));
  }

  // The swap (t2, t4) -> (t2 + t4, -t4) commutes with D, exchanges the
  // characteristics 2 and 3, and fixes 4; that is why the selected column
  // of the Serre table is rational whenever t2 and t3 are conjugate.
  for (int d = 1; d <= 5; ++d) {
    ThetaRingPoly r2d = spectral::theta_log_derivative(2, d);
    ThetaRingPoly r3d = spectral::theta_log_derivative(3, d);
    ThetaRingPoly r4d = spectral::theta_log_derivative(4, d);
    CHECK(r2d.substituted(t2 + t4, -t4, e2) == r3d);
    CHECK(r3d.substituted(t2 + t4, -t4, e2) == r2d);
    CHECK(r4d.substituted(t2 + t4, -t4, e2) == r4d);
  }
}

TEST_CASE("Serre derivative table at the selected characteristic") {
  EllipticInvariants f8 = spectral::elliptic_invariants(fig8_quartic());
  ThetaQuartics tf8 = spectral::theta_quartics(f8);
  SerreTable sf8 = spectral::serre_table(tf8, 4);
  CHECK(sf8.i0 == 4);
  CHECK(sf8.t_i0 == std::vector<Rational>{Rational(1), frac(7, 12),
                                          frac(-47, 48), frac(-301, 576),
                                          frac(-28285, 6912)});

  EllipticInvariants l2 = spectral::elliptic_invariants(l2r_quartic());
  ThetaQuartics tl2 = spectral::theta_quartics(l2);
  SerreTable sl2 = spectral::serre_table(tl2, 4);
  CHECK(sl2.t_i0 == std::vector<Rational>{Rational(1), frac(11, 12),
                                          frac(-71, 48), frac(319, 576),
                                          frac(-16333, 6912)});

  for (const SerreTable* t : {&sf8, &sl2}) {
    for (int d = 0; d <= t->d_max; ++d) {
      // Characteristics 2 and 3 carry conjugate values; the selected one
      // stays rational.
      CHECK(t->columns[0][d] == t->columns[1][d].conj());
      CHECK(t->columns[2][d].is_rational());
      CHECK(t->columns[2][d].rational_value() == t->t_i0[d]);
    }
    CHECK(t->columns[0][1] + t->columns[1][1] + t->columns[2][1] ==
          QuadValue(Rational(0)));
  }

  // d = 1 recovers minus the rational half-period: e3 = -7/12 for the
  // figure-eight model.
  CHECK(sf8.t_i0[1] == frac(7, 12));
}

TEST_CASE("Cardano data of the squared-difference resolvent") {
  using spectral::CardanoRealRoot;
  // Rational 2-torsion first: the real root of the resolvent is the known
  // rational square of the imaginary theta quartic.
  EllipticInvariants f8 = spectral::elliptic_invariants(fig8_quartic());
  QPoly rf8 = spectral::theta_isquare_cubic(f8);
  CHECK(rf8.eval(frac(-15, 16)) == Rational(0));
  EllipticInvariants l2 = spectral::elliptic_invariants(l2r_quartic());
  CHECK(spectral::theta_isquare_cubic(l2).eval(frac(-7, 16)) == Rational(0));

  CardanoRealRoot cf8 = spectral::cardano_real_root(rf8);
  // cbrt(ucube) cbrt(conj ucube) = prod and ucube + conj ucube = -Q hold by
  // construction; check them as ring identities.
  CHECK(cf8.ucube.norm() == cf8.prod.pow(3));
  CHECK(cf8.ucube + cf8.ucube.conj() ==
        QuadValue(Rational(2) * cf8.ucube.rational_coord()));

  // The three curves whose 2-torsion is irrational. Every piece of the
  // radical expression is pinned exactly.
  struct Row {
    const char* label;
    Rational shift, prod, a, b;
    long d;
  };
  const Row rows[] = {
      {"19a3", frac(-4, 3), frac(4, 9), frac(-257, 864), frac(1, 288), 57},
      {"11a3", frac(2, 3), frac(1, 9), frac(-329, 864), frac(19, 288), 33},
      {"43a1", frac(2, 3), frac(1, 9), frac(-1193, 864), frac(35, 288), 129},
  };
  for (const Row& row : rows) {
    const spectral::JacobianPreset* jp = spectral::find_jacobian_preset(row.label);
    REQUIRE(jp != nullptr);
    EllipticInvariants inv =
        spectral::invariants_from_reported(jp->g2, jp->g3);
    CHECK_THROWS_AS(spectral::theta_quartics(inv), ClassViolation);
    CardanoRealRoot cr =
        spectral::cardano_real_root(spectral::theta_isquare_cubic(inv));
    CHECK(cr.shift == row.shift);
    CHECK(cr.prod == row.prod);
    CHECK(cr.disc == row.d);
    CHECK(cr.ucube == QuadValue(row.a, row.b, row.d));
    CHECK(cr.ucube.norm() == cr.prod.pow(3));
  }

  // Guard rails: non-monic or non-cubic input, and a cubic with three real
  // roots, whose real radicals do not exist.
  CHECK_THROWS_AS(spectral::cardano_real_root(maki({1, 1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(spectral::cardano_real_root(maki({0, 0, 0, 2})),
                  std::invalid_argument);
  CHECK_THROWS_AS(spectral::cardano_real_root(maki({0, -1, 0, 1})),
                  ClassViolation);
}
