#include "doctest.h"
#include "spectral/curve.hpp"

#include <string>
#include <vector>

using spectral::APolyComponent;
using spectral::ASpectralCurve;
using spectral::ClassViolation;
using spectral::QPoly;
using spectral::Rational;

namespace {

QPoly make(std::initializer_list<const char*> ascending) {
  std::vector<Rational> c;
  for (const char* v : ascending) c.push_back(Rational::from_string(v));
  return QPoly(c);
}

QPoly maki(std::initializer_list<long> ascending) {
  std::vector<Rational> c;
  for (long v : ascending) c.push_back(Rational(v));
  return QPoly(c);
}

// Figure-eight knot component: a = X^2, b = -X^4+X^3+2X^2+X-1, c = X^2.
APolyComponent fig8_component() {
  return {maki({0, 0, 1}), maki({-1, 1, 2, 1, -1}), maki({0, 0, 1}),
          "fig8", 1};
}

// Second component of the (-2,3,7) pretzel: a = X^2, b = -X^3+2X^2+2X-1,
// c = X.
APolyComponent l2r_component() {
  return {maki({0, 0, 1}), maki({-1, 2, 2, -1}), maki({0, 1}), "l2r", 1};
}

bool has_factor(const ASpectralCurve& cv, const QPoly& f) {
  for (const auto& rf : cv.factors)
    if (rf.factor == f) return true;
  return false;
}

std::string violation_message(const APolyComponent& comp) {
  try {
    spectral::curve_from_A(comp);
  } catch (const ClassViolation& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("figure-eight reduction to the hyperelliptic model") {
  ASpectralCurve cv = spectral::curve_from_A(fig8_component());
  CHECK(cv.S == maki({1, -2, -1, -2, 1}));
  CHECK(cv.P1 == maki({1, -1, -2, -1, 1}));
  CHECK(cv.P2 == maki({-1, 0, 1}));
  CHECK(cv.R == maki({0, 0, 2}));
  CHECK(spectral::sigma_of_w(cv) == maki({-3, -4, 4}));

  // S factors into two palindromic quadratics, each closed under a -> 1/a.
  REQUIRE(cv.factors.size() == 2);
  CHECK(has_factor(cv, maki({1, -3, 1})));
  CHECK(has_factor(cv, maki({1, 1, 1})));
  for (std::size_t i = 0; i < cv.factors.size(); ++i)
    CHECK(cv.factors[i].reciprocal == i);

  const auto& cusp = spectral::cusp_polynomial(cv);
  CHECK(cusp.polynomial == maki({12, 0, 1}));
  CHECK(cusp.field_disc == Rational(-3));
  // The cusp field matches Q[sqrt(sigma(1))].
  Rational sf, sq;
  Rational::squarefree_split(cv.sigma.eval(Rational(1)), &sf, &sq);
  CHECK(cusp.field_disc == sf);
}

TEST_CASE("pretzel component reduction to the hyperelliptic model") {
  ASpectralCurve cv = spectral::curve_from_A(l2r_component());
  CHECK(cv.S == maki({1, -2, -5, -2, 1}));
  CHECK(cv.P1 == maki({1, -2, -2, 1}));
  CHECK(cv.P2 == maki({-1, 1}));
  CHECK(cv.R == maki({0, 0, 2}));
  CHECK(spectral::sigma_of_w(cv) == maki({-7, -4, 4}));

  // S is irreducible over Q.
  REQUIRE(cv.factors.size() == 1);
  CHECK(cv.factors[0].factor == cv.S);
  CHECK(cv.factors[0].reciprocal == 0);

  const auto& cusp = spectral::cusp_polynomial(cv);
  CHECK(cusp.polynomial == maki({8, 2, 1}));
  CHECK(cusp.field_disc == Rational(-7));
  Rational sf, sq;
  Rational::squarefree_split(cv.sigma.eval(Rational(1)), &sf, &sq);
  CHECK(cusp.field_disc == sf);
}

TEST_CASE("sigma back-substitution on a constructed quartic") {
  // a = 1, b = 2X^2, c = (3X^4-1)/4 gives b^2 - 4ac = X^4 + 1.
  APolyComponent comp{maki({1}), maki({0, 0, 2}),
                      make({"-1/4", "0", "0", "0", "3/4"}), "x4p1", 1};
  ASpectralCurve cv = spectral::curve_from_A(comp);
  CHECK(cv.S == maki({1, 0, 0, 0, 1}));
  CHECK(spectral::sigma_of_w(cv) == maki({-2, 0, 4}));
  REQUIRE(cv.factors.size() == 1);

  // Regular above X = 1, so no cusp polynomial.
  CHECK(!cv.cusp.has_value());
  CHECK_THROWS_AS(spectral::cusp_polynomial(cv), ClassViolation);

  // l has zeros at the quartic roots of 1/3, outside the puncture set.
  CHECK_THROWS_AS(spectral::puncture_tame_symbols(cv), std::domain_error);
}

TEST_CASE("curve_from_A is idempotent on the reconstructed component") {
  ASpectralCurve cv = spectral::curve_from_A(fig8_component());
  // Rebuild a, b, c from the model: a = R/2, b = -P1, c = (P1^2-P2^2 S)/(4a).
  QPoly a2 = cv.R * QPoly(Rational(1, 2));
  QPoly b2 = -cv.P1;
  QPoly num = cv.P1 * cv.P1 - cv.P2 * cv.P2 * cv.S;
  QPoly c2, rem;
  QPoly::divmod(num, a2 * QPoly(Rational(4)), &c2, &rem);
  REQUIRE(rem.is_zero());
  ASpectralCurve cv2 =
      spectral::curve_from_A({a2, b2, c2, "fig8-rebuilt", 1});
  CHECK(cv2.S == cv.S);
  CHECK(cv2.P1 == cv.P1);
  CHECK(cv2.P2 == cv.P2);
  CHECK(cv2.R == cv.R);
  CHECK(cv2.sigma == cv.sigma);
}

TEST_CASE("rejection taxonomy for out-of-class components") {
  // Not quadratic in l.
  CHECK_THROWS_AS(
      spectral::curve_from_A({QPoly(), maki({1, 1}), maki({1}), "lin", 1}),
      ClassViolation);

  // Non-palindromic discriminant (squarefree part has degree 6).
  CHECK_THROWS_AS(
      spectral::curve_from_A({maki({1}), maki({1, 0, 0, 1}), maki({1}),
                              "bad", 1}),
      ClassViolation);

  // Squarefree part of degree 0.
  CHECK(violation_message({maki({1}), maki({0, 1}), QPoly(), "sq", 1})
            .find("degree") != std::string::npos);

  // Palindromic quartic scaled by a non-square leading constant.
  QPoly c5 = maki({1, -2, -1, -2, 1}) * QPoly(Rational(-5, 4));
  CHECK(violation_message({maki({1}), QPoly(), c5, "lead5", 1})
            .find("square") != std::string::npos);

  // Non-palindromic squarefree quartic.
  QPoly c4 = maki({1, 1, 0, 0, 1}) * QPoly(Rational(-1, 4));
  CHECK(violation_message({maki({1}), QPoly(), c4, "npal", 1})
            .find("palindromic") != std::string::npos);

  // P1 sharing a ramification factor with S.
  QPoly s41 = maki({1, -2, -1, -2, 1});
  QPoly b = QPoly::monomial(1, Rational(1)) * maki({1, -3, 1});
  QPoly c = (b * b - s41) * QPoly(Rational(1, 4));
  CHECK(violation_message({maki({1}), b, c, "shared", 1})
            .find("shares a factor") != std::string::npos);
}

TEST_CASE("puncture tame symbols for both presets") {
  for (const APolyComponent& comp : {fig8_component(), l2r_component()}) {
    ASpectralCurve cv = spectral::curve_from_A(comp);
    auto symbols = spectral::puncture_tame_symbols(cv);
    REQUIRE(symbols.size() == 4);
    long total_ord = 0;
    for (const auto& s : symbols) {
      CHECK(s.value == Rational(1));
      CHECK(spectral::weakly_tame(s));
      total_ord += s.ord_l;
    }
    CHECK(total_ord == 0);
    CHECK(spectral::tame_symbol_product(cv) == Rational(1));
  }
}

TEST_CASE("tame symbol orders match the longitude divisor") {
  ASpectralCurve cv = spectral::curve_from_A(fig8_component());
  auto symbols = spectral::puncture_tame_symbols(cv);
  // Branch order over each puncture: sqrt(S) -> +1 then -1, m -> 0 first.
  CHECK(symbols[0].ord_m == 1);
  CHECK(symbols[0].ord_l == 4);
  CHECK(symbols[1].ord_m == 1);
  CHECK(symbols[1].ord_l == -4);
  CHECK(symbols[2].ord_m == -1);
  CHECK(symbols[2].ord_l == -4);
  CHECK(symbols[3].ord_m == -1);
  CHECK(symbols[3].ord_l == 4);
}
