#include "doctest.h"
#include "spectral/alg.hpp"
#include "spectral/series.hpp"

#include <vector>

using namespace spectral;

namespace {

LSeries<Rational> make(int lo, std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.push_back(Rational(v));
  return LSeries<Rational>(lo, std::move(c));
}

}  // namespace

TEST_CASE("series addition aligns offsets and truncations") {
  auto a = make(-2, {1, 0, 3});  // s^-2 + 3
  auto b = make(0, {-3, 5});     // -3 + 5 s
  auto sum = a + b;
  CHECK(sum.coef(-2) == Rational(1));
  CHECK(sum.coef(0) == Rational(0));
  // a is only known through s^0, so the sum cannot claim s^1.
  CHECK(sum.truncation() == 0);
  CHECK_THROWS_AS(sum.coef(1), TruncationError);
}

TEST_CASE("series multiplication tracks truncation correctly") {
  auto a = make(-1, {1, 1});        // s^-1 + 1, known through s^0
  auto b = make(0, {1, 0, 0, 1});   // 1 + s^3, known through s^3
  auto p = a * b;
  // Product trustworthy through min(-1+3, 0+0) = -1... the tight bound is
  // min(a.lo + b.hi, b.lo + a.hi) = min(2, 0) = 0.
  CHECK(p.truncation() == 0);
  CHECK(p.coef(-1) == Rational(1));
  CHECK(p.coef(0) == Rational(1));
  CHECK_THROWS_AS(p.coef(1), TruncationError);
}

TEST_CASE("series inverse against multiplication oracle") {
  auto w = make(2, {4, 0, -1, 7, 2});  // starts at s^2
  auto inv = w.inverse();
  CHECK(inv.order() == -2);
  auto prod = w * inv;
  // w * w^{-1} = 1 through the shared truncation window.
  CHECK(prod.coef(0) == Rational(1));
  for (int k = 1; k <= prod.truncation(); ++k)
    CHECK(prod.coef(k) == Rational(0));
}

TEST_CASE("parity tracking and mirroring") {
  auto odd = make(1, {2, 0, -5});  // 2s - 5s^3
  CHECK(odd.has_parity(1));
  CHECK(!odd.has_parity(0));
  auto m = odd.mirrored();
  CHECK(m.coef(1) == Rational(-2));
  CHECK(m.coef(3) == Rational(5));
  CHECK((odd + m).is_zero());
}

TEST_CASE("series over tower coefficients") {
  QPoly f(std::vector<Rational>{Rational(1), Rational(-3), Rational(1)});
  TowerFactory tf({f});
  Alg g = tf.tower({0})->gen(0);
  // Polynomials get an explicit truncation horizon.
  LSeries<Alg> s(0, {g, Alg(1)}, 4);
  auto sq = s * s;
  // (g + s)^2 = g^2 + 2 g s + s^2 with g^2 = 3g - 1.
  CHECK(sq.coef(0) == g * Rational(3) - Alg(1));
  CHECK(sq.coef(1) == g + g);
  CHECK(sq.coef(2) == Alg(1));
  auto inv = s.inverse();
  CHECK((s * inv).coef(0) == Alg(1));
  CHECK((s * inv).coef(1).is_zero());
}

TEST_CASE("zero series bookkeeping") {
  LSeries<Rational> z(5);
  CHECK(z.is_zero());
  CHECK(z.truncation() == 5);
  CHECK(z.coef(3) == Rational(0));
  auto sum = z + make(0, {1});
  CHECK(sum.coef(0) == Rational(1));
  auto cancel = make(0, {1, 2}) - make(0, {1, 2});
  CHECK(cancel.is_zero());
  CHECK(cancel.truncation() == 1);
}
