#include "doctest.h"
#include "spectral/amplitude.hpp"

#include <initializer_list>
#include <string>
#include <vector>

using spectral::ASpectralCurve;
using spectral::QPoly;
using spectral::Rational;
using spectral::RecursionEngine;
using spectral::WAmplitude;

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

QPoly wpoly(std::initializer_list<long> ascending, long den) {
  std::vector<Rational> c;
  for (long v : ascending) c.push_back(Rational(v, den));
  return QPoly(c);
}

void check_amp(RecursionEngine& eng, int h, int n, int d, int r,
               const QPoly& expect) {
  const WAmplitude a = spectral::amplitude(eng, h, n, d);
  CHECK(a.grade == -d);
  CHECK(a.r == r);
  const std::string what = "h=" + std::to_string(h) + " n=" +
                           std::to_string(n) + " d=" + std::to_string(d) +
                           " computed poly: " + a.poly.to_string();
  CHECK_MESSAGE(a.poly == expect, what);
}

}  // namespace

TEST_CASE("figure-eight contractions reproduce the closed forms") {
  ASpectralCurve cv = fig8_curve();
  RecursionEngine eng(cv, 3);

  // level one
  check_amp(eng, 0, 3, 0, 3, wpoly({-7, 12, -12}, 6));
  check_amp(eng, 0, 1, 2, 1, wpoly({6, -8}, 15));
  check_amp(eng, 1, 1, 0, 3, wpoly({-87, -30, 44, -8}, 90));

  // level two
  check_amp(eng, 0, 4, 0, 6, wpoly({25, -67, 44, 24, -32, 16}, 3));
  check_amp(eng, 0, 2, 2, 4, wpoly({-486, 756, 312, -464, 128}, 135));
  check_amp(eng, 0, 0, 4, 0, wpoly({-256}, 10125));
  check_amp(eng, 1, 2, 0, 6,
            wpoly({23193, -26352, -17928, 22176, 13136, -9088, 1280}, 1620));
  check_amp(eng, 1, 0, 2, 0, wpoly({-368}, 10125));

  // level three
  check_amp(eng, 0, 5, 0, 9,
            wpoly({-5644, 19071, -18542, -3988, 18184, -9520, -1440, 1600,
                   -640},
                  60));
  check_amp(eng, 0, 3, 2, 7,
            wpoly({1767582, -3535326, 349812, 2736720, -1272000, -942176,
                   566848, -75776},
                  30375));
  check_amp(eng, 0, 1, 4, 5,
            wpoly({-878256, -450108, 1480920, 306992, -1150048, 376832},
                  455625));
  check_amp(eng, 1, 3, 0, 9,
            wpoly({-34229709, 71667990, -12104316, -55663848, 30776112,
                   8573472, -8240960, -6701952, 2901504, -249856},
                  109350));
  check_amp(eng, 1, 1, 2, 7,
            wpoly({14659056, -80784, -15920064, -10067136, 11188352, 10242048,
                   -11834880, 2830336},
                  455625));
  check_amp(eng, 2, 1, 0, 9,
            wpoly({-219603474, 191047329, 179205966, -78657516, 952056,
                   -177750608, 49067168, 94437312, -70087552, 13238272},
                  2733750));
}

TEST_CASE("whitehead-link-fillings contractions reproduce the closed forms") {
  ASpectralCurve cv = l2r_curve();
  RecursionEngine eng(cv, 2);

  // level one
  check_amp(eng, 0, 3, 0, 3, wpoly({-19, -6, -36, -8}, 24));
  check_amp(eng, 0, 1, 2, 1, wpoly({7, -6}, 14));
  check_amp(eng, 1, 1, 0, 3, wpoly({-217, -210, -12, 40}, 168));

  // level two
  check_amp(eng, 0, 4, 0, 6,
            wpoly({1257, -2060, 1532, 3168, -144, 832, 64}, 192));
  check_amp(eng, 0, 2, 2, 4, wpoly({-931, 1988, 952, -816, 144}, 294));
  check_amp(eng, 0, 0, 4, 0, wpoly({-27}, 1372));
  check_amp(eng, 1, 2, 0, 6,
            wpoly({556003, -350644, -443884, 841120, 341968, -116544, 7872},
                  28224));
  check_amp(eng, 1, 0, 2, 0, wpoly({-57}, 2744));
}

TEST_CASE("cycle contraction of odd multiplicity vanishes") {
  ASpectralCurve cv = fig8_curve();
  RecursionEngine eng(cv, 2);
  CHECK(spectral::amplitude(eng, 0, 2, 1).poly.is_zero());
  CHECK(spectral::amplitude(eng, 0, 0, 3).poly.is_zero());
  CHECK(spectral::amplitude(eng, 0, 1, 3).poly.is_zero());
  CHECK(spectral::amplitude(eng, 1, 0, 1).poly.is_zero());
  CHECK(spectral::amplitude(eng, 1, 1, 1).poly.is_zero());
}

TEST_CASE("contractions do not depend on which variables take the cycle") {
  ASpectralCurve cv = fig8_curve();
  RecursionEngine eng(cv, 2);
  const WAmplitude ref = spectral::amplitude(eng, 0, 2, 2);
  for (const std::vector<int>& pick :
       {std::vector<int>{0, 1}, {0, 2}, {1, 3}, {0, 3}, {1, 2}}) {
    const WAmplitude alt = spectral::amplitude(eng, 0, 2, 2, pick);
    CHECK(alt.r == ref.r);
    CHECK(alt.poly == ref.poly);
  }
  const WAmplitude ref2 = spectral::amplitude(eng, 0, 1, 2);
  for (const std::vector<int>& pick :
       {std::vector<int>{0, 1}, {0, 2}, {1, 2}}) {
    const WAmplitude alt = spectral::amplitude(eng, 0, 1, 2, pick);
    CHECK(alt.r == ref2.r);
    CHECK(alt.poly == ref2.poly);
  }
}

TEST_CASE("surviving sigma power parity follows the path count") {
  ASpectralCurve cv = l2r_curve();
  RecursionEngine eng(cv, 2);
  for (int h = 0; h <= 1; ++h)
    for (int n = 0; n <= 4; ++n)
      for (int d = 0; d <= 4; d += 2) {
        const int level = 2 * h - 2 + n + d;
        if (level < 1 || level > 2) continue;
        const WAmplitude a = spectral::amplitude(eng, h, n, d);
        if (a.poly.is_zero()) continue;
        CHECK(a.r % 2 == n % 2);
        CHECK(a.grade == -d);
      }
}
