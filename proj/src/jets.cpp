// Jet assembly; see jets.hpp for the layout.

#include "spectral/jets.hpp"

#include <stdexcept>

namespace spectral {

namespace {

// A quantity of the shape sigma^{-r/2} poly(w) times unit^grade.
struct Form {
  int grade = 0;
  int r = 0;
  QPoly poly;
};

Form from_amp(const WAmplitude& a) { return {a.grade, a.r, a.poly}; }

Form mul(const Form& a, const Form& b) {
  return {a.grade + b.grade, a.r + b.r, a.poly * b.poly};
}

Form scaled(const Form& a, const Rational& s) {
  return {a.grade, a.r, a.poly * s};
}

void add_to(Form& acc, const Form& t, const QPoly& sigma) {
  if (t.poly.is_zero()) return;
  if (acc.poly.is_zero()) {
    acc = t;
    return;
  }
  if (acc.grade != t.grade)
    throw std::logic_error("jet: period-unit grades do not cancel");
  if ((acc.r - t.r) % 2 != 0)
    throw std::logic_error("jet: sigma parities do not match");
  if (acc.r < t.r) {
    acc.poly = acc.poly * sigma.pow((t.r - acc.r) / 2);
    acc.r = t.r;
  }
  acc.poly += t.poly * sigma.pow((acc.r - t.r) / 2);
}

}  // namespace

Jet jet(RecursionEngine& eng, const SerreTable& serre, int chi) {
  if (chi < 1 || chi > eng.level_cap())
    throw std::invalid_argument("jet: order beyond the computed level cap");
  const QPoly& sigma = eng.curve().sigma;
  const auto T = [&](int d) -> Form {
    return {2 * d, 0, QPoly(serre.t_i0.at(d))};
  };
  const auto G = [&](int h, int n, int d) -> Form {
    return from_amp(amplitude(eng, h, n, d));
  };

  Form sum;  // twice the jet
  if (chi == 1) {
    add_to(sum, G(1, 1, 0), sigma);
    add_to(sum, G(0, 3, 0), sigma);
    add_to(sum, mul(T(1), G(0, 1, 2)), sigma);
  } else if (chi == 2) {
    add_to(sum, G(1, 2, 0), sigma);
    add_to(sum, G(0, 4, 0), sigma);
    add_to(sum, mul(T(1), G(0, 2, 2)), sigma);
    const Form v22 = {4, 0, QPoly(serre.t_i0.at(2) -
                                  serre.t_i0.at(1) * serre.t_i0.at(1))};
    const Form g12 = G(0, 1, 2);
    add_to(sum, scaled(mul(v22, mul(g12, g12)), Rational(1, 2)), sigma);
  } else if (chi == 3) {
    add_to(sum, G(2, 1, 0), sigma);
    add_to(sum, G(1, 3, 0), sigma);
    add_to(sum, mul(T(1), G(1, 1, 2)), sigma);
    add_to(sum, G(0, 5, 0), sigma);
    add_to(sum, mul(T(1), G(0, 3, 2)), sigma);
    add_to(sum, mul(T(2), G(0, 1, 4)), sigma);
    const Rational t2 = serre.t_i0.at(1);
    const Rational t4 = serre.t_i0.at(2);
    const Rational t6 = serre.t_i0.at(3);
    const Form v22 = {4, 0, QPoly(t4 - t2 * t2)};
    const Form v24 = {6, 0, QPoly(t6 - t2 * t4)};
    const Form v222 = {6, 0,
                       QPoly(t6 - t2 * t4 * Rational(3) +
                             t2 * t2 * t2 * Rational(2))};
    const Form g12 = G(0, 1, 2);
    add_to(sum, mul(v22, mul(g12, G(1, 0, 2))), sigma);
    add_to(sum, mul(v22, mul(g12, G(0, 2, 2))), sigma);
    add_to(sum, mul(v24, mul(g12, G(0, 0, 4))), sigma);
    add_to(sum, scaled(mul(v222, mul(g12, mul(g12, g12))), Rational(1, 6)),
           sigma);
  } else {
    throw std::invalid_argument("jet: only orders one to three are wired");
  }

  if (sum.grade != 0)
    throw std::logic_error("jet: nonzero total period-unit grade");
  Jet out;
  out.chi = chi;
  out.poly = sum.poly * Rational(1, 2);
  out.r = sum.r;
  while (out.r >= 2) {
    QPoly quot, rem;
    QPoly::divmod(out.poly, sigma, &quot, &rem);
    if (!rem.is_zero()) break;
    out.poly = quot;
    out.r -= 2;
  }
  return out;
}

KashaevExpansion kashaev_expansion(RecursionEngine& eng,
                                   const SerreTable& serre, int chi_max) {
  if (chi_max < 0)
    throw std::invalid_argument("kashaev_expansion: negative order");
  KashaevExpansion out;
  out.sigma1 = eng.curve().sigma.eval(Rational(1));
  for (int chi = 1; chi <= chi_max; ++chi) {
    const Jet j = jet(eng, serre, chi);
    // jet() reduces r to the minimal representative; evaluation at w = 1
    // needs the full 3 chi power, which sigma1 != 0 makes well defined.
    if (j.r > 3 * chi || (3 * chi - j.r) % 2 != 0)
      throw std::logic_error("kashaev_expansion: unexpected sigma power");
    out.c.push_back(j.poly.eval(Rational(1)) *
                    out.sigma1.pow((3 * chi - j.r) / 2));
  }
  return out;
}

}  // namespace spectral
