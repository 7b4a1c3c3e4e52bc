// Construction and validation of the hyperelliptic model, cusp polynomial
// extraction, and tame symbols at the punctures.

#include "spectral/curve.hpp"

#include <algorithm>
#include <utility>

#include "spectral/series.hpp"

namespace spectral {

namespace {

QPoly scaled(const QPoly& p, const Rational& s) { return p * QPoly(s); }

// X^2 sigma((X + 1/X)/2) as a polynomial: sum_k sigma_k (X^2+1)^k X^(2-k)/2^k.
// Valid for deg sigma <= 2, which construction guarantees.
QPoly unfold_sigma(const QPoly& sigma) {
  const QPoly xsq_plus_1({Rational(1), Rational(0), Rational(1)});
  QPoly total;
  for (int k = 0; k <= sigma.degree(); ++k) {
    QPoly term = xsq_plus_1.pow(k) * QPoly::monomial(2 - k, Rational(1));
    total += scaled(term, sigma[k] / Rational(2).pow(k));
  }
  return total;
}

// sigma(w) with S(X) = X^2 sigma((X + 1/X)/2) for a monic palindromic
// quartic S = X^4 + s3 X^3 + s2 X^2 + s3 X + 1.
QPoly sigma_from_S(const QPoly& S) {
  QPoly sigma({S[2] - Rational(2), Rational(2) * S[3], Rational(4)});
  if (unfold_sigma(sigma) != S)
    throw std::logic_error("sigma_from_S: back-substitution identity failed");
  return sigma;
}

Rational binomial(int n, int k) {
  Rational r(1);
  for (int i = 1; i <= k; ++i) r = r * Rational(n - i + 1) / Rational(i);
  return r;
}

// The singular point above X = 1 sits at meridian m = -1, so the expansion
// variable is m = -1 + delta, giving X = (1 - delta)^2. The curve passes
// through (1, l0) with a vertical double root and vanishing X-gradient;
// the lowest homogeneous (delta, epsilon) slice of A((1-delta)^2, l0+eps)
// is the cusp polynomial C(t) after setting delta = 1, eps = t.
std::optional<CuspData> compute_cusp(const APolyComponent& comp);

Rational splitting_field_disc(const QPoly& C);

}  // namespace

ASpectralCurve curve_from_A(const APolyComponent& comp) {
  if (comp.a.is_zero())
    throw ClassViolation(
        "component is not quadratic in l: a(X) vanishes identically");

  const QPoly four_ac = scaled(comp.a * comp.c, Rational(4));
  const QPoly D = comp.b * comp.b - four_ac;
  if (D.is_zero())
    throw ClassViolation(
        "discriminant b^2 - 4ac vanishes identically: the component is a "
        "square over Q(X)");

  // D = lead * half^2 * odd with odd the squarefree kernel.
  const std::vector<QPoly> parts = squarefree_decomposition(D);
  QPoly odd(Rational(1));
  QPoly half(Rational(1));
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const int mult = static_cast<int>(i) + 1;
    if (mult % 2 == 1) odd = odd * parts[i];
    half = half * parts[i].pow(mult / 2);
  }
  const Rational lead = D.leading();

  if (odd.degree() != 4)
    throw ClassViolation(
        "degree of the squarefree part of the discriminant is " +
        std::to_string(odd.degree()) + ", expected 4");
  if (!lead.is_square())
    throw ClassViolation(
        "discriminant square part is not a perfect polynomial square: "
        "leading factor " +
        lead.to_string() + " is not a rational square");
  if (!is_palindromic(odd))
    throw ClassViolation(
        "discriminant quartic is not palindromic: X^4 S(1/X) != S(X)");
  if (!is_squarefree(odd))
    throw ClassViolation("discriminant quartic is not squarefree");

  ASpectralCurve curve;
  curve.component = comp;
  curve.S = odd;
  curve.P1 = -comp.b;
  curve.P2 = scaled(half, lead.sqrt_exact());
  curve.R = scaled(comp.a, Rational(2));

  if (curve.P1 * curve.P1 - curve.P2 * curve.P2 * curve.S != four_ac)
    throw std::logic_error("curve_from_A: P1^2 - P2^2 S != 4ac");

  curve.sigma = sigma_from_S(curve.S);

  // Local frames at ramification points need l finite and nonzero and a
  // regular chart there, so S must stay coprime to P1, P2, and a. A monic
  // palindromic squarefree quartic can vanish at neither 0 nor +-1 (a root
  // at +-1 pairs with itself and would have to be double), so w = +-1 and
  // X = 0 are automatically off the ramification locus.
  if (QPoly::gcd(curve.P1, curve.S).degree() > 0)
    throw ClassViolation(
        "P1 = -b shares a factor with S: l vanishes at a ramification point");
  if (QPoly::gcd(curve.P2, curve.S).degree() > 0)
    throw ClassViolation(
        "P2 shares a factor with S: the odd part of log l degenerates at a "
        "ramification point");
  if (QPoly::gcd(curve.R, curve.S).degree() > 0)
    throw ClassViolation(
        "a(X) vanishes at a ramification point: l is singular there");
  if (curve.S.eval(Rational(0)) == Rational(0) ||
      curve.S.eval(Rational(1)) == Rational(0) ||
      curve.S.eval(Rational(-1)) == Rational(0))
    throw std::logic_error("curve_from_A: S vanishes at 0 or +-1");

  // Irreducible factors carry the ramification root algebras; palindromy
  // pairs each factor with the factor containing the inverse roots.
  const std::vector<QPoly> irreducible = factor_rational(curve.S);
  int total_degree = 0;
  for (const QPoly& f : irreducible) total_degree += f.degree();
  if (total_degree != 4)
    throw std::logic_error("curve_from_A: factor degrees do not sum to 4");
  for (const QPoly& f : irreducible) {
    QPoly partner = f.reciprocal(f.degree()).monic();
    auto it = std::find(irreducible.begin(), irreducible.end(), partner);
    if (it == irreducible.end())
      throw std::logic_error(
          "curve_from_A: reciprocal of a factor of S is not a factor");
    curve.factors.push_back(
        {f, static_cast<std::size_t>(it - irreducible.begin())});
  }

  curve.cusp = compute_cusp(comp);
  return curve;
}

const QPoly& sigma_of_w(const ASpectralCurve& curve) {
  if (unfold_sigma(curve.sigma) != curve.S)
    throw std::logic_error("sigma_of_w: stored sigma fails the identity");
  return curve.sigma;
}

const CuspData& cusp_polynomial(const ASpectralCurve& curve) {
  if (!curve.cusp)
    throw ClassViolation(
        "curve is regular above X = 1: no cusp polynomial");
  return *curve.cusp;
}

namespace {

std::optional<CuspData> compute_cusp(const APolyComponent& comp) {
  const Rational a1 = comp.a.eval(Rational(1));
  const Rational b1 = comp.b.eval(Rational(1));
  const Rational c1 = comp.c.eval(Rational(1));
  if (a1 == Rational(0)) return std::nullopt;
  if (b1 * b1 != Rational(4) * a1 * c1) return std::nullopt;
  const Rational l0 = -b1 / (Rational(2) * a1);

  // The point is singular only if the X-gradient vanishes as well.
  const Rational grad_x = comp.a.derivative().eval(Rational(1)) * l0 * l0 +
                          comp.b.derivative().eval(Rational(1)) * l0 +
                          comp.c.derivative().eval(Rational(1));
  if (grad_x != Rational(0)) return std::nullopt;

  // grid[i][j] = coefficient of delta^i epsilon^j in A((1-delta)^2, l0+eps).
  const QPoly* rows[3] = {&comp.c, &comp.b, &comp.a};
  int max_deg = 0;
  for (const QPoly* p : rows) max_deg = std::max(max_deg, p->degree());
  std::vector<std::vector<Rational>> grid(
      2ul * max_deg + 1, std::vector<Rational>(3, Rational(0)));
  for (int j = 0; j <= 2; ++j) {
    const QPoly& pj = *rows[j];
    for (int i = 0; i <= j; ++i) {
      const Rational l_part = binomial(j, i) * l0.pow(j - i);
      for (int k = 0; k <= pj.degree(); ++k) {
        if (pj[k] == Rational(0)) continue;
        // (1 - delta)^(2k) expanded term by term.
        for (int t = 0; t <= 2 * k; ++t) {
          Rational sign = (t % 2 == 0) ? Rational(1) : Rational(-1);
          grid[t][i] += pj[k] * l_part * binomial(2 * k, t) * sign;
        }
      }
    }
  }

  int lowest = -1;
  for (int d = 0; d <= static_cast<int>(grid.size()) + 2 && lowest < 0; ++d)
    for (int j = 0; j <= std::min(d, 2); ++j)
      if (d - j < static_cast<int>(grid.size()) &&
          grid[d - j][j] != Rational(0)) {
        lowest = d;
        break;
      }
  if (lowest < 2)
    throw std::logic_error("compute_cusp: singular point has slice degree < 2");

  QPoly C;
  for (int j = 0; j <= std::min(lowest, 2); ++j)
    if (lowest - j < static_cast<int>(grid.size()))
      C.set_coef(j, grid[lowest - j][j]);
  return CuspData{C, splitting_field_disc(C)};
}

Rational splitting_field_disc(const QPoly& C) {
  Rational disc(1);
  for (const QPoly& f : factor_rational(C)) {
    if (f.degree() <= 1) continue;
    if (f.degree() > 2)
      throw std::domain_error(
          "cusp polynomial has an irreducible factor of degree > 2: "
          "splitting field is not quadratic");
    Rational d = f[1] * f[1] - Rational(4) * f[2] * f[0];
    Rational squarefree, square;
    Rational::squarefree_split(d, &squarefree, &square);
    if (disc == Rational(1)) {
      disc = squarefree;
    } else if (disc != squarefree) {
      throw std::domain_error(
          "cusp polynomial splits over a non-quadratic compositum");
    }
  }
  return disc;
}

// Power series sqrt of a polynomial with constant term 1, through X^hi.
LSeries<Rational> sqrt_one_series(const QPoly& p, int hi) {
  if (p[0] != Rational(1))
    throw std::logic_error("sqrt_one_series: constant term must be 1");
  std::vector<Rational> r(hi + 1, Rational(0));
  r[0] = Rational(1);
  for (int k = 1; k <= hi; ++k) {
    Rational acc = p[k];
    for (int i = 1; i < k; ++i) acc -= r[i] * r[k - i];
    r[k] = acc / Rational(2);
  }
  return LSeries<Rational>(0, std::move(r), hi);
}

LSeries<Rational> poly_series(const QPoly& p, int hi) {
  if (p.is_zero()) return LSeries<Rational>(hi);
  return LSeries<Rational>(0, p.coefficients(), hi);
}

// p as a Laurent series in Y = 1/X, known through Y^hi.
LSeries<Rational> poly_series_at_inf(const QPoly& p, int hi) {
  if (p.is_zero()) return LSeries<Rational>(hi);
  std::vector<Rational> rev(p.coefficients().rbegin(),
                            p.coefficients().rend());
  return LSeries<Rational>(-p.degree(), std::move(rev), hi);
}

struct BranchLead {
  long ord;        // valuation in the local X-side variable (X or Y)
  Rational coef;   // leading coefficient of the branch of l
};

// Leading term of l = (P1 + sign P2 sqrt(S))/R at X -> 0 (at_zero) or
// X -> infinity, computed from truncated series. Cancellation in the
// numerator is bounded by ord(4ac), so a failed read means the horizon
// was too small and the caller retries with a larger one.
std::optional<BranchLead> branch_lead(const ASpectralCurve& cv, int sign,
                                      bool at_zero, int hi) {
  LSeries<Rational> sqrt_s(0);
  LSeries<Rational> p1(0), p2(0), den(0);
  if (at_zero) {
    sqrt_s = sqrt_one_series(cv.S, hi);
    p1 = poly_series(cv.P1, hi);
    p2 = poly_series(cv.P2, hi);
    den = poly_series(cv.R, hi);
  } else {
    // S = Y^-4 * Srec(Y) with Srec = S by palindromy, so sqrt(S) = Y^-2 *
    // sqrt_one_series(S)(Y).
    sqrt_s = sqrt_one_series(cv.S.reciprocal(4), hi).shifted(-2);
    p1 = poly_series_at_inf(cv.P1, hi);
    p2 = poly_series_at_inf(cv.P2, hi);
    den = poly_series_at_inf(cv.R, hi);
  }
  const LSeries<Rational> prod = p2 * sqrt_s;
  const LSeries<Rational> num = sign > 0 ? p1 + prod : p1 - prod;
  if (num.is_zero()) return std::nullopt;
  return BranchLead{num.order() - den.order(),
                    num.coef(num.order()) / den.coef(den.order())};
}

TameSymbol symbol_from_lead(const BranchLead& lead, bool at_zero, int sign) {
  // Local parameters: m at m -> 0 (ord m = +1), t = 1/m at m -> infinity
  // (ord m = -1); in both cases X-side valuations double because X = m^2.
  const long ord_m = at_zero ? 1 : -1;
  const long ord_l = 2 * lead.ord;
  Rational value = lead.coef.pow(-ord_m);
  if ((ord_m * ord_l) % 2 != 0) value = -value;
  std::string label = std::string(at_zero ? "m -> 0" : "m -> infinity") +
                      ", sqrt(S) -> " + (sign > 0 ? "+" : "-");
  return TameSymbol{label, ord_m, ord_l, value};
}

}  // namespace

std::vector<TameSymbol> puncture_tame_symbols(const ASpectralCurve& curve) {
  // The pair {m, l} can only contribute where m or l has a zero or pole.
  // m does so over X in {0, infinity}; l does so where a(X) c(X) = 0, so a
  // nonzero finite root of a*c falls outside the supported puncture set.
  QPoly ac = curve.component.a * curve.component.c;
  if (ac.is_zero())
    throw std::domain_error("tame symbols: l is identically zero or infinite");
  int v0 = 0;
  while (ac[v0] == Rational(0)) ++v0;
  if (v0 < ac.degree())
    throw std::domain_error(
        "tame symbols: l has a zero or pole away from X in {0, infinity}");

  std::vector<TameSymbol> out;
  int hi = ac.degree() + curve.R.degree() + 8;
  for (int attempt = 0; attempt < 4; ++attempt, hi *= 2) {
    out.clear();
    bool complete = true;
    for (bool at_zero : {true, false}) {
      for (int sign : {+1, -1}) {
        auto lead = branch_lead(curve, sign, at_zero, hi);
        if (!lead) {
          complete = false;
          break;
        }
        out.push_back(symbol_from_lead(*lead, at_zero, sign));
      }
      if (!complete) break;
    }
    if (complete) {
      long total = 0;
      for (const TameSymbol& s : out) total += s.ord_l;
      if (total != 0)
        throw std::logic_error(
            "puncture_tame_symbols: divisor of l has nonzero degree");
      return out;
    }
  }
  throw std::logic_error(
      "puncture_tame_symbols: numerator cancellation exceeded the horizon");
}

Rational tame_symbol_product(const ASpectralCurve& curve) {
  Rational prod(1);
  for (const TameSymbol& s : puncture_tame_symbols(curve)) prod = prod * s.value;
  return prod;
}

bool weakly_tame(const TameSymbol& s) { return s.value.abs() == Rational(1); }

}  // namespace spectral
