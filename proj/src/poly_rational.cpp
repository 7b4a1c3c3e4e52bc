#include <algorithm>
#include <stdexcept>

#include "spectral/poly.hpp"

namespace spectral {

std::vector<QPoly> squarefree_decomposition(const QPoly& p) {
  if (p.is_zero()) throw std::domain_error("squarefree: zero polynomial");
  QPoly a = p.monic();
  std::vector<QPoly> out;
  if (a.degree() == 0) return out;
  // Yun's algorithm over characteristic zero.
  QPoly d = a.derivative();
  QPoly g = QPoly::gcd(a, d);
  QPoly w = a / g;
  QPoly y = d / g;
  while (true) {
    QPoly z = y - w.derivative();
    if (z.is_zero()) {
      out.push_back(w.monic());
      break;
    }
    QPoly f = QPoly::gcd(w, z);
    out.push_back(f.monic());
    w = w / f;
    y = z / f;
  }
  return out;
}

bool is_squarefree(const QPoly& p) {
  if (p.degree() <= 0) return !p.is_zero();
  return QPoly::gcd(p, p.derivative()).degree() == 0;
}

bool is_palindromic(const QPoly& p) {
  if (p.is_zero()) return true;
  return p.reciprocal(p.degree()) == p;
}

namespace {

// Scales to an integer polynomial with content 1 (sign of leading kept).
std::vector<Rational> primitive_integer_coeffs(const QPoly& p) {
  // Multiply by the lcm of denominators, then divide by the gcd of
  // numerators; done with mpz via Rational string round trips would be
  // wasteful, so emulate with Rational arithmetic directly.
  std::vector<Rational> c(p.coefficients());
  Rational scale(1);
  for (const auto& q : c) {
    if (q.is_zero()) continue;
    // scale *= den(q) / gcd stub: simplest is to multiply by den each time.
    Rational den = Rational::from_string(q.den_string());
    // Keep scale the lcm-ish accumulator; multiplying by den/gcd(den,...) is
    // unnecessary for our small sizes, a plain product is exact and fine.
    scale *= den;
  }
  for (auto& q : c) q *= scale;
  // Divide by numerator gcd via repeated halving is overkill; use mpq-level
  // gcd through strings only if values explode. Sizes here are tiny.
  return c;
}

// Divisors of |n| for a small integer Rational (used by the rational root
// theorem). Throws if n is huge; inputs in this project are small.
std::vector<Rational> small_divisors(const Rational& n) {
  long v = n.abs().to_long();
  std::vector<Rational> out;
  for (long d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(Rational(d));
      out.push_back(Rational(v / d));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

std::vector<Rational> rational_roots(const QPoly& p) {
  std::vector<Rational> roots;
  if (p.degree() <= 0) return roots;
  QPoly rem = p;
  // Strip zero roots first.
  while (rem[0].is_zero() && rem.degree() >= 1) {
    roots.push_back(Rational(0));
    std::vector<Rational> shifted(rem.coefficients().begin() + 1,
                                  rem.coefficients().end());
    rem = QPoly(shifted);
  }
  if (rem.degree() <= 0) return roots;
  std::vector<Rational> ic = primitive_integer_coeffs(rem);
  Rational a0 = ic.front(), an = ic.back();
  std::vector<Rational> ps = small_divisors(a0);
  std::vector<Rational> qs = small_divisors(an);
  std::vector<Rational> candidates;
  for (const auto& pp : ps)
    for (const auto& qq : qs) {
      candidates.push_back(pp / qq);
      candidates.push_back(-(pp / qq));
    }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  for (const auto& cand : candidates) {
    while (rem.degree() >= 1 && rem.eval(cand).is_zero()) {
      roots.push_back(cand);
      QPoly lin(std::vector<Rational>{-cand, Rational(1)});
      rem = rem / lin;
    }
  }
  return roots;
}

namespace {

// Factors a monic squarefree quartic with no rational roots into two monic
// quadratics if possible; returns true and fills f1, f2 on success.
bool split_quartic(const QPoly& q, QPoly* f1, QPoly* f2) {
  // Depress: x = t - p3/4.
  Rational p3 = q[3], p2 = q[2], p1 = q[1];
  Rational quarter(1, 4);
  Rational shift = -p3 * quarter;
  QPoly t_sub(std::vector<Rational>{shift, Rational(1)});
  QPoly dep = q.compose(t_sub);
  Rational A = dep[2], B = dep[1], C = dep[0];
  (void)p2;
  (void)p1;
  // (t^2+ut+v)(t^2-ut+w): u^2 is a rational root of
  // z^3 + 2A z^2 + (A^2-4C) z - B^2.
  QPoly res(std::vector<Rational>{-(B * B), A * A - Rational(4) * C,
                                  Rational(2) * A, Rational(1)});
  for (const auto& z : rational_roots(res)) {
    if (z.sign() < 0) continue;
    if (!z.is_square()) continue;
    Rational u = z.sqrt_exact();
    Rational v, w;
    if (!u.is_zero()) {
      // w - v = B/u, w + v = A + u^2.
      Rational diff = B / u;
      Rational sum = A + z;
      Rational half(1, 2);
      w = (sum + diff) * half;
      v = (sum - diff) * half;
    } else {
      // t^4 + A t^2 + C with B = 0: v,w roots of y^2 - A y ... v+w=A, vw=C.
      Rational disc = A * A - Rational(4) * C;
      if (!disc.is_square()) continue;
      Rational r = disc.sqrt_exact();
      Rational half(1, 2);
      v = (A - r) * half;
      w = (A + r) * half;
    }
    QPoly g1(std::vector<Rational>{v, u, Rational(1)});
    QPoly g2(std::vector<Rational>{w, -u, Rational(1)});
    // Undo the shift.
    *f1 = g1.compose(QPoly(std::vector<Rational>{-shift, Rational(1)}));
    *f2 = g2.compose(QPoly(std::vector<Rational>{-shift, Rational(1)}));
    if ((*f1) * (*f2) != q) continue;
    return true;
  }
  return false;
}

void factor_squarefree_monic(const QPoly& p, std::vector<QPoly>* out) {
  if (p.degree() == 0) return;
  QPoly rem = p;
  for (const auto& r : rational_roots(p)) {
    QPoly lin(std::vector<Rational>{-r, Rational(1)});
    out->push_back(lin);
    rem = rem / lin;
  }
  switch (rem.degree()) {
    case 0:
      return;
    case 1:
      out->push_back(rem.monic());
      return;
    case 2: {
      Rational disc = rem[1] * rem[1] - Rational(4) * rem[2] * rem[0];
      if (disc.is_square())
        throw std::logic_error("factor: quadratic with square disc survived");
      out->push_back(rem.monic());
      return;
    }
    case 3:
      // No rational root means irreducible for a cubic.
      out->push_back(rem.monic());
      return;
    case 4: {
      QPoly f1, f2;
      if (split_quartic(rem.monic(), &f1, &f2)) {
        out->push_back(f1);
        out->push_back(f2);
      } else {
        out->push_back(rem.monic());
      }
      return;
    }
    default:
      throw std::invalid_argument(
          "factor_rational: squarefree part of degree > 4 is unsupported");
  }
}

}  // namespace

std::vector<QPoly> factor_rational(const QPoly& p) {
  if (p.degree() <= 0)
    throw std::invalid_argument("factor_rational: constant polynomial");
  std::vector<QPoly> out;
  auto parts = squarefree_decomposition(p);
  for (size_t i = 0; i < parts.size(); ++i) {
    std::vector<QPoly> fs;
    factor_squarefree_monic(parts[i], &fs);
    for (const auto& f : fs)
      for (size_t k = 0; k <= i; ++k) out.push_back(f);
  }
  std::sort(out.begin(), out.end(), [](const QPoly& a, const QPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  });
  return out;
}

}  // namespace spectral
