// Contraction machinery; see amplitude.hpp for the conventions.

#include "spectral/amplitude.hpp"

#include <algorithm>
#include <stdexcept>

namespace spectral {

namespace {

using APoly = Poly<Alg>;

APoly lift_poly(const QPoly& p) {
  std::vector<Alg> c;
  for (int k = 0; k <= p.degree(); ++k) c.emplace_back(p[k]);
  return APoly(std::move(c));
}

APoly exact_div(const APoly& a, const APoly& b) {
  APoly q, r;
  APoly::divmod(a, b, &q, &r);
  if (!r.is_zero())
    throw std::logic_error("amplitude: expected exact polynomial division");
  return q;
}

// Path integral of wp^{(p)}(z - z_c) along the based pair, written as
// sqrt(S) * num / q^m with q = (X - c)(X - 1/c). The two orbit legs add,
// and the primitive of wp^{(p)} is wp^{(p-1)} taken at both centers of the
// pair; for p = 0 it is the odd abelian integral of the third-kind form
// with vanishing constants. Iterating D = sqrt(S) d/dX an odd number of
// times on a rational function yields sqrt(S) times a rational function,
// which the A/B chain below tracks as numerators over powers of (X - e).
struct PathValue {
  APoly num;
  APoly q;
  int m;
};

PathValue path_value(const QPoly& S, const Alg& c, int p) {
  const Alg cinv = c.inverse();
  const APoly x = APoly::x();
  const APoly q = (x - APoly(c)) * (x - APoly(cinv));
  if (p == 0) {
    const APoly num((cinv - c) * Rational(1, 2));
    return {num, q, 1};
  }
  const APoly sl = lift_poly(S);
  const APoly slp = lift_poly(S.derivative());
  const auto chain = [&](const Alg& e) -> APoly {
    const APoly xe = x - APoly(e);
    APoly b(S.derivative().eval_in<Alg>(e, [](const Rational& v) {
      return Alg(v);
    }) * Rational(1, 4));
    int k = 1;
    APoly a;
    for (int j = 1; j <= p / 2; ++j) {
      a = b.derivative() * xe - b * Alg(k);
      ++k;
      if (j == p / 2) break;
      b = slp * a * xe * Alg(Rational(1, 2)) +
          sl * (a.derivative() * xe - a * Alg(k));
      ++k;
    }
    return a;
  };
  const APoly xc = x - APoly(c);
  const APoly xci = x - APoly(cinv);
  const APoly num = chain(c) * xci.pow(p) - chain(cinv) * xc.pow(p);
  return {num, q, p};
}

Rational factorial(int k) {
  Rational f(1);
  for (int i = 2; i <= k; ++i) f = f * Rational(i);
  return f;
}

QPoly trace_poly(const APoly& p) {
  std::vector<Rational> c;
  for (int k = 0; k <= p.degree(); ++k) c.push_back(p[k].trace());
  return QPoly(std::move(c));
}

}  // namespace

WAmplitude amplitude(RecursionEngine& eng, int h, int n, int d) {
  std::vector<int> cyc;
  for (int v = n; v < n + d; ++v) cyc.push_back(v);
  return amplitude(eng, h, n, d, cyc);
}

WAmplitude amplitude(RecursionEngine& eng, int h, int n, int d,
                     const std::vector<int>& cycle_vars) {
  const int N = n + d;
  if (static_cast<int>(cycle_vars.size()) != d)
    throw std::invalid_argument("amplitude: cycle variable count");
  std::vector<bool> is_cycle(N, false);
  for (int v : cycle_vars) {
    if (v < 0 || v >= N || is_cycle[v])
      throw std::invalid_argument("amplitude: bad cycle variable");
    is_cycle[v] = true;
  }
  const QPoly& S = eng.curve().S;

  struct Item {
    APoly num;
    int e;
  };
  std::vector<Item> items;
  int e_max = 0;
  for (const Monomial& m : eng.omega(h, N)) {
    bool dead = false;
    for (int v = 0; v < N; ++v)
      if (is_cycle[v] && m.slots[v].p != 0) dead = true;
    if (dead) continue;
    const TowerPtr tower = eng.factory().tower(m.centers);
    APoly num(m.coef);
    int e = 0;
    for (int v = 0; v < N; ++v) {
      if (is_cycle[v]) continue;
      const Alg c = tower->gen(m.slots[v].center);
      PathValue pv = path_value(S, c, m.slots[v].p);
      num = num * pv.num * exact_div(lift_poly(S), pv.q).pow(pv.m);
      e += pv.m;
    }
    e_max = std::max(e_max, e);
    items.push_back({std::move(num), e});
  }

  WAmplitude out;
  out.grade = -d;
  QPoly traced;
  const APoly sl = lift_poly(S);
  for (const Item& it : items)
    traced += trace_poly(it.num * sl.pow(e_max - it.e));
  traced = traced * (factorial(n) * factorial(d)).inverse();
  if (traced.is_zero()) return out;

  // Fold X <-> 1/X symmetry into w. The path values decay like X^{-2}, so
  // the traced numerator is reflection invariant at the degree matching the
  // surviving sigma power; anything else is a bug upstream.
  const int parity = n % 2;
  const int e = e_max - n / 2;
  const int kappa = 2 * e - parity;
  if (traced.degree() > 2 * kappa || !(traced == traced.reciprocal(2 * kappa)))
    throw std::logic_error("amplitude: numerator not reflection invariant");
  QPoly folded(traced[kappa]);
  QPoly t_prev(Rational(1));
  QPoly t_cur = QPoly::x();
  const QPoly two_w = QPoly::monomial(1, Rational(2));
  for (int j = 1; j <= kappa; ++j) {
    folded += t_cur * (traced[kappa + j] * Rational(2));
    QPoly t_next = two_w * t_cur - t_prev;
    t_prev = t_cur;
    t_cur = t_next;
  }
  int r = 2 * e - parity;
  while (r >= 2) {
    QPoly quot, rem;
    QPoly::divmod(folded, eng.curve().sigma, &quot, &rem);
    if (!rem.is_zero()) break;
    folded = quot;
    r -= 2;
  }
  out.r = r;
  out.poly = folded;
  return out;
}

}  // namespace spectral
