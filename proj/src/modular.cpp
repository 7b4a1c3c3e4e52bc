// Elliptic invariants, theta quartic values, and the Serre tensor table.

#include "spectral/modular.hpp"

#include <algorithm>

namespace spectral {

namespace {

Rational half() { return Rational(1, 2); }

QuadValue qpow(const QuadValue& x, int e) {
  QuadValue r{Rational(1)};
  for (int i = 0; i < e; ++i) r = r * x;
  return r;
}

}  // namespace

EllipticInvariants elliptic_invariants(const QPoly& S) {
  if (S.degree() != 4 || S.leading() != Rational(1))
    throw std::invalid_argument(
        "elliptic_invariants: S must be a monic quartic");
  if (!is_squarefree(S))
    throw ClassViolation("elliptic_invariants: S is not squarefree");
  const Rational a = S[4], b = S[3], c = S[2], d = S[1], e = S[0];
  // Classical invariants of the binary quartic.
  const Rational I = 12 * (a * e) - 3 * (b * d) + c * c;
  const Rational J = 72 * (a * c * e) + 9 * (b * c * d) - 27 * (a * d * d) -
                     27 * (e * b * b) - 2 * (c * c * c);
  EllipticInvariants inv;
  inv.wg2 = I / Rational(12);
  inv.wg3 = J / Rational(432);
  inv.g2 = -inv.wg2;
  inv.g3 = -inv.wg3;
  inv.delta = inv.wg2.pow(3) - 27 * (inv.wg3 * inv.wg3);
  if (inv.delta.is_zero())
    throw std::logic_error(
        "elliptic_invariants: vanishing discriminant for squarefree S");
  return inv;
}

EllipticInvariants invariants_from_reported(const Rational& g2,
                                            const Rational& g3) {
  EllipticInvariants inv;
  inv.g2 = g2;
  inv.g3 = g3;
  inv.wg2 = -g2;
  inv.wg3 = -g3;
  inv.delta = inv.wg2.pow(3) - 27 * (inv.wg3 * inv.wg3);
  if (inv.delta.is_zero())
    throw ClassViolation("invariants_from_reported: singular curve");
  return inv;
}

ThetaQuartics theta_quartics(const EllipticInvariants& inv) {
  // Roots e1, e2, e3 of 4x^3 - wg2 x - wg3; we need one rational root.
  const QPoly cubic({-inv.wg3 / Rational(4), -inv.wg2 / Rational(4),
                     Rational(0), Rational(1)});
  std::vector<Rational> roots = rational_roots(cubic);
  if (roots.empty())
    throw ClassViolation(
        "theta_quartics: the 2-torsion of the curve is irrational, theta "
        "values live beyond a quadratic extension (see theta_isquare_cubic)");
  std::sort(roots.begin(), roots.end());
  const Rational e3 = roots.front();

  // e1 + e2 = -e3 and (e1 - e2)^2 = wg2 - 3 e3^2.
  const Rational t4sq = inv.wg2 - 3 * (e3 * e3);
  if (t4sq.is_zero())
    throw std::logic_error("theta_quartics: repeated half-period");
  // t4^2 = n/m reduces to the integer radicand n m over m^2.
  const Rational m = Rational::from_string(t4sq.den_string());
  Rational d, s;
  Rational::squarefree_split(t4sq * m * m, &d, &s);
  const Rational r = s / m;

  ThetaQuartics tq;
  if (d == Rational(1)) {
    tq.t4 = QuadValue(r);
    tq.disc = 0;
  } else {
    tq.t4 = QuadValue(Rational(0), r, d.to_long());
    tq.disc = d.to_long();
  }
  // t2 = e2 - e3 with e2 = (-e3 - t4)/2, and t3 = e1 - e3 = t2 + t4.
  tq.t2 = (QuadValue(-3 * e3) - tq.t4) * half();
  tq.t3 = tq.t2 + tq.t4;
  tq.i0 = 4;

  if (!theta_relations_hold(tq.t2, tq.t4, inv))
    throw std::logic_error("theta_quartics: Eisenstein relations failed");
  return tq;
}

QPoly theta_isquare_cubic(const EllipticInvariants& inv) {
  // Squared-difference resolvent of x^3 + p x + q.
  const Rational p = -inv.wg2 / Rational(4);
  const Rational q = -inv.wg3 / Rational(4);
  return QPoly({4 * p.pow(3) + 27 * (q * q), 9 * (p * p), 6 * p,
                Rational(1)});
}

CardanoRealRoot cardano_real_root(const QPoly& cubic) {
  if (cubic.degree() != 3 || cubic[3] != Rational(1))
    throw std::invalid_argument("cardano_real_root: monic cubic required");
  const Rational c2 = cubic[2], c1 = cubic[1], c0 = cubic[0];
  // Depress with z = y - c2/3: y^3 + P y + Q.
  const Rational P = c1 - c2 * c2 / Rational(3);
  const Rational Q = c0 + c2 * (Rational(2) * c2 * c2 - Rational(9) * c1) /
                              Rational(27);
  const Rational half_q = Q / Rational(2);
  const Rational dc = half_q * half_q + (P / Rational(3)).pow(3);
  if (dc.sign() <= 0)
    throw ClassViolation(
        "cardano_real_root: three real roots, the radicals leave the real "
        "quadratic field");
  const Rational den = Rational::from_string(dc.den_string());
  Rational d, s;
  Rational::squarefree_split(dc * den * den, &d, &s);
  const Rational r = s / den;

  CardanoRealRoot out;
  out.shift = -c2 / Rational(3);
  if (d == Rational(1)) {
    out.ucube = QuadValue(-half_q + r);
    out.disc = 0;
  } else {
    out.ucube = QuadValue(-half_q, r, d.to_long());
    out.disc = d.to_long();
  }
  out.prod = -P / Rational(3);
  return out;
}

bool theta_relations_hold(const QuadValue& t2, const QuadValue& t4,
                          const EllipticInvariants& inv) {
  const QuadValue e4 = t2 * t2 + t2 * t4 + t4 * t4;
  if (e4 != QuadValue(Rational(3, 4) * inv.wg2)) return false;
  const QuadValue two(Rational(2));
  const QuadValue e6 =
      ((t2 - t4) * (t2 + two * t4) * (two * t2 + t4)) * Rational(-1, 2);
  return e6 == QuadValue(Rational(27, 8) * inv.wg3);
}

void discriminant_check(const ThetaQuartics& tq,
                        const EllipticInvariants& inv) {
  const QuadValue prod = tq.t2 * tq.t3 * tq.t4;
  if (prod * prod != QuadValue(inv.delta / Rational(16)))
    throw VerificationMismatch(
        "discriminant_check: (t2 t3 t4)^2 != delta/16");
}

namespace {

int imaginary_slot(const QuadValue& t2, const QuadValue& t3,
                   const QuadValue& t4) {
  const QuadValue* vals[3] = {&t2, &t3, &t4};
  int found = 0, where = 4;
  for (int i = 0; i < 3; ++i) {
    const QuadValue& v = *vals[i];
    if (v.discriminant() < 0 && v.rational_coord().is_zero() &&
        !v.radical_coord().is_zero()) {
      ++found;
      where = i + 2;
    }
  }
  return found == 1 ? where : 4;
}

ThetaQuartics assemble(const QuadValue& t2, const QuadValue& t3,
                       const QuadValue& t4, long disc) {
  return ThetaQuartics{t2, t3, t4, imaginary_slot(t2, t3, t4), disc};
}

}  // namespace

std::array<ThetaQuartics, 6> theta_orbit(const ThetaQuartics& tq) {
  const QuadValue &a = tq.t2, &b = tq.t3, &c = tq.t4;
  return {assemble(a, b, c, tq.disc),      assemble(-c, -b, -a, tq.disc),
          assemble(-a, c, b, tq.disc),     assemble(-b, -c, a, tq.disc),
          assemble(c, -a, -b, tq.disc),    assemble(b, a, -c, tq.disc)};
}

bool same_theta_orbit(const ThetaQuartics& x, const ThetaQuartics& y) {
  for (const ThetaQuartics& o : theta_orbit(x))
    if (o.t2 == y.t2 && o.t3 == y.t3 && o.t4 == y.t4) return true;
  return false;
}

ThetaRingPoly::ThetaRingPoly(const Rational& constant) {
  add_term_({0, 0, 0}, constant);
}

ThetaRingPoly ThetaRingPoly::gen_t2() {
  ThetaRingPoly p;
  p.add_term_({1, 0, 0}, Rational(1));
  return p;
}
ThetaRingPoly ThetaRingPoly::gen_t4() {
  ThetaRingPoly p;
  p.add_term_({0, 1, 0}, Rational(1));
  return p;
}
ThetaRingPoly ThetaRingPoly::gen_e2() {
  ThetaRingPoly p;
  p.add_term_({0, 0, 1}, Rational(1));
  return p;
}

void ThetaRingPoly::add_term_(const Mono& m, const Rational& q) {
  if (q.is_zero()) return;
  auto it = c_.find(m);
  if (it == c_.end()) {
    c_.emplace(m, q);
  } else {
    it->second += q;
    if (it->second.is_zero()) c_.erase(it);
  }
}

ThetaRingPoly ThetaRingPoly::operator-() const {
  ThetaRingPoly r;
  for (const auto& [m, q] : c_) r.c_.emplace(m, -q);
  return r;
}

ThetaRingPoly operator+(const ThetaRingPoly& x, const ThetaRingPoly& y) {
  ThetaRingPoly r = x;
  for (const auto& [m, q] : y.c_) r.add_term_(m, q);
  return r;
}

ThetaRingPoly operator-(const ThetaRingPoly& x, const ThetaRingPoly& y) {
  return x + (-y);
}

ThetaRingPoly operator*(const ThetaRingPoly& x, const ThetaRingPoly& y) {
  ThetaRingPoly r;
  for (const auto& [mx, qx] : x.c_)
    for (const auto& [my, qy] : y.c_)
      r.add_term_({mx[0] + my[0], mx[1] + my[1], mx[2] + my[2]}, qx * qy);
  return r;
}

ThetaRingPoly ThetaRingPoly::operator*(const Rational& s) const {
  ThetaRingPoly r;
  if (s.is_zero()) return r;
  for (const auto& [m, q] : c_) r.c_.emplace(m, q * s);
  return r;
}

ThetaRingPoly ThetaRingPoly::derived() const {
  // Images of the generators under D.
  const ThetaRingPoly t2 = gen_t2(), t4 = gen_t4(), e2 = gen_e2();
  const ThetaRingPoly dt2 = (t2 * (-t2 - t4 * Rational(2) - e2)) * Rational(4, 3);
  const ThetaRingPoly dt4 = (t4 * (t2 * Rational(2) + t4 - e2)) * Rational(4, 3);
  const ThetaRingPoly de2 =
      (t2 * t2 + t4 * t4 + t2 * t4 - e2 * e2) * Rational(2, 3);
  const ThetaRingPoly* dgen[3] = {&dt2, &dt4, &de2};

  ThetaRingPoly r;
  for (const auto& [m, q] : c_) {
    for (int slot = 0; slot < 3; ++slot) {
      if (m[slot] == 0) continue;
      Mono lowered = m;
      --lowered[slot];
      ThetaRingPoly base;
      base.add_term_(lowered, q * Rational(m[slot]));
      r = r + base * (*dgen[slot]);
    }
  }
  return r;
}

ThetaRingPoly ThetaRingPoly::at_e2_zero() const {
  ThetaRingPoly r;
  for (const auto& [m, q] : c_)
    if (m[2] == 0) r.c_.emplace(m, q);
  return r;
}

ThetaRingPoly ThetaRingPoly::substituted(const ThetaRingPoly& im_t2,
                                         const ThetaRingPoly& im_t4,
                                         const ThetaRingPoly& im_e2) const {
  ThetaRingPoly r;
  for (const auto& [m, q] : c_) {
    ThetaRingPoly term{q};
    for (int i = 0; i < m[0]; ++i) term = term * im_t2;
    for (int i = 0; i < m[1]; ++i) term = term * im_t4;
    for (int i = 0; i < m[2]; ++i) term = term * im_e2;
    r = r + term;
  }
  return r;
}

QuadValue ThetaRingPoly::eval(const QuadValue& t2, const QuadValue& t4) const {
  QuadValue total{Rational(0)};
  for (const auto& [m, q] : c_) {
    if (m[2] != 0) continue;
    total = total + qpow(t2, m[0]) * qpow(t4, m[1]) * q;
  }
  return total;
}

bool ThetaRingPoly::has_integer_coefficients() const {
  for (const auto& [m, q] : c_)
    if (q.den_string() != "1") return false;
  return true;
}

ThetaRingPoly theta_log_derivative(int i, int d) {
  if (i < 2 || i > 4)
    throw std::invalid_argument("theta_log_derivative: i must be 2, 3 or 4");
  if (d < 0) throw std::invalid_argument("theta_log_derivative: d >= 0");
  const ThetaRingPoly t2 = ThetaRingPoly::gen_t2();
  const ThetaRingPoly t4 = ThetaRingPoly::gen_t4();
  const ThetaRingPoly e2 = ThetaRingPoly::gen_e2();
  ThetaRingPoly q_i;  // 3 * D theta_i / theta_i
  if (i == 2) q_i = -t2 - t4 * Rational(2) - e2;
  if (i == 3) q_i = t4 - t2 - e2;
  if (i == 4) q_i = t2 * Rational(2) + t4 - e2;
  const ThetaRingPoly r1 = q_i * Rational(1, 3);

  if (d == 0) return ThetaRingPoly{Rational(1)};
  ThetaRingPoly rd = r1;
  for (int k = 1; k < d; ++k) rd = rd.derived() + rd * r1;
  return rd;
}

SerreTable serre_table(const ThetaQuartics& tq, int d_max) {
  if (d_max < 1)
    throw std::invalid_argument("serre_table: d_max must be >= 1");
  SerreTable table;
  table.i0 = tq.i0;
  table.d_max = d_max;
  for (int i = 2; i <= 4; ++i) {
    auto& col = table.columns[i - 2];
    col.reserve(d_max + 1);
    for (int d = 0; d <= d_max; ++d)
      col.push_back(
          theta_log_derivative(i, d).at_e2_zero().eval(tq.t2, tq.t4));
  }
  for (int d = 0; d <= d_max; ++d)
    table.t_i0.push_back(table.columns[tq.i0 - 2][d].rational_value());
  return table;
}

}  // namespace spectral
