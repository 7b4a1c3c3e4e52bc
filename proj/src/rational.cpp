#include "spectral/rational.hpp"

#include <quadmath.h>

#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace spectral {

Rational Rational::from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rational: empty string");
  std::string t = s;
  // Allow decimal input by scaling out the fractional digits.
  auto dot = t.find('.');
  if (dot != std::string::npos) {
    std::string digits = t.substr(0, dot) + t.substr(dot + 1);
    size_t frac = t.size() - dot - 1;
    std::string den = "1";
    den.append(frac, '0');
    t = digits + "/" + den;
  }
  Rational r;
  if (mpq_set_str(r.v_, t.c_str(), 10) != 0)
    throw std::invalid_argument("Rational: cannot parse '" + s + "'");
  if (mpz_sgn(mpq_denref(r.v_)) == 0)
    throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
  mpq_canonicalize(r.v_);
  return r;
}

bool Rational::is_integer() const {
  return mpz_cmp_ui(mpq_denref(v_), 1) == 0;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  mpq_div(v_, v_, o.v_);
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  Rational r;
  mpq_inv(r.v_, v_);
  return r;
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) throw std::domain_error("Rational: negative power of zero");
    return Rational(0);
  }
  Rational base = e < 0 ? inverse() : *this;
  unsigned long k = static_cast<unsigned long>(e < 0 ? -e : e);
  Rational r;
  mpz_pow_ui(mpq_numref(r.v_), mpq_numref(base.v_), k);
  mpz_pow_ui(mpq_denref(r.v_), mpq_denref(base.v_), k);
  // Powers of a canonical value stay canonical.
  return r;
}

bool Rational::is_square() const {
  if (sign() < 0) return false;
  return mpz_perfect_square_p(mpq_numref(v_)) &&
         mpz_perfect_square_p(mpq_denref(v_));
}

Rational Rational::sqrt_exact() const {
  if (!is_square())
    throw std::domain_error("Rational: " + to_string() + " is not a square");
  Rational r;
  mpz_sqrt(mpq_numref(r.v_), mpq_numref(v_));
  mpz_sqrt(mpq_denref(r.v_), mpq_denref(v_));
  return r;
}

void Rational::squarefree_split(const Rational& n, Rational* squarefree,
                                Rational* square_root) {
  if (!n.is_integer())
    throw std::invalid_argument("squarefree_split: integer required, got " +
                                n.to_string());
  if (n.is_zero())
    throw std::invalid_argument("squarefree_split: zero has no split");
  mpz_t m, s, q, r;
  mpz_inits(m, s, q, r, nullptr);
  mpz_abs(m, mpq_numref(n.v_));
  mpz_set_ui(s, 1);
  // Trial division is fine here: inputs are small discriminant-sized values.
  mpz_t p, p2;
  mpz_inits(p, p2, nullptr);
  mpz_set_ui(p, 2);
  while (true) {
    mpz_mul(p2, p, p);
    if (mpz_cmp(p2, m) > 0) break;
    while (mpz_divisible_p(m, p2)) {
      mpz_divexact(m, m, p2);
      mpz_mul(s, s, p);
    }
    mpz_add_ui(p, p, 1);
  }
  Rational sf, sr;
  mpz_set(mpq_numref(sf.v_), m);
  if (n.sign() < 0) mpz_neg(mpq_numref(sf.v_), mpq_numref(sf.v_));
  mpz_set(mpq_numref(sr.v_), s);
  mpz_clears(m, s, q, r, p, p2, nullptr);
  if (squarefree) *squarefree = sf;
  if (square_root) *square_root = sr;
}

std::string Rational::num_string() const {
  char* raw = mpz_get_str(nullptr, 10, mpq_numref(v_));
  std::string s(raw);
  std::free(raw);
  return s;
}

std::string Rational::den_string() const {
  char* raw = mpz_get_str(nullptr, 10, mpq_denref(v_));
  std::string s(raw);
  std::free(raw);
  return s;
}

std::string Rational::to_string() const {
  if (is_integer()) return num_string();
  return num_string() + "/" + den_string();
}

__float128 Rational::to_quad() const {
  // Convert numerator and denominator separately through decimal strings so
  // the full 113-bit quad mantissa is honored.
  std::string n = num_string(), d = den_string();
  __float128 fn = strtoflt128(n.c_str(), nullptr);
  __float128 fd = strtoflt128(d.c_str(), nullptr);
  return fn / fd;
}

long Rational::to_long() const {
  if (!is_integer())
    throw std::domain_error("Rational: " + to_string() + " is not an integer");
  if (!mpz_fits_slong_p(mpq_numref(v_)))
    throw std::domain_error("Rational: " + to_string() + " overflows long");
  return mpz_get_si(mpq_numref(v_));
}

std::ostream& operator<<(std::ostream& os, const Rational& q) {
  return os << q.to_string();
}

}  // namespace spectral
