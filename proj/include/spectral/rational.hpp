// Exact rational arithmetic on top of GMP's mpq layer.
//
// Values are always canonical (coprime numerator and denominator, positive
// denominator), so equality is a plain comparison and string rendering is
// stable. Division by zero and non-square square roots throw.

#pragma once

#include <gmp.h>

#include <iosfwd>
#include <string>

namespace spectral {

class Rational {
 public:
  Rational() { mpq_init(v_); }
  Rational(long n) {
    mpq_init(v_);
    mpq_set_si(v_, n, 1);
  }
  Rational(long num, unsigned long den) {
    mpq_init(v_);
    mpq_set_si(v_, num, den);
    mpq_canonicalize(v_);
  }
  Rational(const Rational& o) {
    mpq_init(v_);
    mpq_set(v_, o.v_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(v_);
    mpq_swap(v_, o.v_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(v_, o.v_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    if (this != &o) mpq_swap(v_, o.v_);
    return *this;
  }
  ~Rational() { mpq_clear(v_); }

  // Parses "p", "p/q", or a decimal like "-1.25"; throws on junk.
  static Rational from_string(const std::string& s);

  bool is_zero() const { return mpq_sgn(v_) == 0; }
  bool is_one() const { return mpq_cmp_si(v_, 1, 1) == 0; }
  bool is_integer() const;
  int sign() const { return mpq_sgn(v_); }

  Rational operator-() const {
    Rational r;
    mpq_neg(r.v_, v_);
    return r;
  }
  Rational& operator+=(const Rational& o) {
    mpq_add(v_, v_, o.v_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(v_, v_, o.v_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(v_, v_, o.v_);
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_, b.v_) != 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return mpq_cmp(a.v_, b.v_) < 0;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return mpq_cmp(a.v_, b.v_) <= 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return b <= a;
  }

  Rational inverse() const;
  Rational abs() const {
    Rational r;
    mpq_abs(r.v_, v_);
    return r;
  }
  Rational pow(long e) const;

  // Exact square-root support, used for discriminant classification.
  bool is_square() const;
  Rational sqrt_exact() const;  // throws std::domain_error if not a square

  // The largest s with s^2 dividing this integer value (squarefree split);
  // requires an integer, throws otherwise. Returns (squarefree, s).
  static void squarefree_split(const Rational& n, Rational* squarefree,
                               Rational* square_root);

  std::string num_string() const;
  std::string den_string() const;
  std::string to_string() const;  // "p" or "p/q"

  double to_double() const { return mpq_get_d(v_); }
  __float128 to_quad() const;
  long to_long() const;  // throws unless an integer that fits

 private:
  mpq_t v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

inline Rational operator*(long a, const Rational& b) { return Rational(a) * b; }
inline Rational operator*(const Rational& b, long a) { return Rational(a) * b; }

}  // namespace spectral
