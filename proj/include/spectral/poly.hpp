// Dense univariate polynomials over an exact field.
//
// Coefficients are stored in ascending degree with trailing zeros stripped,
// so degree() is O(1) and the zero polynomial has degree -1. Field-only
// operations (divmod, gcd) require K to support exact division.

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "spectral/rational.hpp"

namespace spectral {

template <class K>
class Poly {
 public:
  Poly() = default;
  explicit Poly(const K& constant) : c_{constant} { normalize_(); }
  explicit Poly(std::vector<K> ascending) : c_(std::move(ascending)) {
    normalize_();
  }

  static Poly x() { return monomial(1, K(1)); }
  static Poly monomial(int k, const K& coef) {
    if (k < 0) throw std::invalid_argument("Poly: negative monomial degree");
    std::vector<K> c(k + 1, K(0));
    c[k] = coef;
    return Poly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const K& operator[](int i) const {
    static const K kZero = K(0);
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[i];
  }
  const K& leading() const {
    if (is_zero()) throw std::domain_error("Poly: zero has no leading coef");
    return c_.back();
  }
  const std::vector<K>& coefficients() const { return c_; }

  void set_coef(int i, const K& v) {
    if (i < 0) throw std::invalid_argument("Poly: negative index");
    if (i >= static_cast<int>(c_.size())) c_.resize(i + 1, K(0));
    c_[i] = v;
    normalize_();
  }

  Poly operator-() const {
    Poly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    normalize_();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), K(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    normalize_();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<K> c(a.c_.size() + b.c_.size() - 1, K(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly operator*(const K& s) const {
    Poly r = *this;
    for (auto& v : r.c_) v = v * s;
    r.normalize_();
    return r;
  }
  Poly operator/(const K& s) const {
    Poly r = *this;
    for (auto& v : r.c_) v = v / s;
    return r;
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<K> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * K(long(i));
    return Poly(std::move(d));
  }

  K eval(const K& x) const {
    K acc(0);
    for (int i = degree(); i >= 0; --i) acc = acc * x + c_[i];
    return acc;
  }

  // Horner evaluation into any ring T that supports T*T, T+T, and
  // multiplication by K via make(coef).
  template <class T, class Lift>
  T eval_in(const T& x, Lift make) const {
    T acc = make(K(0));
    for (int i = degree(); i >= 0; --i) acc = acc * x + make(c_[i]);
    return acc;
  }

  Poly compose(const Poly& inner) const {
    Poly acc;
    for (int i = degree(); i >= 0; --i) {
      acc = acc * inner;
      acc += Poly(c_[i]);
    }
    return acc;
  }

  // X^n P(1/X) for n >= degree; used for palindromy checks.
  Poly reciprocal(int n) const {
    if (n < degree()) throw std::invalid_argument("Poly: reciprocal order");
    std::vector<K> c(n + 1, K(0));
    for (int i = 0; i <= degree(); ++i) c[n - i] = c_[i];
    return Poly(std::move(c));
  }

  Poly pow(int e) const {
    if (e < 0) throw std::invalid_argument("Poly: negative power");
    Poly r{K(1)};
    Poly base = *this;
    while (e > 0) {
      if (e & 1) r *= base;
      base *= base;
      e >>= 1;
    }
    return r;
  }

  Poly monic() const {
    if (is_zero()) throw std::domain_error("Poly: monic of zero");
    return *this / leading();
  }

  // Euclidean division; requires invertible leading coefficient.
  static void divmod(const Poly& a, const Poly& b, Poly* quot, Poly* rem) {
    if (b.is_zero()) throw std::domain_error("Poly: division by zero");
    Poly r = a;
    std::vector<K> q(std::max<int>(a.degree() - b.degree() + 1, 0), K(0));
    K inv_lead = K(1) / b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
      int k = r.degree() - b.degree();
      K f = r.leading() * inv_lead;
      q[k] = f;
      // r -= f * x^k * b
      for (int i = 0; i <= b.degree(); ++i)
        r.c_[i + k] -= f * b.c_[i];
      r.normalize_();
    }
    if (quot) *quot = Poly(std::move(q));
    if (rem) *rem = r;
  }
  friend Poly operator/(const Poly& a, const Poly& b) {
    Poly q;
    divmod(a, b, &q, nullptr);
    return q;
  }
  friend Poly operator%(const Poly& a, const Poly& b) {
    Poly r;
    divmod(a, b, nullptr, &r);
    return r;
  }

  static Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = a % b;
      a = b;
      b = r;
    }
    if (a.is_zero()) return a;
    return a.monic();
  }

  std::string to_string(const std::string& var = "X") const;

 private:
  void normalize_() {
    while (!c_.empty() && c_.back() == K(0)) c_.pop_back();
  }
  std::vector<K> c_;
};

template <class K>
std::string Poly<K>::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    if (c_[i] == K(0)) continue;
    if (!s.empty()) s += " + ";
    s += "(" + c_[i].to_string() + ")";
    if (i >= 1) s += "*" + var;
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

using QPoly = Poly<Rational>;

// Rational-coefficient specific helpers (implemented in poly_rational.cpp).

// Yun squarefree decomposition: returns [A1, A2, ...] with
// input = lead * prod Ai^i and the Ai monic squarefree, pairwise coprime.
std::vector<QPoly> squarefree_decomposition(const QPoly& p);

bool is_squarefree(const QPoly& p);
bool is_palindromic(const QPoly& p);

// All rational roots with multiplicity.
std::vector<Rational> rational_roots(const QPoly& p);

// Monic irreducible factors over Q, with multiplicity, for degree <= 4
// inputs (after squarefree splitting any degree works as long as each
// squarefree part has degree <= 4; otherwise throws).
std::vector<QPoly> factor_rational(const QPoly& p);

}  // namespace spectral
