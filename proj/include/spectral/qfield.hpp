// Values in a quadratic field Q[sqrt(d)] with d a squarefree integer.
//
// Purely rational values carry d = 0 and combine freely with any field;
// mixing two distinct nonzero d values throws. Used for theta-point
// coordinates and their Eisenstein checks.

#pragma once

#include <stdexcept>
#include <string>

#include "spectral/rational.hpp"

namespace spectral {

class QuadValue {
 public:
  QuadValue() : a_(0), b_(0), d_(0) {}
  QuadValue(Rational a) : a_(std::move(a)), b_(0), d_(0) {}
  QuadValue(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    normalize_();
  }

  const Rational& rational_coord() const { return a_; }
  const Rational& radical_coord() const { return b_; }
  long discriminant() const { return d_; }
  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

  Rational rational_value() const {
    if (!is_rational())
      throw std::domain_error("QuadValue: not rational: " + to_string());
    return a_;
  }

  QuadValue conj() const { return QuadValue(a_, -b_, d_); }
  Rational norm() const { return a_ * a_ - b_ * b_ * Rational(d_); }

  QuadValue operator-() const { return QuadValue(-a_, -b_, d_); }
  friend QuadValue operator+(const QuadValue& x, const QuadValue& y) {
    long d = merge_(x, y);
    return QuadValue(x.a_ + y.a_, x.b_ + y.b_, d);
  }
  friend QuadValue operator-(const QuadValue& x, const QuadValue& y) {
    return x + (-y);
  }
  friend QuadValue operator*(const QuadValue& x, const QuadValue& y) {
    long d = merge_(x, y);
    return QuadValue(x.a_ * y.a_ + x.b_ * y.b_ * Rational(d),
                     x.a_ * y.b_ + x.b_ * y.a_, d);
  }
  QuadValue inverse() const {
    Rational n = norm();
    if (n.is_zero()) throw std::domain_error("QuadValue: inverse of zero");
    return QuadValue(a_ / n, -b_ / n, d_);
  }
  friend QuadValue operator/(const QuadValue& x, const QuadValue& y) {
    return x * y.inverse();
  }
  friend bool operator==(const QuadValue& x, const QuadValue& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_.is_zero() || x.d_ == y.d_);
  }
  friend bool operator!=(const QuadValue& x, const QuadValue& y) {
    return !(x == y);
  }

  QuadValue operator*(const Rational& s) const {
    return QuadValue(a_ * s, b_ * s, d_);
  }

  std::string to_string() const {
    if (is_rational()) return a_.to_string();
    return a_.to_string() + " + (" + b_.to_string() + ")*sqrt(" +
           std::to_string(d_) + ")";
  }

 private:
  void normalize_() {
    if (b_.is_zero()) d_ = 0;
  }
  static long merge_(const QuadValue& x, const QuadValue& y) {
    if (x.d_ == 0) return y.d_;
    if (y.d_ == 0 || x.d_ == y.d_) return x.d_;
    throw std::domain_error("QuadValue: mixing sqrt(" + std::to_string(x.d_) +
                            ") with sqrt(" + std::to_string(y.d_) + ")");
  }
  Rational a_, b_;
  long d_;
};

}  // namespace spectral
