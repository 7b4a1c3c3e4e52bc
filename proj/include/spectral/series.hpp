// Truncated Laurent series in the local parameter s.
//
// A series knows its lowest tracked exponent, its coefficients, and the
// highest exponent it is valid through (the truncation order). Asking for a
// coefficient beyond the truncation throws: silent truncation bugs are how
// residue calculations go quietly wrong. Coefficients may be any exact ring
// type supporting +, -, *, is_zero (Rational, Alg).

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "spectral/rational.hpp"

namespace spectral {

// Thrown when a computation needs series terms beyond the chosen truncation;
// callers retry once with a doubled order before giving up.
struct TruncationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class T>
class LSeries {
 public:
  // Zero series known through s^hi.
  explicit LSeries(int hi) : lo_(hi + 1), hi_(hi) {}
  LSeries(int lo, std::vector<T> coeffs)
      : lo_(lo), hi_(lo + static_cast<int>(coeffs.size()) - 1),
        c_(std::move(coeffs)) {
    normalize_();
  }
  LSeries(int lo, std::vector<T> coeffs, int hi)
      : lo_(lo), hi_(hi), c_(std::move(coeffs)) {
    if (hi_ < lo_ + static_cast<int>(c_.size()) - 1)
      c_.resize(hi_ - lo_ + 1);
    normalize_();
  }

  int order() const {  // exponent of the first nonzero coefficient
    if (c_.empty())
      throw std::domain_error("LSeries: zero series has no order");
    return lo_;
  }
  bool is_zero() const { return c_.empty(); }
  int truncation() const { return hi_; }

  const T coef(int k) const {
    if (k > hi_)
      throw TruncationError("LSeries: coefficient s^" + std::to_string(k) +
                            " beyond truncation s^" + std::to_string(hi_));
    if (k < lo_ || k > lo_ + static_cast<int>(c_.size()) - 1) return T(0);
    return c_[k - lo_];
  }

  LSeries operator-() const {
    LSeries r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
  }

  friend LSeries operator+(const LSeries& x, const LSeries& y) {
    int hi = std::min(x.hi_, y.hi_);
    int lo = std::min(x.c_.empty() ? hi + 1 : x.lo_,
                      y.c_.empty() ? hi + 1 : y.lo_);
    if (lo > hi) return LSeries(hi);
    std::vector<T> c(hi - lo + 1, T(0));
    for (int k = lo; k <= hi; ++k) {
      if (!x.c_.empty() && k >= x.lo_ && k <= x.hi_) {
        int i = k - x.lo_;
        if (i < static_cast<int>(x.c_.size())) c[k - lo] += x.c_[i];
      }
      if (!y.c_.empty() && k >= y.lo_ && k <= y.hi_) {
        int i = k - y.lo_;
        if (i < static_cast<int>(y.c_.size())) c[k - lo] += y.c_[i];
      }
    }
    return LSeries(lo, std::move(c), hi);
  }
  friend LSeries operator-(const LSeries& x, const LSeries& y) {
    return x + (-y);
  }

  friend LSeries operator*(const LSeries& x, const LSeries& y) {
    if (x.is_zero() || y.is_zero()) {
      // Truncation of a product with zero: conservative, keep tight bound.
      int hi = x.is_zero() && y.is_zero()
                   ? std::min(x.hi_, y.hi_)
                   : (x.is_zero() ? x.hi_ + y.lo_ : y.hi_ + x.lo_);
      return LSeries(hi);
    }
    int hi = std::min(x.lo_ + y.hi_, y.lo_ + x.hi_);
    int lo = x.lo_ + y.lo_;
    std::vector<T> c(hi - lo + 1, T(0));
    for (size_t i = 0; i < x.c_.size(); ++i) {
      if (x.c_[i].is_zero()) continue;
      for (size_t j = 0; j < y.c_.size(); ++j) {
        int k = x.lo_ + static_cast<int>(i) + y.lo_ + static_cast<int>(j);
        if (k > hi) break;
        if (y.c_[j].is_zero()) continue;
        c[k - lo] += x.c_[i] * y.c_[j];
      }
    }
    return LSeries(lo, std::move(c), hi);
  }

  LSeries operator*(const T& s) const {
    LSeries r = *this;
    for (auto& v : r.c_) v = v * s;
    r.normalize_();
    return r;
  }

  LSeries shifted(int k) const {
    LSeries r = *this;
    r.lo_ += k;
    r.hi_ += k;
    return r;
  }

  LSeries truncated(int hi) const {
    if (hi > hi_)
      throw std::domain_error("LSeries: cannot extend truncation");
    LSeries r = *this;
    r.hi_ = hi;
    if (!r.c_.empty() && r.lo_ + static_cast<int>(r.c_.size()) - 1 > hi)
      r.c_.resize(std::max(hi - r.lo_ + 1, 0));
    r.normalize_();
    return r;
  }

  // Multiplicative inverse; the lowest coefficient must be invertible.
  LSeries inverse() const {
    if (is_zero()) throw std::domain_error("LSeries: inverse of zero");
    int n = hi_ - lo_;  // number of terms beyond the leading one
    T lead_inv = c_[0].inverse();
    std::vector<T> b(n + 1, T(0));
    b[0] = lead_inv;
    for (int m = 1; m <= n; ++m) {
      T acc(0);
      for (int j = 0; j < m; ++j) {
        int idx = m - j;
        if (idx < static_cast<int>(c_.size()) && !c_[idx].is_zero())
          acc += b[j] * c_[idx];
      }
      b[m] = -(acc * lead_inv);
    }
    return LSeries(-lo_, std::move(b), -lo_ + n);
  }

  // True if every tracked coefficient with exponent parity different from
  // `parity` (0 even, 1 odd) vanishes.
  bool has_parity(int parity) const {
    for (size_t i = 0; i < c_.size(); ++i) {
      int k = lo_ + static_cast<int>(i);
      if (((k % 2) + 2) % 2 != parity && !c_[i].is_zero()) return false;
    }
    return true;
  }

  // Coefficients with s -> -s.
  LSeries mirrored() const {
    LSeries r = *this;
    for (size_t i = 0; i < r.c_.size(); ++i) {
      int k = r.lo_ + static_cast<int>(i);
      if (((k % 2) + 2) % 2 == 1) r.c_[i] = -r.c_[i];
    }
    return r;
  }

  std::string to_string() const {
    if (is_zero()) return "O(s^" + std::to_string(hi_ + 1) + ")";
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += "(" + c_[i].to_string() + ")*s^" +
             std::to_string(lo_ + static_cast<int>(i));
    }
    out += " + O(s^" + std::to_string(hi_ + 1) + ")";
    return out;
  }

 private:
  void normalize_() {
    size_t lead = 0;
    while (lead < c_.size() && c_[lead].is_zero()) ++lead;
    if (lead > 0) {
      c_.erase(c_.begin(), c_.begin() + lead);
      lo_ += static_cast<int>(lead);
    }
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    if (c_.empty()) lo_ = hi_ + 1;
  }
  int lo_;
  int hi_;
  std::vector<T> c_;
};

// Termwise d/ds; the result is valid through one order less than the input.
template <class T>
LSeries<T> series_derivative(const LSeries<T>& f) {
  if (f.is_zero()) return LSeries<T>(f.truncation() - 1);
  std::vector<T> c;
  for (int k = f.order(); k <= f.truncation(); ++k)
    c.push_back(f.coef(k) * Rational(k));
  return LSeries<T>(f.order() - 1, std::move(c), f.truncation() - 1);
}

// f(c s) for a nonzero rational c.
template <class T>
LSeries<T> argument_scaled(const LSeries<T>& f, const Rational& c) {
  if (f.is_zero()) return f;
  std::vector<T> out;
  for (int k = f.order(); k <= f.truncation(); ++k)
    out.push_back(f.coef(k) * c.pow(k));
  return LSeries<T>(f.order(), std::move(out), f.truncation());
}

}  // namespace spectral
