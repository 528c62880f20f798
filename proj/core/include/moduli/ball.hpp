// Copyright 2026 The moduli-sep Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Midpoint-radius ("ball") arithmetic over MPFR.
//
// A CertifiedReal is a pair (mid, rad): an MPFR midpoint at some working
// precision and a Mag radius. The exact quantity it stands for lies in
// [mid - rad, mid + rad]. Every operation folds the propagated input radii
// and the rounding error of the midpoint computation into the output radius,
// so enclosures stay valid through any chain of operations.
//
// CertifiedComplex is rectangular: independent real and imaginary balls.
// radius() reports a disk radius that encloses the rectangle.

#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <algorithm>
#include <compare>
#include <string>
#include <string_view>

namespace moduli {

// n / d in lowest terms.
inline mpq_class make_q(const mpz_class& n, const mpz_class& d) {
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

// Nonnegative bound m * 2^e with m in [0.5, 1), or zero, or +infinity.
// operator+ and operator* round up; the *_down helpers produce lower bounds.
class Mag {
 public:
  constexpr Mag() = default;

  static Mag infinity();
  static Mag pow2(long e);
  static Mag from_double(double x);       // >= |x|
  static Mag from_double_down(double x);  // <= |x|
  static Mag upper_abs(mpfr_srcptr x);
  static Mag lower_abs(mpfr_srcptr x);
  // >= 2^l (l given in double; the caller supplies any slack it needs).
  static Mag exp2_up(double l);

  bool is_zero() const { return m_ == 0.0; }
  bool is_inf() const;
  double mantissa() const { return m_; }
  long exponent() const { return e_; }

  // log2 of the value (approximate; -inf for zero).
  double log2() const;
  double to_double() const;  // upward, may be +inf
  // Writes the exact value into out (out must have at least 53 bits).
  void to_mpfr(mpfr_ptr out) const;

  Mag mul_2exp(long k) const;

  friend Mag operator+(const Mag& a, const Mag& b);
  friend Mag operator*(const Mag& a, const Mag& b);
  Mag& operator+=(const Mag& o) { return *this = *this + o; }
  Mag& operator*=(const Mag& o) { return *this = *this * o; }

  static Mag add_down(const Mag& a, const Mag& b);
  static Mag mul_down(const Mag& a, const Mag& b);
  // max(a - b, 0), rounded down.
  static Mag sub_down(const Mag& a, const Mag& b);
  // a / b rounded up, where b is a lower bound of the divisor.
  static Mag div_up(const Mag& a, const Mag& b);
  // a / b rounded down, where b is an upper bound of the divisor.
  static Mag div_down(const Mag& a, const Mag& b);

  friend std::strong_ordering operator<=>(const Mag& a, const Mag& b);
  friend bool operator==(const Mag& a, const Mag& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }
  friend Mag max(const Mag& a, const Mag& b) { return a < b ? b : a; }

 private:
  static Mag normalized(double m, long e);
  double m_ = 0.0;
  long e_ = 0;
};

class CertifiedReal {
 public:
  explicit CertifiedReal(long prec = 64);
  CertifiedReal(const CertifiedReal& o);
  CertifiedReal(CertifiedReal&& o) noexcept;
  CertifiedReal& operator=(const CertifiedReal& o);
  CertifiedReal& operator=(CertifiedReal&& o) noexcept;
  ~CertifiedReal();

  static CertifiedReal exact(long v, long prec);
  static CertifiedReal exact(const mpz_class& v, long prec);
  static CertifiedReal exact(const mpq_class& v, long prec);
  static CertifiedReal from_double(double v, long prec);
  // Decimal literal such as "1.018" or "-3/7"; parsed exactly as a rational.
  static CertifiedReal from_decimal(std::string_view text, long prec);
  static CertifiedReal pi(long prec);
  // Encloses [lo, hi]; both endpoints must already be rigorous bounds.
  static CertifiedReal hull(mpfr_srcptr lo, mpfr_srcptr hi, long prec);
  // Encloses the union of two balls.
  static CertifiedReal hull(const CertifiedReal& a, const CertifiedReal& b);

  mpfr_srcptr mid() const { return mid_; }
  const Mag& rad() const { return rad_; }
  long prec() const { return mpfr_get_prec(mid_); }

  void add_error(const Mag& e) { rad_ += e; }
  // Copy rounded to a new working precision (rounding folded into rad).
  CertifiedReal with_prec(long prec) const;

  void lower(mpfr_ptr out) const;  // rounded down at out's precision
  void upper(mpfr_ptr out) const;  // rounded up at out's precision
  double lower_double() const;
  double upper_double() const;
  double to_double() const;

  Mag abs_upper() const;
  Mag abs_lower() const;

  bool is_finite() const;
  bool contains_zero() const;
  bool certainly_positive() const;
  bool certainly_negative() const;
  bool contains(const mpz_class& v) const;
  bool contains(const mpq_class& v) const;
  bool overlaps(const CertifiedReal& o) const;

  // Unique integer in the enclosure, when the enclosure is narrower than 1/2
  // and contains exactly one integer.
  bool unique_integer(mpz_class& out) const;

  std::string mid_string(int digits = 20) const;
  std::string rad_string() const;
  std::string to_string(int digits = 20) const;

  CertifiedReal operator-() const;
  CertifiedReal& operator+=(const CertifiedReal& o);
  CertifiedReal& operator-=(const CertifiedReal& o);
  CertifiedReal& operator*=(const CertifiedReal& o);

  friend CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b);
  friend CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b);
  friend CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b);
  friend CertifiedReal operator/(const CertifiedReal& a, const CertifiedReal& b);
  friend CertifiedReal operator+(const CertifiedReal& a, const mpz_class& b);
  friend CertifiedReal operator*(const CertifiedReal& a, const mpz_class& b);
  friend CertifiedReal operator*(const CertifiedReal& a, long b);
  friend CertifiedReal operator/(const CertifiedReal& a, long b);

  friend CertifiedReal sqr(const CertifiedReal& x);
  friend CertifiedReal mul_2si(const CertifiedReal& x, long k);
  friend CertifiedReal abs(const CertifiedReal& x);
  friend CertifiedReal sqrt(const CertifiedReal& x);
  friend CertifiedReal cbrt(const CertifiedReal& x);
  friend CertifiedReal exp(const CertifiedReal& x);
  friend CertifiedReal log(const CertifiedReal& x);
  friend CertifiedReal sin(const CertifiedReal& x);
  friend CertifiedReal cos(const CertifiedReal& x);
  // Gamma on (0, 1.46), where it is decreasing.
  friend CertifiedReal gamma_small(const CertifiedReal& x);
  friend CertifiedReal pow(const CertifiedReal& x, unsigned n);
  friend CertifiedReal min(const CertifiedReal& a, const CertifiedReal& b);
  friend CertifiedReal max(const CertifiedReal& a, const CertifiedReal& b);

  // Interval-safe comparisons: true only when the whole enclosures agree.
  friend bool certainly_less(const CertifiedReal& a, const CertifiedReal& b);
  friend bool certainly_less_equal(const CertifiedReal& a,
                                   const CertifiedReal& b);

 private:
  template <class F>
  friend CertifiedReal apply_increasing(const CertifiedReal& x, F f);
  template <class F>
  friend CertifiedReal apply_decreasing(const CertifiedReal& x, F f);

  mpfr_t mid_;
  Mag rad_;
};

class CertifiedComplex {
 public:
  explicit CertifiedComplex(long prec = 64) : re_(prec), im_(prec) {}
  CertifiedComplex(CertifiedReal re, CertifiedReal im)
      : re_(std::move(re)), im_(std::move(im)) {}

  static CertifiedComplex exact(const mpq_class& re, const mpq_class& im,
                                long prec);

  const CertifiedReal& real() const { return re_; }
  const CertifiedReal& imag() const { return im_; }
  CertifiedReal& real() { return re_; }
  CertifiedReal& imag() { return im_; }
  long prec() const { return std::max(re_.prec(), im_.prec()); }

  // Disk radius enclosing the rectangular enclosure.
  Mag radius() const;
  void add_error(const Mag& e) {
    re_.add_error(e);
    im_.add_error(e);
  }

  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }
  bool contains_zero() const {
    return re_.contains_zero() && im_.contains_zero();
  }
  bool overlaps(const CertifiedComplex& o) const {
    return re_.overlaps(o.re_) && im_.overlaps(o.im_);
  }
  // Certified real: the imaginary enclosure contains zero.
  bool maybe_real() const { return im_.contains_zero(); }

  std::string to_string(int digits = 20) const;

  CertifiedComplex operator-() const { return {-re_, -im_}; }
  CertifiedComplex conj() const { return {re_, -im_}; }
  CertifiedComplex mul_i() const { return {-im_, re_}; }

  friend CertifiedComplex operator+(const CertifiedComplex& a,
                                    const CertifiedComplex& b);
  friend CertifiedComplex operator-(const CertifiedComplex& a,
                                    const CertifiedComplex& b);
  friend CertifiedComplex operator*(const CertifiedComplex& a,
                                    const CertifiedComplex& b);
  friend CertifiedComplex operator/(const CertifiedComplex& a,
                                    const CertifiedComplex& b);
  friend CertifiedComplex operator*(const CertifiedComplex& a,
                                    const CertifiedReal& b);
  friend CertifiedComplex operator+(const CertifiedComplex& a,
                                    const mpz_class& b);
  friend CertifiedComplex operator-(const CertifiedComplex& a, long b);
  friend CertifiedComplex operator*(const CertifiedComplex& a, long b);

  friend CertifiedComplex sqr(const CertifiedComplex& z) { return z * z; }
  friend CertifiedComplex inv(const CertifiedComplex& z);
  friend CertifiedComplex exp(const CertifiedComplex& z);
  friend CertifiedComplex pow(const CertifiedComplex& z, unsigned n);
  friend CertifiedReal abs(const CertifiedComplex& z);

  // a*b + c with the midpoint product computed by a single fused rounding.
  friend void mul_add_into(CertifiedComplex& acc, const CertifiedComplex& q,
                           const mpz_class& c);

 private:
  CertifiedReal re_;
  CertifiedReal im_;
};

}  // namespace moduli
