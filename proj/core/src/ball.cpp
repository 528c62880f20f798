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

#include "moduli/ball.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "moduli/errors.hpp"

namespace moduli {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
// Exponent gaps beyond this make the smaller operand negligible against one
// ulp of the larger mantissa.
constexpr long kNegligibleGap = 1000;
constexpr long kRadPrec = 64;

double up(double x) { return std::nextafter(x, kInf); }
double down(double x) { return x <= 0.0 ? 0.0 : std::nextafter(x, 0.0); }

// Scratch MPFR value with RAII.
class Scratch {
 public:
  explicit Scratch(long prec) { mpfr_init2(v_, prec); }
  ~Scratch() { mpfr_clear(v_); }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;
  mpfr_ptr get() { return v_; }
  operator mpfr_ptr() { return v_; }

 private:
  mpfr_t v_;
};

// Rounding error of a round-to-nearest result, given its ternary flag.
Mag rounding_slack(mpfr_srcptr v, int ternary) {
  if (ternary == 0 || mpfr_zero_p(v)) return Mag{};
  if (!mpfr_number_p(v)) return Mag::infinity();
  return Mag::pow2(mpfr_get_exp(v) - static_cast<long>(mpfr_get_prec(v)));
}

}  // namespace

// ---------------------------------------------------------------------------
// Mag

Mag Mag::normalized(double m, long e) {
  Mag r;
  if (m == 0.0) return r;
  if (std::isinf(m) || std::isnan(m)) return infinity();
  int k = 0;
  r.m_ = std::frexp(m, &k);
  r.e_ = e + k;
  return r;
}

Mag Mag::infinity() {
  Mag r;
  r.m_ = kInf;
  return r;
}

bool Mag::is_inf() const { return std::isinf(m_); }

Mag Mag::pow2(long e) {
  Mag r;
  r.m_ = 0.5;
  r.e_ = e + 1;
  return r;
}

Mag Mag::from_double(double x) { return normalized(std::fabs(x), 0); }
Mag Mag::from_double_down(double x) { return normalized(std::fabs(x), 0); }

Mag Mag::upper_abs(mpfr_srcptr x) {
  if (mpfr_zero_p(x)) return Mag{};
  if (!mpfr_number_p(x)) return infinity();
  long e = 0;
  double d = std::fabs(mpfr_get_d_2exp(&e, x, MPFR_RNDA));
  return normalized(d, e);
}

Mag Mag::lower_abs(mpfr_srcptr x) {
  if (mpfr_zero_p(x)) return Mag{};
  if (!mpfr_number_p(x)) return Mag{};
  long e = 0;
  double d = std::fabs(mpfr_get_d_2exp(&e, x, MPFR_RNDZ));
  return normalized(d, e);
}

Mag Mag::exp2_up(double l) {
  if (std::isinf(l) && l < 0) return Mag{};
  if (!std::isfinite(l)) return infinity();
  double fl = std::floor(l);
  double frac = up(up(std::exp2(l - fl)));
  return normalized(frac, static_cast<long>(fl));
}

double Mag::log2() const {
  if (is_zero()) return -kInf;
  if (is_inf()) return kInf;
  return std::log2(m_) + static_cast<double>(e_);
}

double Mag::to_double() const {
  if (is_zero()) return 0.0;
  if (is_inf() || e_ > 1020) return kInf;
  if (e_ < -1070) return std::numeric_limits<double>::denorm_min();
  return up(std::ldexp(m_, static_cast<int>(e_)));
}

void Mag::to_mpfr(mpfr_ptr out) const {
  if (is_inf()) {
    mpfr_set_inf(out, 1);
    return;
  }
  mpfr_set_d(out, m_, MPFR_RNDU);
  mpfr_mul_2si(out, out, e_, MPFR_RNDU);
}

Mag Mag::mul_2exp(long k) const {
  if (is_zero() || is_inf()) return *this;
  Mag r = *this;
  r.e_ += k;
  return r;
}

Mag operator+(const Mag& a, const Mag& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_inf() || b.is_inf()) return Mag::infinity();
  const Mag& big = a.e_ >= b.e_ ? a : b;
  const Mag& small = a.e_ >= b.e_ ? b : a;
  long gap = big.e_ - small.e_;
  if (gap > kNegligibleGap) return Mag::normalized(up(big.m_), big.e_);
  double s = big.m_ + std::ldexp(small.m_, static_cast<int>(-gap));
  return Mag::normalized(up(s), big.e_);
}

Mag operator*(const Mag& a, const Mag& b) {
  if (a.is_zero() || b.is_zero()) return Mag{};
  if (a.is_inf() || b.is_inf()) return Mag::infinity();
  return Mag::normalized(up(a.m_ * b.m_), a.e_ + b.e_);
}

Mag Mag::add_down(const Mag& a, const Mag& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_inf() || b.is_inf()) return infinity();
  const Mag& big = a.e_ >= b.e_ ? a : b;
  const Mag& small = a.e_ >= b.e_ ? b : a;
  long gap = big.e_ - small.e_;
  if (gap > kNegligibleGap) return big;
  double s = big.m_ + std::ldexp(small.m_, static_cast<int>(-gap));
  return normalized(down(s), big.e_);
}

Mag Mag::mul_down(const Mag& a, const Mag& b) {
  if (a.is_zero() || b.is_zero()) return Mag{};
  if (a.is_inf() || b.is_inf()) return infinity();
  return normalized(down(a.m_ * b.m_), a.e_ + b.e_);
}

Mag Mag::sub_down(const Mag& a, const Mag& b) {
  if (b.is_zero()) return a;
  if (a.is_inf() && !b.is_inf()) return a;
  if (b.is_inf() || !(b < a)) return Mag{};
  long gap = a.e_ - b.e_;
  if (gap > kNegligibleGap) return normalized(down(a.m_), a.e_);
  double s = a.m_ - std::ldexp(b.m_, static_cast<int>(-gap));
  if (s <= 0.0) return Mag{};
  return normalized(down(s), a.e_);
}

Mag Mag::div_up(const Mag& a, const Mag& b) {
  if (a.is_zero()) return Mag{};
  if (b.is_zero() || a.is_inf()) return infinity();
  if (b.is_inf()) return Mag{};
  return normalized(up(a.m_ / b.m_), a.e_ - b.e_);
}

Mag Mag::div_down(const Mag& a, const Mag& b) {
  if (a.is_zero() || b.is_inf()) return Mag{};
  if (b.is_zero() || a.is_inf()) return infinity();
  return normalized(down(a.m_ / b.m_), a.e_ - b.e_);
}

std::strong_ordering operator<=>(const Mag& a, const Mag& b) {
  if (a.is_zero() || b.is_zero()) {
    if (a.is_zero() && b.is_zero()) return std::strong_ordering::equal;
    return a.is_zero() ? std::strong_ordering::less
                       : std::strong_ordering::greater;
  }
  if (a.is_inf() || b.is_inf()) {
    if (a.is_inf() && b.is_inf()) return std::strong_ordering::equal;
    return a.is_inf() ? std::strong_ordering::greater
                      : std::strong_ordering::less;
  }
  if (a.e_ != b.e_) return a.e_ <=> b.e_;
  if (a.m_ < b.m_) return std::strong_ordering::less;
  if (a.m_ > b.m_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// CertifiedReal

CertifiedReal::CertifiedReal(long prec) {
  mpfr_init2(mid_, prec);
  mpfr_set_zero(mid_, 1);
}

CertifiedReal::CertifiedReal(const CertifiedReal& o) : rad_(o.rad_) {
  mpfr_init2(mid_, o.prec());
  mpfr_set(mid_, o.mid_, MPFR_RNDN);
}

CertifiedReal::CertifiedReal(CertifiedReal&& o) noexcept : rad_(o.rad_) {
  mpfr_init2(mid_, MPFR_PREC_MIN);
  mpfr_swap(mid_, o.mid_);
}

CertifiedReal& CertifiedReal::operator=(const CertifiedReal& o) {
  if (this != &o) {
    mpfr_set_prec(mid_, o.prec());
    mpfr_set(mid_, o.mid_, MPFR_RNDN);
    rad_ = o.rad_;
  }
  return *this;
}

CertifiedReal& CertifiedReal::operator=(CertifiedReal&& o) noexcept {
  mpfr_swap(mid_, o.mid_);
  rad_ = o.rad_;
  return *this;
}

CertifiedReal::~CertifiedReal() { mpfr_clear(mid_); }

CertifiedReal CertifiedReal::exact(long v, long prec) {
  CertifiedReal r(prec);
  int t = mpfr_set_si(r.mid_, v, MPFR_RNDN);
  r.rad_ = rounding_slack(r.mid_, t);
  return r;
}

CertifiedReal CertifiedReal::exact(const mpz_class& v, long prec) {
  CertifiedReal r(prec);
  int t = mpfr_set_z(r.mid_, v.get_mpz_t(), MPFR_RNDN);
  r.rad_ = rounding_slack(r.mid_, t);
  return r;
}

CertifiedReal CertifiedReal::exact(const mpq_class& v, long prec) {
  CertifiedReal r(prec);
  int t = mpfr_set_q(r.mid_, v.get_mpq_t(), MPFR_RNDN);
  r.rad_ = rounding_slack(r.mid_, t);
  return r;
}

CertifiedReal CertifiedReal::from_double(double v, long prec) {
  CertifiedReal r(prec);
  int t = mpfr_set_d(r.mid_, v, MPFR_RNDN);
  r.rad_ = rounding_slack(r.mid_, t);
  return r;
}

CertifiedReal CertifiedReal::from_decimal(std::string_view text, long prec) {
  std::string s(text);
  mpq_class q;
  auto slash = s.find('/');
  auto dot = s.find('.');
  if (slash != std::string::npos) {
    q = mpq_class(s, 10);
    q.canonicalize();
  } else if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    if (digits.empty() || digits == "-" || digits == "+") {
      throw DomainError("malformed decimal: " + s);
    }
    mpz_class num(digits[0] == '+' ? digits.substr(1) : digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, s.size() - dot - 1);
    q = mpq_class(num, den);
    q.canonicalize();
  } else {
    q = mpq_class(mpz_class(s[0] == '+' ? s.substr(1) : s, 10));
  }
  return exact(q, prec);
}

CertifiedReal CertifiedReal::pi(long prec) {
  CertifiedReal r(prec);
  int t = mpfr_const_pi(r.mid_, MPFR_RNDN);
  r.rad_ = rounding_slack(r.mid_, t);
  return r;
}

CertifiedReal CertifiedReal::hull(mpfr_srcptr lo, mpfr_srcptr hi, long prec) {
  CertifiedReal r(prec);
  Scratch sum(prec + 8);
  mpfr_add(sum, lo, hi, MPFR_RNDN);
  mpfr_div_2ui(r.mid_, sum, 1, MPFR_RNDN);
  Scratch d1(kRadPrec), d2(kRadPrec);
  mpfr_sub(d1, hi, r.mid_, MPFR_RNDU);
  mpfr_sub(d2, r.mid_, lo, MPFR_RNDU);
  mpfr_max(d1, d1, d2, MPFR_RNDU);
  if (mpfr_sgn(d1.get()) < 0) mpfr_set_zero(d1, 1);
  r.rad_ = Mag::upper_abs(d1);
  return r;
}

CertifiedReal CertifiedReal::hull(const CertifiedReal& a,
                                  const CertifiedReal& b) {
  long p = std::max(a.prec(), b.prec());
  Scratch la(p), lb(p), ua(p), ub(p);
  a.lower(la);
  b.lower(lb);
  a.upper(ua);
  b.upper(ub);
  mpfr_min(la, la, lb, MPFR_RNDD);
  mpfr_max(ua, ua, ub, MPFR_RNDU);
  return hull(la, ua, p);
}

CertifiedReal CertifiedReal::with_prec(long prec) const {
  CertifiedReal r(prec);
  int t = mpfr_set(r.mid_, mid_, MPFR_RNDN);
  r.rad_ = rad_ + rounding_slack(r.mid_, t);
  return r;
}

void CertifiedReal::lower(mpfr_ptr out) const {
  Scratch r(kRadPrec);
  rad_.to_mpfr(r);
  mpfr_sub(out, mid_, r, MPFR_RNDD);
}

void CertifiedReal::upper(mpfr_ptr out) const {
  Scratch r(kRadPrec);
  rad_.to_mpfr(r);
  mpfr_add(out, mid_, r, MPFR_RNDU);
}

double CertifiedReal::lower_double() const {
  Scratch v(prec());
  lower(v);
  return mpfr_get_d(v, MPFR_RNDD);
}

double CertifiedReal::upper_double() const {
  Scratch v(prec());
  upper(v);
  return mpfr_get_d(v, MPFR_RNDU);
}

double CertifiedReal::to_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }

Mag CertifiedReal::abs_upper() const { return Mag::upper_abs(mid_) + rad_; }

Mag CertifiedReal::abs_lower() const {
  return Mag::sub_down(Mag::lower_abs(mid_), rad_);
}

bool CertifiedReal::is_finite() const {
  return mpfr_number_p(mid_) && !rad_.is_inf();
}

bool CertifiedReal::contains_zero() const {
  return !(rad_ < Mag::upper_abs(mid_)) || !is_finite();
}

bool CertifiedReal::certainly_positive() const {
  return mpfr_sgn(mid_) > 0 && !contains_zero();
}

bool CertifiedReal::certainly_negative() const {
  return mpfr_sgn(mid_) < 0 && !contains_zero();
}

bool CertifiedReal::contains(const mpz_class& v) const {
  return contains(mpq_class(v));
}

bool CertifiedReal::contains(const mpq_class& v) const {
  if (!is_finite()) return true;
  Scratch lo(prec() + 2), hi(prec() + 2);
  lower(lo);
  upper(hi);
  return mpfr_cmp_q(lo, v.get_mpq_t()) <= 0 && mpfr_cmp_q(hi, v.get_mpq_t()) >= 0;
}

bool CertifiedReal::overlaps(const CertifiedReal& o) const {
  if (!is_finite() || !o.is_finite()) return true;
  long p = std::max(prec(), o.prec()) + 2;
  Scratch la(p), ua(p), lb(p), ub(p);
  lower(la);
  upper(ua);
  o.lower(lb);
  o.upper(ub);
  return mpfr_cmp(la, ub) <= 0 && mpfr_cmp(lb, ua) <= 0;
}

bool CertifiedReal::unique_integer(mpz_class& out) const {
  if (!is_finite()) return false;
  if (!(rad_ < Mag::pow2(-2))) return false;
  Scratch lo(prec() + 2), hi(prec() + 2);
  lower(lo);
  upper(hi);
  mpz_class a, b;
  mpfr_get_z(a.get_mpz_t(), lo, MPFR_RNDU);  // ceil(lo)
  mpfr_get_z(b.get_mpz_t(), hi, MPFR_RNDD);  // floor(hi)
  if (a != b) return false;
  out = a;
  return true;
}

std::string CertifiedReal::mid_string(int digits) const {
  if (mpfr_zero_p(mid_)) return "0";
  std::string fmt = "%." + std::to_string(digits) + "Rg";
  char* buf = nullptr;
  mpfr_asprintf(&buf, fmt.c_str(), mid_);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

std::string CertifiedReal::rad_string() const {
  if (rad_.is_zero()) return "0";
  if (rad_.is_inf()) return "inf";
  Scratch r(kRadPrec);
  rad_.to_mpfr(r);
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.3RUe", r.get());
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

std::string CertifiedReal::to_string(int digits) const {
  return "[" + mid_string(digits) + " +/- " + rad_string() + "]";
}

CertifiedReal CertifiedReal::operator-() const {
  CertifiedReal r(prec());
  mpfr_neg(r.mid_, mid_, MPFR_RNDN);
  r.rad_ = rad_;
  return r;
}

CertifiedReal& CertifiedReal::operator+=(const CertifiedReal& o) {
  return *this = *this + o;
}
CertifiedReal& CertifiedReal::operator-=(const CertifiedReal& o) {
  return *this = *this - o;
}
CertifiedReal& CertifiedReal::operator*=(const CertifiedReal& o) {
  return *this = *this * o;
}

CertifiedReal operator+(const CertifiedReal& a, const CertifiedReal& b) {
  CertifiedReal r(std::max(a.prec(), b.prec()));
  int t = mpfr_add(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  r.rad_ = a.rad_ + b.rad_ + rounding_slack(r.mid_, t);
  return r;
}

CertifiedReal operator-(const CertifiedReal& a, const CertifiedReal& b) {
  CertifiedReal r(std::max(a.prec(), b.prec()));
  int t = mpfr_sub(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  r.rad_ = a.rad_ + b.rad_ + rounding_slack(r.mid_, t);
  return r;
}

CertifiedReal operator*(const CertifiedReal& a, const CertifiedReal& b) {
  CertifiedReal r(std::max(a.prec(), b.prec()));
  int t = mpfr_mul(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  r.rad_ = Mag::upper_abs(a.mid_) * b.rad_ + Mag::upper_abs(b.mid_) * a.rad_ +
           a.rad_ * b.rad_ + rounding_slack(r.mid_, t);
  return r;
}

CertifiedReal operator/(const CertifiedReal& a, const CertifiedReal& b) {
  CertifiedReal r(std::max(a.prec(), b.prec()));
  Mag b_lower = b.abs_lower();
  if (b_lower.is_zero()) {
    mpfr_set_zero(r.mid_, 1);
    r.rad_ = Mag::infinity();
    return r;
  }
  int t = mpfr_div(r.mid_, a.mid_, b.mid_, MPFR_RNDN);
  // |a/b - am/bm| <= (ra + |am/bm| rb) / (|bm| - rb)
  Mag q = Mag::upper_abs(r.mid_) + rounding_slack(r.mid_, t);
  r.rad_ = Mag::div_up(a.rad_ + q * b.rad_, b_lower) + rounding_slack(r.mid_, t);
  return r;
}

CertifiedReal operator+(const CertifiedReal& a, const mpz_class& b) {
  CertifiedReal r(a.prec());
  int t = mpfr_add_z(r.mid_, a.mid_, b.get_mpz_t(), MPFR_RNDN);
  r.rad_ = a.rad_ + rounding_slack(r.mid_, t);
  return r;
}

CertifiedReal operator*(const CertifiedReal& a, const mpz_class& b) {
  CertifiedReal r(a.prec());
  int t = mpfr_mul_z(r.mid_, a.mid_, b.get_mpz_t(), MPFR_RNDN);
  Scratch bz(std::max<long>(64, mpz_sizeinbase(b.get_mpz_t(), 2) + 2));
  mpfr_set_z(bz, b.get_mpz_t(), MPFR_RNDA);
  r.rad_ = a.rad_ * Mag::upper_abs(bz) + rounding_slack(r.mid_, t);
  return r;
}

CertifiedReal operator*(const CertifiedReal& a, long b) {
  CertifiedReal r(a.prec());
  int t = mpfr_mul_si(r.mid_, a.mid_, b, MPFR_RNDN);
  r.rad_ = a.rad_ * Mag::from_double(static_cast<double>(b)) +
           rounding_slack(r.mid_, t);
  return r;
}

CertifiedReal operator/(const CertifiedReal& a, long b) {
  if (b == 0) throw DomainError("division by zero");
  CertifiedReal r(a.prec());
  int t = mpfr_div_si(r.mid_, a.mid_, b, MPFR_RNDN);
  r.rad_ = Mag::div_up(a.rad_, Mag::from_double_down(static_cast<double>(b))) +
           rounding_slack(r.mid_, t);
  return r;
}

CertifiedReal sqr(const CertifiedReal& x) {
  CertifiedReal r(x.prec());
  int t = mpfr_sqr(r.mid_, x.mid_, MPFR_RNDN);
  r.rad_ = Mag::upper_abs(x.mid_) * x.rad_.mul_2exp(1) + x.rad_ * x.rad_ +
           rounding_slack(r.mid_, t);
  return r;
}

CertifiedReal mul_2si(const CertifiedReal& x, long k) {
  CertifiedReal r(x.prec());
  mpfr_mul_2si(r.mid_, x.mid_, k, MPFR_RNDN);
  r.rad_ = x.rad_.mul_2exp(k);
  return r;
}

template <class F>
CertifiedReal apply_increasing(const CertifiedReal& x, F f) {
  long p = x.prec();
  Scratch lo(p), hi(p), flo(p + 4), fhi(p + 4);
  x.lower(lo);
  x.upper(hi);
  f(flo.get(), lo.get(), MPFR_RNDD);
  f(fhi.get(), hi.get(), MPFR_RNDU);
  return CertifiedReal::hull(flo, fhi, p);
}

template <class F>
CertifiedReal apply_decreasing(const CertifiedReal& x, F f) {
  long p = x.prec();
  Scratch lo(p), hi(p), flo(p + 4), fhi(p + 4);
  x.lower(lo);
  x.upper(hi);
  f(fhi.get(), lo.get(), MPFR_RNDU);
  f(flo.get(), hi.get(), MPFR_RNDD);
  return CertifiedReal::hull(flo, fhi, p);
}

CertifiedReal abs(const CertifiedReal& x) {
  if (!x.contains_zero()) {
    CertifiedReal r(x);
    mpfr_abs(r.mid_, r.mid_, MPFR_RNDN);
    return r;
  }
  long p = x.prec();
  Scratch zero(p), hi(p);
  mpfr_set_zero(zero, 1);
  Scratch r(kRadPrec);
  x.rad_.to_mpfr(r);
  mpfr_abs(hi, x.mid_, MPFR_RNDU);
  mpfr_add(hi, hi, r, MPFR_RNDU);
  return CertifiedReal::hull(zero, hi, p);
}

CertifiedReal sqrt(const CertifiedReal& x) {
  if (x.certainly_negative()) throw DomainError("sqrt of a negative ball");
  if (x.contains_zero()) {
    // sqrt is only defined on the nonnegative part; clamp the lower end.
    long p = x.prec();
    Scratch zero(p), hi(p);
    mpfr_set_zero(zero, 1);
    x.upper(hi);
    mpfr_sqrt(hi, hi, MPFR_RNDU);
    return CertifiedReal::hull(zero, hi, p);
  }
  return apply_increasing(x, [](mpfr_ptr o, mpfr_srcptr i, mpfr_rnd_t rnd) {
    mpfr_sqrt(o, i, rnd);
  });
}

CertifiedReal cbrt(const CertifiedReal& x) {
  return apply_increasing(x, [](mpfr_ptr o, mpfr_srcptr i, mpfr_rnd_t rnd) {
    mpfr_cbrt(o, i, rnd);
  });
}

CertifiedReal exp(const CertifiedReal& x) {
  return apply_increasing(x, [](mpfr_ptr o, mpfr_srcptr i, mpfr_rnd_t rnd) {
    mpfr_exp(o, i, rnd);
  });
}

CertifiedReal log(const CertifiedReal& x) {
  if (!x.certainly_positive()) throw DomainError("log of a nonpositive ball");
  return apply_increasing(x, [](mpfr_ptr o, mpfr_srcptr i, mpfr_rnd_t rnd) {
    mpfr_log(o, i, rnd);
  });
}

CertifiedReal sin(const CertifiedReal& x) {
  CertifiedReal r(x.prec());
  int t = mpfr_sin(r.mid_, x.mid_, MPFR_RNDN);
  r.rad_ = x.rad_ + rounding_slack(r.mid_, t);
  return r;
}

CertifiedReal cos(const CertifiedReal& x) {
  CertifiedReal r(x.prec());
  int t = mpfr_cos(r.mid_, x.mid_, MPFR_RNDN);
  r.rad_ = x.rad_ + rounding_slack(r.mid_, t);
  return r;
}

CertifiedReal gamma_small(const CertifiedReal& x) {
  if (!x.certainly_positive() || x.upper_double() > 1.46) {
    throw DomainError("gamma_small requires 0 < x < 1.46");
  }
  return apply_decreasing(x, [](mpfr_ptr o, mpfr_srcptr i, mpfr_rnd_t rnd) {
    mpfr_gamma(o, i, rnd);
  });
}

CertifiedReal pow(const CertifiedReal& x, unsigned n) {
  CertifiedReal result = CertifiedReal::exact(1L, x.prec());
  CertifiedReal base = x;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = sqr(base);
  }
  return result;
}

CertifiedReal min(const CertifiedReal& a, const CertifiedReal& b) {
  long p = std::max(a.prec(), b.prec());
  Scratch la(p), lb(p), ua(p), ub(p);
  a.lower(la);
  b.lower(lb);
  a.upper(ua);
  b.upper(ub);
  mpfr_min(la, la, lb, MPFR_RNDD);
  mpfr_min(ua, ua, ub, MPFR_RNDU);
  return CertifiedReal::hull(la, ua, p);
}

CertifiedReal max(const CertifiedReal& a, const CertifiedReal& b) {
  long p = std::max(a.prec(), b.prec());
  Scratch la(p), lb(p), ua(p), ub(p);
  a.lower(la);
  b.lower(lb);
  a.upper(ua);
  b.upper(ub);
  mpfr_max(la, la, lb, MPFR_RNDD);
  mpfr_max(ua, ua, ub, MPFR_RNDU);
  return CertifiedReal::hull(la, ua, p);
}

bool certainly_less(const CertifiedReal& a, const CertifiedReal& b) {
  if (!a.is_finite() || !b.is_finite()) return false;
  long p = std::max(a.prec(), b.prec()) + 2;
  Scratch ua(p), lb(p);
  a.upper(ua);
  b.lower(lb);
  return mpfr_less_p(ua, lb) != 0;
}

bool certainly_less_equal(const CertifiedReal& a, const CertifiedReal& b) {
  if (!a.is_finite() || !b.is_finite()) return false;
  long p = std::max(a.prec(), b.prec()) + 2;
  Scratch ua(p), lb(p);
  a.upper(ua);
  b.lower(lb);
  return mpfr_lessequal_p(ua, lb) != 0;
}

// ---------------------------------------------------------------------------
// CertifiedComplex

CertifiedComplex CertifiedComplex::exact(const mpq_class& re,
                                         const mpq_class& im, long prec) {
  return {CertifiedReal::exact(re, prec), CertifiedReal::exact(im, prec)};
}

Mag CertifiedComplex::radius() const { return re_.rad() + im_.rad(); }

std::string CertifiedComplex::to_string(int digits) const {
  return re_.to_string(digits) + " + " + im_.to_string(digits) + "*i";
}

CertifiedComplex operator+(const CertifiedComplex& a,
                           const CertifiedComplex& b) {
  return {a.re_ + b.re_, a.im_ + b.im_};
}

CertifiedComplex operator-(const CertifiedComplex& a,
                           const CertifiedComplex& b) {
  return {a.re_ - b.re_, a.im_ - b.im_};
}

CertifiedComplex operator*(const CertifiedComplex& a,
                           const CertifiedComplex& b) {
  long p = std::max(a.prec(), b.prec());
  CertifiedReal re(p), im(p);
  mpfr_srcptr ar = a.re_.mid(), ai = a.im_.mid();
  mpfr_srcptr br = b.re_.mid(), bi = b.im_.mid();
  int t1 = mpfr_fmms(const_cast<mpfr_ptr>(re.mid()), ar, br, ai, bi, MPFR_RNDN);
  int t2 = mpfr_fmma(const_cast<mpfr_ptr>(im.mid()), ar, bi, ai, br, MPFR_RNDN);
  Mag aa = Mag::upper_abs(ar), ab = Mag::upper_abs(ai);
  Mag ba = Mag::upper_abs(br), bb = Mag::upper_abs(bi);
  const Mag &ra = a.re_.rad(), &rb = a.im_.rad();
  const Mag &rc = b.re_.rad(), &rd = b.im_.rad();
  re.add_error(aa * rc + ba * ra + ra * rc + ab * rd + bb * rb + rb * rd +
               rounding_slack(re.mid(), t1));
  im.add_error(aa * rd + bb * ra + ra * rd + ab * rc + ba * rb + rb * rc +
               rounding_slack(im.mid(), t2));
  return {std::move(re), std::move(im)};
}

CertifiedComplex inv(const CertifiedComplex& z) {
  long p = z.prec();
  Mag r = z.radius();
  Scratch hyp(kRadPrec);
  mpfr_hypot(hyp, z.re_.mid(), z.im_.mid(), MPFR_RNDZ);
  Mag m_low = Mag::lower_abs(hyp);
  Mag denom_low = Mag::sub_down(m_low, r);
  CertifiedReal re(p), im(p);
  if (denom_low.is_zero()) {
    re.add_error(Mag::infinity());
    im.add_error(Mag::infinity());
    return {std::move(re), std::move(im)};
  }
  Scratch n(p + 8);
  mpfr_fmma(n, z.re_.mid(), z.re_.mid(), z.im_.mid(), z.im_.mid(), MPFR_RNDN);
  mpfr_div(const_cast<mpfr_ptr>(re.mid()), z.re_.mid(), n, MPFR_RNDN);
  mpfr_div(const_cast<mpfr_ptr>(im.mid()), z.im_.mid(), n, MPFR_RNDN);
  mpfr_neg(const_cast<mpfr_ptr>(im.mid()), im.mid(), MPFR_RNDN);
  // Three roundings with relative error at most 2^-p each.
  Mag rel = Mag::pow2(2 - p);
  Mag prop = Mag::div_up(r, Mag::mul_down(m_low, denom_low));
  re.add_error(Mag::upper_abs(re.mid()) * rel + prop);
  im.add_error(Mag::upper_abs(im.mid()) * rel + prop);
  return {std::move(re), std::move(im)};
}

CertifiedComplex operator/(const CertifiedComplex& a,
                           const CertifiedComplex& b) {
  return a * inv(b);
}

CertifiedComplex operator*(const CertifiedComplex& a, const CertifiedReal& b) {
  return {a.re_ * b, a.im_ * b};
}

CertifiedComplex operator+(const CertifiedComplex& a, const mpz_class& b) {
  return {a.re_ + b, a.im_};
}

CertifiedComplex operator-(const CertifiedComplex& a, long b) {
  return {a.re_ + mpz_class(-b), a.im_};
}

CertifiedComplex operator*(const CertifiedComplex& a, long b) {
  return {a.re_ * b, a.im_ * b};
}

CertifiedComplex exp(const CertifiedComplex& z) {
  CertifiedReal m = exp(z.re_);
  return {m * cos(z.im_), m * sin(z.im_)};
}

CertifiedComplex pow(const CertifiedComplex& z, unsigned n) {
  CertifiedComplex result(CertifiedReal::exact(1L, z.prec()),
                          CertifiedReal(z.prec()));
  CertifiedComplex base = z;
  while (n > 0) {
    if (n & 1U) result = result * base;
    n >>= 1U;
    if (n > 0) base = base * base;
  }
  return result;
}

CertifiedReal abs(const CertifiedComplex& z) {
  long p = z.prec();
  Scratch lr(p), li(p), ur(p), ui(p), rr(kRadPrec), ri(kRadPrec);
  z.re_.rad().to_mpfr(rr);
  z.im_.rad().to_mpfr(ri);
  mpfr_abs(ur, z.re_.mid(), MPFR_RNDU);
  mpfr_abs(ui, z.im_.mid(), MPFR_RNDU);
  mpfr_sub(lr, ur, rr, MPFR_RNDD);
  mpfr_sub(li, ui, ri, MPFR_RNDD);
  if (mpfr_sgn(lr.get()) < 0) mpfr_set_zero(lr, 1);
  if (mpfr_sgn(li.get()) < 0) mpfr_set_zero(li, 1);
  // |re.mid| was rounded up above; the lower ends must use the exact value.
  if (!z.re_.contains_zero()) {
    mpfr_abs(lr, z.re_.mid(), MPFR_RNDD);
    mpfr_sub(lr, lr, rr, MPFR_RNDD);
  }
  if (!z.im_.contains_zero()) {
    mpfr_abs(li, z.im_.mid(), MPFR_RNDD);
    mpfr_sub(li, li, ri, MPFR_RNDD);
  }
  mpfr_add(ur, ur, rr, MPFR_RNDU);
  mpfr_add(ui, ui, ri, MPFR_RNDU);
  Scratch lo(p + 4), hi(p + 4);
  mpfr_hypot(lo, lr, li, MPFR_RNDD);
  mpfr_hypot(hi, ur, ui, MPFR_RNDU);
  return CertifiedReal::hull(lo, hi, p);
}

void mul_add_into(CertifiedComplex& acc, const CertifiedComplex& q,
                  const mpz_class& c) {
  acc = acc * q;
  acc.re_ = acc.re_ + c;
}

}  // namespace moduli
