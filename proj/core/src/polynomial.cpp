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


#include "moduli/polynomial.hpp"

#include <sstream>
#include <utility>

#include "moduli/errors.hpp"

namespace moduli {

namespace {

template <class T>
void trim_zeros(std::vector<T>& c) {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

template <class T>
std::string format_poly(const std::vector<T>& c, const char* var) {
  if (c.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (long i = static_cast<long>(c.size()) - 1; i >= 0; --i) {
    if (sgn(c[i]) == 0) continue;
    T mag = abs(c[i]);
    if (first) {
      if (sgn(c[i]) < 0) out << "-";
    } else {
      out << (sgn(c[i]) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1);
    if (!unit || i == 0) out << mag;
    if (i >= 1) out << (unit ? "" : "*") << var;
    if (i >= 2) out << "^" << i;
  }
  return out.str();
}

mpq_class bound_to_q(const CertifiedReal& v, bool upper) {
  mpfr_t t;
  mpfr_init2(t, v.prec() + 8);
  if (upper) {
    v.upper(t);
  } else {
    v.lower(t);
  }
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), t);
  mpfr_clear(t);
  return q;
}

mpz_class floor_q(const mpq_class& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Simplest fraction in [lo, hi] with 0 < lo <= hi, as continued-fraction
// partial quotients; gives up once the denominator passes max_den.
std::optional<mpq_class> simplest_positive(mpq_class lo, mpq_class hi,
                                           const mpz_class& max_den) {
  // Convergent recurrence p/q from partial quotients.
  mpz_class p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int depth = 0; depth < 100000; ++depth) {
    mpz_class fl = floor_q(lo);
    mpz_class a;
    bool last = false;
    if (fl == lo) {
      a = fl;
      last = true;
    } else if (mpq_class(fl + 1) <= hi) {
      a = fl + 1;
      last = true;
    } else {
      a = fl;
    }
    mpz_class p2 = a * p1 + p0;
    mpz_class q2 = a * q1 + q0;
    if (q2 > max_den) return std::nullopt;
    if (last) return make_q(p2, q2);
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    mpq_class nlo = 1 / (hi - a);
    mpq_class nhi = 1 / (lo - a);
    lo = nlo;
    hi = nhi;
  }
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs)
    : c_(std::move(coeffs)) {
  trim();
}

void IntPolynomial::trim() { trim_zeros(c_); }

mpz_class IntPolynomial::coeff(long i) const {
  return (i < 0 || i > degree()) ? mpz_class(0) : c_[i];
}

CertifiedComplex IntPolynomial::eval(const CertifiedComplex& z) const {
  const long w = z.prec();
  CertifiedComplex acc(w);
  for (long i = degree(); i >= 0; --i) mul_add_into(acc, z, c_[i]);
  return acc;
}

mpz_class IntPolynomial::eval(const mpz_class& x) const {
  mpz_class acc = 0;
  for (long i = degree(); i >= 0; --i) acc = acc * x + c_[i];
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  std::vector<mpz_class> d;
  for (long i = 1; i <= degree(); ++i) d.push_back(c_[i] * i);
  return IntPolynomial(std::move(d));
}

RatPolynomial IntPolynomial::to_rational() const {
  std::vector<mpq_class> q(c_.begin(), c_.end());
  return RatPolynomial(std::move(q));
}

std::string IntPolynomial::to_string(const char* var) const {
  return format_poly(c_, var);
}

// ---------------------------------------------------------------------------
// RatPolynomial

RatPolynomial::RatPolynomial(std::vector<mpq_class> coeffs)
    : c_(std::move(coeffs)) {
  for (auto& v : c_) v.canonicalize();
  trim();
}

RatPolynomial RatPolynomial::constant(const mpq_class& v) {
  return RatPolynomial({v});
}

RatPolynomial RatPolynomial::x() { return RatPolynomial({0, 1}); }

void RatPolynomial::trim() { trim_zeros(c_); }

mpq_class RatPolynomial::coeff(long i) const {
  return (i < 0 || i > degree()) ? mpq_class(0) : c_[i];
}

CertifiedComplex RatPolynomial::eval(const CertifiedComplex& z) const {
  const long w = z.prec();
  CertifiedComplex acc(w);
  for (long i = degree(); i >= 0; --i) {
    acc = acc * z;
    acc.real() += CertifiedReal::exact(c_[i], w);
  }
  return acc;
}

mpq_class RatPolynomial::eval(const mpq_class& x) const {
  mpq_class acc = 0;
  for (long i = degree(); i >= 0; --i) acc = acc * x + c_[i];
  return acc;
}

RatPolynomial RatPolynomial::derivative() const {
  std::vector<mpq_class> d;
  for (long i = 1; i <= degree(); ++i) d.push_back(c_[i] * i);
  return RatPolynomial(std::move(d));
}

std::optional<IntPolynomial> RatPolynomial::to_integer() const {
  std::vector<mpz_class> z;
  for (const auto& v : c_) {
    if (v.get_den() != 1) return std::nullopt;
    z.push_back(v.get_num());
  }
  return IntPolynomial(std::move(z));
}

std::string RatPolynomial::to_string(const char* var) const {
  return format_poly(c_, var);
}

RatPolynomial RatPolynomial::operator-() const {
  RatPolynomial r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b) {
  std::vector<mpq_class> c(std::max(a.c_.size(), b.c_.size()));
  for (size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return RatPolynomial(std::move(c));
}

RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b) {
  return a + (-b);
}

RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> c(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    for (size_t k = 0; k < b.c_.size(); ++k) c[i + k] += a.c_[i] * b.c_[k];
  }
  return RatPolynomial(std::move(c));
}

RatPolynomial operator*(const RatPolynomial& a, const mpq_class& s) {
  std::vector<mpq_class> c = a.c_;
  for (auto& v : c) v *= s;
  return RatPolynomial(std::move(c));
}

void RatPolynomial::divmod(const RatPolynomial& a, const RatPolynomial& b,
                           RatPolynomial& q, RatPolynomial& r) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<mpq_class> rem = a.c_;
  const long db = b.degree();
  const long da = a.degree();
  std::vector<mpq_class> quo(da >= db ? da - db + 1 : 0);
  const mpq_class lead_inv = 1 / b.leading();
  for (long i = da; i >= db; --i) {
    if (sgn(rem[i]) == 0) continue;
    mpq_class t = rem[i] * lead_inv;
    quo[i - db] = t;
    for (long k = 0; k <= db; ++k) rem[i - db + k] -= t * b.c_[k];
  }
  q = RatPolynomial(std::move(quo));
  r = RatPolynomial(std::move(rem));
}

RatPolynomial operator%(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial q, r;
  RatPolynomial::divmod(a, b, q, r);
  return r;
}

RatPolynomial gcd(RatPolynomial a, RatPolynomial b) {
  while (!b.is_zero()) {
    RatPolynomial r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (1 / a.leading());
}

std::optional<RatPolynomial> inverse_mod(const RatPolynomial& a,
                                         const RatPolynomial& m) {
  // Extended Euclid tracking only the coefficient of a.
  RatPolynomial r0 = m, r1 = a % m;
  RatPolynomial s0, s1 = RatPolynomial::constant(1);
  while (!r1.is_zero()) {
    RatPolynomial q, r;
    RatPolynomial::divmod(r0, r1, q, r);
    RatPolynomial s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) return std::nullopt;
  return (s0 * (1 / r0.leading())) % m;
}

RatPolynomial compose_mod(const RatPolynomial& p, const RatPolynomial& g,
                          const RatPolynomial& m) {
  RatPolynomial acc;
  const RatPolynomial gm = g % m;
  for (long i = p.degree(); i >= 0; --i) {
    acc = (acc * gm) % m;
    acc = acc + RatPolynomial::constant(p.coeff(i));
  }
  return acc % m;
}

mpz_class quadratic_discriminant(const IntPolynomial& p) {
  if (p.degree() != 2) {
    throw DomainError("quadratic_discriminant: degree must be 2");
  }
  return p.coeff(1) * p.coeff(1) - 4 * p.coeff(2) * p.coeff(0);
}

std::optional<mpq_class> rational_reconstruct(const CertifiedReal& v,
                                              const mpz_class& max_den) {
  if (!v.is_finite()) return std::nullopt;
  mpq_class lo = bound_to_q(v, false);
  mpq_class hi = bound_to_q(v, true);
  if (sgn(lo) <= 0 && sgn(hi) >= 0) return mpq_class(0);
  if (sgn(hi) < 0) {
    auto r = simplest_positive(-hi, -lo, max_den);
    if (r) return mpq_class(-*r);
    return std::nullopt;
  }
  return simplest_positive(lo, hi, max_den);
}

}  // namespace moduli
