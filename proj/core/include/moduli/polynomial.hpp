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

// Exact dense polynomials over Z and Q, coefficients stored low degree first.

#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "moduli/ball.hpp"

namespace moduli {

class RatPolynomial;

class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);

  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  mpz_class coeff(long i) const;

  CertifiedComplex eval(const CertifiedComplex& z) const;
  mpz_class eval(const mpz_class& x) const;
  IntPolynomial derivative() const;
  RatPolynomial to_rational() const;
  std::string to_string(const char* var = "X") const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void trim();
  std::vector<mpz_class> c_;
};

class RatPolynomial {
 public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<mpq_class> coeffs);
  static RatPolynomial constant(const mpq_class& v);
  static RatPolynomial x();

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<mpq_class>& coeffs() const { return c_; }
  mpq_class coeff(long i) const;
  const mpq_class& leading() const { return c_.back(); }

  CertifiedComplex eval(const CertifiedComplex& z) const;
  mpq_class eval(const mpq_class& x) const;
  RatPolynomial derivative() const;
  // Integer polynomial when every coefficient is integral.
  std::optional<IntPolynomial> to_integer() const;
  std::string to_string(const char* var = "X") const;

  RatPolynomial operator-() const;
  friend RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator*(const RatPolynomial& a, const mpq_class& s);
  friend bool operator==(const RatPolynomial&, const RatPolynomial&) = default;

  // Euclidean division; throws DomainError for a zero divisor.
  static void divmod(const RatPolynomial& a, const RatPolynomial& b,
                     RatPolynomial& q, RatPolynomial& r);
  friend RatPolynomial operator%(const RatPolynomial& a, const RatPolynomial& b);

 private:
  void trim();
  std::vector<mpq_class> c_;
};

// Monic gcd.
RatPolynomial gcd(RatPolynomial a, RatPolynomial b);
// Inverse of a modulo m; nullopt when gcd(a, m) != 1.
std::optional<RatPolynomial> inverse_mod(const RatPolynomial& a,
                                         const RatPolynomial& m);
// p(g) mod m, by Horner with reduction at each step.
RatPolynomial compose_mod(const RatPolynomial& p, const RatPolynomial& g,
                          const RatPolynomial& m);

// b^2 - 4ac for a degree-2 polynomial; throws DomainError otherwise.
mpz_class quadratic_discriminant(const IntPolynomial& p);

// Continued-fraction reconstruction: the simplest fraction inside the
// enclosure, accepted when its denominator is at most max_den.
std::optional<mpq_class> rational_reconstruct(const CertifiedReal& v,
                                              const mpz_class& max_den);

}  // namespace moduli
