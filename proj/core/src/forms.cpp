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

#include "moduli/forms.hpp"

#include <cmath>
#include <numeric>

#include "moduli/errors.hpp"

namespace moduli {

namespace {

long mod4(long n) { return ((n % 4) + 4) % 4; }

void check_quadratic(const QuadraticNumber& x) {
  if (x.a <= 0 || x.disc >= 0 || (mod4(x.disc) != 0 && mod4(x.disc) != 1)) {
    throw DomainError("not an imaginary quadratic number");
  }
  mpz_class num = mpz_class(x.b) * x.b - x.disc;
  if (num % (4 * x.a) != 0) {
    throw DomainError("b^2 - disc is not divisible by 4a");
  }
}

bool same_number(const QuadraticNumber& x, const QuadraticNumber& y) {
  return make_q(-x.b, 2 * x.a) == make_q(-y.b, 2 * y.a) &&
         make_q(-x.disc, 4 * x.a * x.a) == make_q(-y.disc, 4 * y.a * y.a);
}

// Im(x) == Im(y)  <=>  a'^2 |D| == a^2 |D'|.
bool equal_imag(const QuadraticNumber& x, const QuadraticNumber& y) {
  mpz_class l = mpz_class(y.a) * y.a * (-x.disc);
  mpz_class r = mpz_class(x.a) * x.a * (-y.disc);
  return l == r;
}

// Im(x) < Im(y)  <=>  a'^2 |D| < a^2 |D'|.
bool smaller_imag(const QuadraticNumber& x, const QuadraticNumber& y) {
  mpz_class l = mpz_class(y.a) * y.a * (-x.disc);
  mpz_class r = mpz_class(x.a) * x.a * (-y.disc);
  return l < r;
}

}  // namespace

long square_part_root(long n) {
  long s = 1;
  for (long p = 2; p * p <= n; ++p) {
    while (n % (p * p) == 0) {
      n /= p * p;
      s *= p;
    }
  }
  return s;
}

Discriminant validate_discriminant(long n) {
  if (n >= 0 || (mod4(n) != 0 && mod4(n) != 1)) throw NotADiscriminant(n);
  long s = square_part_root(-n);
  long d0 = n / (s * s);  // squarefree, negative
  Discriminant d;
  d.value = n;
  if (mod4(d0) == 1) {
    d.fundamental = d0;
    d.conductor = s;
  } else {
    d.fundamental = 4 * d0;
    d.conductor = s / 2;
  }
  return d;
}

const char* to_string(Dominance d) {
  switch (d) {
    case Dominance::kDominant:
      return "dominant";
    case Dominance::kSubdominant:
      return "subdominant";
    case Dominance::kGeneric:
      return "generic";
  }
  return "generic";
}

std::string ReducedForm::to_string() const {
  return "(" + std::to_string(a) + "," + std::to_string(b) + "," +
         std::to_string(c) + ")";
}

std::vector<ReducedForm> reduced_forms(const Discriminant& d) {
  std::vector<ReducedForm> out;
  const long n = d.abs();
  for (long a = 1; 3 * a * a <= n; ++a) {
    for (long b = -a + 1; b <= a; ++b) {
      long num = b * b + n;
      if (num % (4 * a) != 0) continue;
      long c = num / (4 * a);
      if (c < a || (c == a && b < 0)) continue;
      if (std::gcd(std::gcd(a, std::labs(b)), c) != 1) continue;
      out.push_back({a, b, c, d});
    }
  }
  return out;
}

long class_number(const Discriminant& d) {
  return static_cast<long>(reduced_forms(d).size());
}

DominanceCensus dominance_census(const Discriminant& d) {
  DominanceCensus c;
  for (const auto& f : reduced_forms(d)) {
    if (f.a == 1) ++c.dominant;
    if (f.a == 2) ++c.subdominant;
  }
  return c;
}

CertifiedComplex cm_point(const ReducedForm& f, long prec) {
  CertifiedReal im = sqrt(CertifiedReal::exact(f.disc.abs(), prec + 8));
  im = im / (2 * f.a);
  return {CertifiedReal::exact(make_q(f.b, 2 * f.a), prec), im.with_prec(prec)};
}

QuadraticSurd make_surd(const mpq_class& coeff, const mpz_class& radicand) {
  QuadraticSurd s;
  s.coeff = coeff;
  s.radicand = radicand;
  if (radicand <= 0) throw DomainError("surd radicand must be positive");
  mpz_class r = radicand;
  for (mpz_class p = 2; p * p <= r; ++p) {
    while (r % (p * p) == 0) {
      r /= p * p;
      s.coeff *= p;
    }
  }
  s.radicand = r;
  s.coeff.canonicalize();
  return s;
}

CertifiedReal QuadraticSurd::to_real(long prec) const {
  return CertifiedReal::exact(coeff, prec + 8) *
         sqrt(CertifiedReal::exact(radicand, prec + 8));
}

std::string QuadraticSurd::to_string() const {
  if (radicand == 1) return coeff.get_str();
  return coeff.get_str() + "*sqrt(" + radicand.get_str() + ")";
}

QuadraticSeparation separate_quadratic(const QuadraticNumber& x,
                                       const QuadraticNumber& y) {
  check_quadratic(x);
  check_quadratic(y);
  if (same_number(x, y)) throw DegenerateInput("separate_quadratic: alpha == alpha'");
  QuadraticSeparation out;
  if (equal_imag(x, y)) {
    // Im(x) / (|D||D'|)^(1/4) collapses to 1 / (2 sqrt(a a')).
    out.branch = QuadraticSeparation::Branch::kEqualImag;
    out.bound = make_surd(make_q(1, 2 * x.a * y.a), mpz_class(x.a * y.a));
    return out;
  }
  // With m the number of smaller imaginary part and o the other one,
  // 2 Im Im' min / (|D||D'|) = 1 / (4 a_m^2 a_o sqrt|D_o|).
  const QuadraticNumber& m = smaller_imag(x, y) ? x : y;
  const QuadraticNumber& o = smaller_imag(x, y) ? y : x;
  out.branch = QuadraticSeparation::Branch::kUnequalImag;
  mpz_class den = mpz_class(4) * m.a * m.a * o.a * (-o.disc);
  out.bound = make_surd(make_q(1, den), mpz_class(-o.disc));
  return out;
}

QuadraticSeparation separate_quadratic_same_disc(const QuadraticNumber& x,
                                                 const QuadraticNumber& y) {
  check_quadratic(x);
  check_quadratic(y);
  if (x.disc != y.disc) throw DomainError("discriminants differ");
  if (same_number(x, y)) throw DegenerateInput("separate_quadratic: alpha == alpha'");
  QuadraticSeparation out;
  if (x.a == y.a) {
    out.branch = QuadraticSeparation::Branch::kEqualImag;
    out.bound = make_surd(make_q(1, 2 * x.a), mpz_class(1));
  } else {
    out.branch = QuadraticSeparation::Branch::kUnequalImag;
    out.bound = make_surd(make_q(1, 8 * x.a * y.a), mpz_class(-x.disc));
  }
  return out;
}

}  // namespace moduli
