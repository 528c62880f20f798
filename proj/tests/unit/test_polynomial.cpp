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


#include <doctest.h>

#include <random>

#include "moduli/errors.hpp"
#include "moduli/polynomial.hpp"

using namespace moduli;

namespace {

RatPolynomial random_poly(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<long> num(-50, 50), den(1, 9);
  std::vector<mpq_class> c;
  for (int i = 0; i <= degree; ++i) c.push_back(make_q(num(rng), den(rng)));
  if (sgn(c.back()) == 0) c.back() = 1;
  return RatPolynomial(c);
}

}  // namespace

TEST_CASE("integer polynomial basics") {
  IntPolynomial h({mpz_class(-121287375), mpz_class(191025), mpz_class(1)});
  CHECK(h.degree() == 2);
  CHECK(h.is_monic());
  CHECK(h.eval(mpz_class(0)) == -121287375);
  CHECK(h.derivative() == IntPolynomial({mpz_class(191025), mpz_class(2)}));
  CHECK(h.to_string() == "X^2 + 191025*X - 121287375");
  CHECK(quadratic_discriminant(h) == mpz_class(191025) * 191025 + 4 * mpz_class(121287375));
  CHECK_THROWS_AS(quadratic_discriminant(IntPolynomial({mpz_class(1), mpz_class(1)})),
                  DomainError);
  CertifiedComplex z(CertifiedReal::exact(2L, 64), CertifiedReal::exact(1L, 64));
  auto v = IntPolynomial({mpz_class(1), mpz_class(0), mpz_class(1)}).eval(z);  // z^2 + 1
  CHECK(v.real().contains(mpz_class(4)));
  CHECK(v.imag().contains(mpz_class(4)));
}

TEST_CASE("division identity a = q b + r with deg r < deg b") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    auto a = random_poly(rng, 1 + t % 7);
    auto b = random_poly(rng, t % 4);
    RatPolynomial q, r;
    RatPolynomial::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
    CHECK(a % b == r);
  }
  CHECK_THROWS_AS(RatPolynomial::x() % RatPolynomial(), DomainError);
}

TEST_CASE("gcd and modular inverse") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    auto common = random_poly(rng, 1 + t % 2);
    auto a = random_poly(rng, 2) * common;
    auto b = random_poly(rng, 3) * common;
    auto g = gcd(a, b);
    CHECK(g.leading() == 1);
    CHECK((a % g).is_zero());
    CHECK((b % g).is_zero());
    CHECK((common % g).is_zero());
    CHECK_FALSE(inverse_mod(a, b).has_value());
  }
  // X^3 - 2 is irreducible, so every nonzero lower-degree element is a unit.
  RatPolynomial m({mpq_class(-2), 0, 0, 1});
  for (int t = 0; t < 50; ++t) {
    auto a = random_poly(rng, t % 3);
    auto inv = inverse_mod(a, m);
    REQUIRE(inv.has_value());
    CHECK((a * *inv) % m == RatPolynomial::constant(1));
  }
}

TEST_CASE("composition modulo a polynomial") {
  // Roots of X^2 + X + 1 are swapped by X -> -1 - X.
  RatPolynomial m({mpq_class(1), 1, 1});
  RatPolynomial g({mpq_class(-1), -1});
  CHECK(compose_mod(m, g, m).is_zero());
  CHECK(compose_mod(m, RatPolynomial::x(), m).is_zero());
  CHECK_FALSE(compose_mod(m, RatPolynomial::constant(2), m).is_zero());
  // Against direct evaluation at rationals: (p o g)(t) = p(g(t)) when m = 0.
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    auto p = random_poly(rng, 4);
    auto h = random_poly(rng, 2);
    RatPolynomial lin({mpq_class(t), 1});  // X + t, root -t
    auto c = compose_mod(p, h, lin);
    CHECK(c.degree() <= 0);
    CHECK(c.eval(mpq_class(-t)) == p.eval(h.eval(mpq_class(-t))));
  }
}

TEST_CASE("rational reconstruction picks the simplest fraction") {
  auto v = CertifiedReal::exact(make_q(355, 113), 128);
  auto q = rational_reconstruct(v, 1000);
  REQUIRE(q.has_value());
  CHECK(*q == make_q(355, 113));
  CHECK_FALSE(rational_reconstruct(v, 100).has_value());
  auto pi = CertifiedReal::pi(128);
  CHECK_FALSE(rational_reconstruct(pi, mpz_class(1000000)).has_value());
  auto neg = CertifiedReal::exact(make_q(-277729, 894824), 128);
  auto r = rational_reconstruct(neg, mpz_class(1000000));
  REQUIRE(r.has_value());
  CHECK(*r == make_q(-277729, 894824));
}

TEST_CASE("conversions") {
  RatPolynomial p({make_q(4, 2), mpq_class(-3), mpq_class(1)});
  auto ip = p.to_integer();
  REQUIRE(ip.has_value());
  CHECK(*ip == IntPolynomial({mpz_class(2), mpz_class(-3), mpz_class(1)}));
  CHECK_FALSE(RatPolynomial({make_q(1, 2)}).to_integer().has_value());
  CHECK(ip->to_rational() == p);
  CHECK(p.derivative() == RatPolynomial({mpq_class(-3), mpq_class(2)}));
  CHECK(RatPolynomial({mpq_class(0), mpq_class(0)}).is_zero());
}
